//! 8-bit RGB raster mapped to unit-interval samples.
//!
//! Files are 8-bit PNG/JPEG at the I/O boundary; in memory every sample
//! is an `f32` in `[0, 1]`, interleaved RGB, row-major.

use std::path::Path;

use crate::error::{invalid, Result};

pub const CHANNELS: usize = 3;

/// An RGB image with unit-interval samples.
///
/// Invariants: `width >= 1`, `height >= 1`, `data.len() == width *
/// height * 3`, and every sample stays in `[0, 1]` (operations clamp).
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    width: usize,
    height: usize,
    data: Vec<f32>,
}

impl Image {
    /// Builds an image from interleaved RGB samples, clamping each one
    /// into `[0, 1]`. Non-finite samples and empty dimensions are
    /// rejected.
    pub fn new(width: usize, height: usize, data: Vec<f32>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(invalid(format!("image dimensions {width}x{height} are empty")));
        }
        if data.len() != width * height * CHANNELS {
            return Err(invalid(format!(
                "data length {} does not match {width}x{height}x3",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(invalid("image sample is not finite"));
        }
        let data = data.into_iter().map(|v| v.clamp(0.0, 1.0)).collect();
        Ok(Self { width, height, data })
    }

    /// Constant-color image.
    pub fn constant(width: usize, height: usize, rgb: [f32; 3]) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height * CHANNELS);
        for _ in 0..width * height {
            data.extend_from_slice(&rgb);
        }
        Self::new(width, height, data)
    }

    /// Maps an 8-bit interleaved RGB buffer to unit-interval samples.
    pub fn from_u8(width: usize, height: usize, bytes: &[u8]) -> Result<Self> {
        if bytes.len() != width * height * CHANNELS {
            return Err(invalid(format!(
                "byte length {} does not match {width}x{height}x3",
                bytes.len()
            )));
        }
        let data = bytes.iter().map(|&b| f32::from(b) / 255.0).collect();
        Self::new(width, height, data)
    }

    /// Quantizes back to 8-bit RGB (round to nearest).
    pub fn to_u8(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|&v| (v * 255.0).round().clamp(0.0, 255.0) as u8)
            .collect()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, c: usize) -> f32 {
        self.data[(y * self.width + x) * CHANNELS + c]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, c: usize, v: f32) {
        self.data[(y * self.width + x) * CHANNELS + c] = v.clamp(0.0, 1.0);
    }

    /// Loads a PNG or JPEG file, converting to 8-bit RGB.
    pub fn load(path: &Path) -> Result<Self> {
        let img = ::image::open(path)?.to_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        Self::from_u8(w, h, img.as_raw())
    }

    /// Writes the image as PNG or JPEG depending on the extension.
    pub fn save(&self, path: &Path) -> Result<()> {
        let buf: ::image::RgbImage = ::image::ImageBuffer::from_raw(
            self.width as u32,
            self.height as u32,
            self.to_u8(),
        )
        .expect("buffer length matches dimensions");
        buf.save(path)?;
        Ok(())
    }

    /// Bilinear resize (quantizes through 8-bit, matching file-boundary
    /// semantics).
    pub fn resize(&self, width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(invalid("resize target is empty"));
        }
        let buf: ::image::RgbImage = ::image::ImageBuffer::from_raw(
            self.width as u32,
            self.height as u32,
            self.to_u8(),
        )
        .expect("buffer length matches dimensions");
        let resized = ::image::imageops::resize(
            &buf,
            width as u32,
            height as u32,
            ::image::imageops::FilterType::Triangle,
        );
        Self::from_u8(width, height, resized.as_raw())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_dimensions() {
        assert!(Image::new(0, 4, vec![]).is_err());
        assert!(Image::new(4, 0, vec![]).is_err());
    }

    #[test]
    fn rejects_length_mismatch() {
        assert!(Image::new(2, 2, vec![0.0; 11]).is_err());
    }

    #[test]
    fn clamps_out_of_range_samples() {
        let img = Image::new(1, 1, vec![-0.5, 0.5, 1.5]).unwrap();
        assert_eq!(img.data(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn u8_roundtrip_is_exact() {
        let bytes: Vec<u8> = (0..=255).collect();
        let img = Image::from_u8(16, 16, &{
            let mut b = Vec::new();
            for &v in &bytes {
                b.extend_from_slice(&[v, v, v]);
            }
            b
        })
        .unwrap();
        let back = img.to_u8();
        for (i, &v) in bytes.iter().enumerate() {
            assert_eq!(back[i * 3], v);
        }
    }
}
