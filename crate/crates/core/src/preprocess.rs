//! Dehazing and illumination preprocessing.
//!
//! Dehazing follows the dark-channel prior: the dark channel of a
//! haze-free outdoor patch is near zero, so the per-window minimum of a
//! hazed image exposes the haze veil. Atmospheric light is estimated
//! from the haziest pixels, transmission from the normalized dark
//! channel, and the scene is recovered by inverting the scattering
//! model with a transmission floor `t0`.
//!
//! Illumination adjustment is a linear per-channel map in 8-bit units,
//! with two presets: `night` brightens (gain 1.5), `noon` reduces
//! exposure (gain 0.8, offset -10).

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::image::{Image, CHANNELS};

/// Parameters of the dark-channel dehazing pipeline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DehazeParams {
    /// Odd side length of the dark-channel window.
    pub window: usize,
    /// Haze retention factor in (0, 1]; 1.0 removes haze completely.
    pub omega: f32,
    /// Transmission floor.
    pub t0: f32,
    /// Fraction of brightest dark-channel pixels used to estimate the
    /// atmospheric light.
    pub top_fraction: f32,
}

impl Default for DehazeParams {
    fn default() -> Self {
        Self {
            window: 15,
            omega: 0.95,
            t0: 0.1,
            top_fraction: 0.001,
        }
    }
}

impl DehazeParams {
    pub fn validate(&self) -> Result<()> {
        if self.window == 0 || self.window % 2 == 0 {
            return Err(invalid(format!("window {} must be odd and >= 1", self.window)));
        }
        if !(self.omega >= 0.0 && self.omega <= 1.0) {
            return Err(invalid(format!("omega {} must be in [0, 1]", self.omega)));
        }
        if !(self.t0 > 0.0 && self.t0 < 1.0) {
            return Err(invalid(format!("t0 {} must be in (0, 1)", self.t0)));
        }
        if !(self.top_fraction > 0.0 && self.top_fraction <= 1.0) {
            return Err(invalid(format!(
                "top_fraction {} must be in (0, 1]",
                self.top_fraction
            )));
        }
        Ok(())
    }
}

/// Linear illumination adjustment in 8-bit units: `val = alpha * col + beta`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct IllumParams {
    /// Multiplicative gain; must be positive.
    pub alpha: f32,
    /// Additive offset in 8-bit units.
    pub beta: f32,
}

impl IllumParams {
    /// Night preset: brighten so color features separate.
    pub fn night() -> Self {
        Self { alpha: 1.5, beta: 0.0 }
    }

    /// Noon preset: reduce overall exposure.
    pub fn noon() -> Self {
        Self { alpha: 0.8, beta: -10.0 }
    }
}

/// Per-pixel minimum over the three channels.
fn channel_min(img: &Image) -> Vec<f32> {
    img.data()
        .chunks_exact(CHANNELS)
        .map(|px| px[0].min(px[1]).min(px[2]))
        .collect()
}

/// 2-D minimum filter with a centered `window`x`window` box, clipped at
/// the borders. Separable: a horizontal pass then a vertical pass.
fn min_filter(map: &[f32], width: usize, height: usize, window: usize) -> Vec<f32> {
    let r = window / 2;
    let mut horiz = vec![0.0f32; map.len()];
    for y in 0..height {
        let row = &map[y * width..(y + 1) * width];
        let out = &mut horiz[y * width..(y + 1) * width];
        for x in 0..width {
            let lo = x.saturating_sub(r);
            let hi = (x + r).min(width - 1);
            out[x] = row[lo..=hi].iter().copied().fold(f32::INFINITY, f32::min);
        }
    }
    let mut out = vec![0.0f32; map.len()];
    for y in 0..height {
        let lo = y.saturating_sub(r);
        let hi = (y + r).min(height - 1);
        for x in 0..width {
            let mut m = f32::INFINITY;
            for yy in lo..=hi {
                m = m.min(horiz[yy * width + x]);
            }
            out[y * width + x] = m;
        }
    }
    out
}

/// Dark channel: per-pixel minimum over channels and over the window
/// centered at the pixel (window clipped at image borders).
///
/// Returns a `width * height` row-major map in `[0, 1]`.
pub fn dark_channel(img: &Image, window: usize) -> Result<Vec<f32>> {
    if window == 0 || window % 2 == 0 {
        return Err(invalid(format!("window {window} must be odd and >= 1")));
    }
    let mins = channel_min(img);
    Ok(min_filter(&mins, img.width(), img.height(), window))
}

/// Atmospheric light: mean color of the pixels whose dark-channel value
/// falls in the brightest `top_fraction` (at least one pixel). Each
/// channel is floored at 1/255 so later normalization stays finite.
pub fn estimate_atmosphere(img: &Image, dark: &[f32], top_fraction: f32) -> Result<[f32; 3]> {
    let n = img.width() * img.height();
    if dark.len() != n {
        return Err(invalid(format!(
            "dark-channel length {} does not match image {}x{}",
            dark.len(),
            img.width(),
            img.height()
        )));
    }
    if !(top_fraction > 0.0 && top_fraction <= 1.0) {
        return Err(invalid(format!("top_fraction {top_fraction} must be in (0, 1]")));
    }
    let take = (((n as f64) * f64::from(top_fraction)) as usize).max(1).min(n);
    let mut order: Vec<usize> = (0..n).collect();
    // Brightest dark-channel values first; index breaks ties so the
    // selection is deterministic.
    order.sort_by(|&a, &b| dark[b].partial_cmp(&dark[a]).unwrap().then(a.cmp(&b)));
    let mut acc = [0.0f64; 3];
    for &i in &order[..take] {
        let (x, y) = (i % img.width(), i / img.width());
        for (c, a) in acc.iter_mut().enumerate() {
            *a += f64::from(img.get(x, y, c));
        }
    }
    let floor = 1.0 / 255.0;
    Ok([
        ((acc[0] / take as f64) as f32).max(floor),
        ((acc[1] / take as f64) as f32).max(floor),
        ((acc[2] / take as f64) as f32).max(floor),
    ])
}

/// Transmission estimate `t = 1 - omega * dark(I / A)`, clipped to
/// `[0, 1]`. The ratio image `I / A` may exceed 1, so its windowed
/// minimum is taken on raw values, not on a clamped `Image`.
pub fn estimate_transmission(
    img: &Image,
    atmosphere: [f32; 3],
    window: usize,
    omega: f32,
) -> Result<Vec<f32>> {
    if atmosphere.iter().any(|&a| a <= 0.0) {
        return Err(invalid("atmospheric light channel must be positive"));
    }
    if window == 0 || window % 2 == 0 {
        return Err(invalid(format!("window {window} must be odd and >= 1")));
    }
    let ratio_min: Vec<f32> = img
        .data()
        .chunks_exact(CHANNELS)
        .map(|px| {
            (px[0] / atmosphere[0])
                .min(px[1] / atmosphere[1])
                .min(px[2] / atmosphere[2])
        })
        .collect();
    let filtered = min_filter(&ratio_min, img.width(), img.height(), window);
    Ok(filtered
        .into_iter()
        .map(|d| (1.0 - omega * d).clamp(0.0, 1.0))
        .collect())
}

/// Scene recovery `J = (I - A) / max(t, t0) + A`, clamped to `[0, 1]`.
///
/// Evaluated as `I/t' + (A - A/t')` with `t' = max(t, t0)`, which makes
/// `t == 1` reproduce the input bit for bit.
pub fn recover(img: &Image, atmosphere: [f32; 3], transmission: &[f32], t0: f32) -> Result<Image> {
    let n = img.width() * img.height();
    if transmission.len() != n {
        return Err(invalid(format!(
            "transmission length {} does not match image {}x{}",
            transmission.len(),
            img.width(),
            img.height()
        )));
    }
    if !(t0 > 0.0 && t0 < 1.0) {
        return Err(invalid(format!("t0 {t0} must be in (0, 1)")));
    }
    let mut data = Vec::with_capacity(n * CHANNELS);
    for (px, &t) in img.data().chunks_exact(CHANNELS).zip(transmission) {
        let tt = t.max(t0);
        for c in 0..CHANNELS {
            let a = atmosphere[c];
            data.push((px[c] / tt + (a - a / tt)).clamp(0.0, 1.0));
        }
    }
    Image::new(img.width(), img.height(), data)
}

/// Full dark-channel dehazing: dark channel, atmospheric light,
/// transmission, recovery.
pub fn dehaze(img: &Image, params: &DehazeParams) -> Result<Image> {
    params.validate()?;
    let dark = dark_channel(img, params.window)?;
    let atmosphere = estimate_atmosphere(img, &dark, params.top_fraction)?;
    let transmission = estimate_transmission(img, atmosphere, params.window, params.omega)?;
    recover(img, atmosphere, &transmission, params.t0)
}

/// Linear illumination adjustment `val = alpha * col + beta` per
/// channel in 8-bit units, clamped back into range.
pub fn illum_adjust(img: &Image, params: &IllumParams) -> Result<Image> {
    if !(params.alpha > 0.0) {
        return Err(invalid(format!("alpha {} must be positive", params.alpha)));
    }
    let offset = params.beta / 255.0;
    let data = img
        .data()
        .iter()
        .map(|&v| (params.alpha * v + offset).clamp(0.0, 1.0))
        .collect();
    Image::new(img.width(), img.height(), data)
}
