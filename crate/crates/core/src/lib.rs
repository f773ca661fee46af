//! Computational components of the SMNN-MFR vehicle-color detection pipeline.
//!
//! The crate is organized around the pipeline stages:
//!
//! 1. **preprocess** — dark-channel dehazing and linear illumination
//!    adjustment over single images or whole corpora.
//! 2. **kernel** — a minimal dense tensor library (conv2d, pooling,
//!    relu, elementwise add, nearest upsampling) sufficient to run the
//!    backbone and FPN forward at desk scale.
//! 3. **backbone** — declarative VCR-ResNet construction, exact
//!    parameter counting, static shape inference, and a toy-scale
//!    forward producing stage outputs C2–C5.
//! 4. **fpn** — multi-scale fusion: pre-fusion L2 normalization,
//!    lateral 1×1 projections, top-down nearest-neighbor merging, and
//!    3×3 smoothing, producing pyramid levels P2–P5.
//! 5. **boxes** — anchor generation, IoU, box regression
//!    encode/decode, NMS, and foreground/background assignment.
//! 6. **losses** — VCR-Loss plus the CE/L1/MSE/Focal/Smooth-L1
//!    baselines, with values and analytic gradients.
//! 7. **eval** — greedy detection matching, PR curves, interpolated
//!    AP, and mAP over the 24 vehicle-color classes.
//! 8. **dataset** — JSONL annotations, validation, long-tail class
//!    statistics, and deterministic stratified 8:1:1 splitting.
//!
//! Everything is forward-only: there is no autodiff through the
//! network; the loss gradients are analytic.

pub mod backbone;
pub mod boxes;
pub mod dataset;
pub mod error;
pub mod eval;
pub mod fpn;
pub mod image;
pub mod kernel;
pub mod losses;
pub mod preprocess;

pub use error::{Error, Result};

/// Version stamp carried by every machine-readable report.
pub const SCHEMA_VERSION: u32 = 1;
