//! Deterministic multi-agent simulator: scenario configs, synthetic images,
//! agents over an in-process message bus, scenario drivers, the exchange
//! interleaving fuzzer, and metrics emission.

pub mod images;

pub use images::{generate_image, ImageKind, IMAGE_DIM};
