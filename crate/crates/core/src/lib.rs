//! Desk-scale lifecycle management for AI-generated content products.
//!
//! The crate provides an append-only signed-transaction ledger with
//! delegated-proof-of-stake block production, product registration with
//! fraud-proof challenges adjudicated by image-similarity metrics,
//! hash-time-locked funds/ownership exchanges, multi-weight subjective-logic
//! reputation for edge service provider selection, and a deterministic
//! multi-agent simulator that drives all of it.

pub mod crypto;
pub mod encoding;
pub mod errors;
pub mod rng;
pub mod sim;
pub mod similarity;

pub use crypto::{Address, Digest, KeyPair, PublicKey, SignatureBytes, SYSTEM};
pub use errors::{Error, Result};
pub use similarity::{GrayImage, Hash64, SimilarityThresholds, SimilarityTuple};
