//! Tabular classification toolkit.
//!
//! The crate covers the full pipeline for small-to-medium clinical-style
//! tables: delimited-text ingestion with categorical encoding
//! ([`ingest`]), feature selection and kernel-approximation transforms
//! ([`featsel`]), a roster of from-scratch classifiers ([`models`]),
//! an evaluation suite with an experiment grid runner ([`eval`]), and
//! information-gain attribute ranking ([`rank`]).
//!
//! Every random decision flows from a single master seed through
//! [`seed::derive_seed`], so whole pipelines replay exactly.

pub mod error;
pub mod eval;
pub mod featsel;
pub mod ingest;
pub mod matrix;
pub mod models;
pub mod rank;
pub mod seed;
pub mod stats;

pub use error::{Error, Result};
pub use ingest::Dataset;
pub use matrix::Matrix;
