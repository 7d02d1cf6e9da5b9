//! Lifelong spatio-temporal property valuation engine.
//!
//! The pipeline: house records are organized into a heterogeneous information
//! network (HIN); meta-path and meta-graph instance counts yield a weighted
//! similarity adjacency over houses; the adjacency is split into overlapping
//! subgraphs, each trained by a GCN-LSTM unit on a sliding monthly window with
//! distance regularization tying the overlap embeddings together; replay
//! coefficients of the windowed multitask loss are tuned by a rewarded local
//! search.
//!
//! Modules map onto pipeline stages:
//! - [`data`]: domain types, CSV ingestion, the synthetic market generator
//! - [`hin`]: typed graph, meta-structure counting, similarity composition
//! - [`features`]: one-hot + z-score encoding and PCA to the attribute matrix
//! - [`partition`]: overlapping subgraph partition and the overlap registry
//! - [`tensor`]: reverse-mode autodiff tape and the Adam optimizer
//! - [`model`]: GCN layer, LSTM unit, MLP head (tape-recorded)
//! - [`lifelong`]: sliding-window trainer, losses, checkpoints, run loop
//! - [`tuner`]: MDP-style replay-coefficient tuner
//! - [`eval`]: GER/RMSE/MAE reports, naive baseline, plot-data emission

pub mod config;
pub mod data;
pub mod error;
pub mod eval;
pub mod features;
pub mod hin;
pub mod lifelong;
pub mod model;
pub mod partition;
pub mod tensor;
pub mod tuner;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
