//! Dense/sparse tensor core with reverse-mode automatic differentiation.
//!
//! A [`Tape`] records primitive operations as they execute; [`Tape::backward`]
//! replays them in reverse, accumulating gradients into every tensor marked
//! trainable. Values are 64-bit floats throughout. A tape is confined to one
//! thread; parameters live outside the tape and are re-registered each pass.

mod adam;
mod tape;

pub use adam::AdamOptimizer;
pub use tape::{CsrF64, Tape, Var};
