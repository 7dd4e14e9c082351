//! Signature-based Groebner bases (Schreyer order, syzygy criterion) and the
//! Macaulay-matrix engine.

mod macaulay;
mod signature;

pub use macaulay::{
    build_macaulay, complexity_estimate, macaulay_bound, macaulay_gb, monomial_count,
    MacaulayMatrix,
};
pub use signature::{f5_gb, LabeledPoly, SchreyerOrder, Signature};
