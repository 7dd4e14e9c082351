//! Groebner bases over prime fields and the Hilbert-series machinery for
//! (affine) cryptographic semi-regular sequences.

pub mod buchberger;
pub mod error;
pub mod f5;
pub mod gf;
pub mod koszul;
pub mod linalg;
pub mod polyring;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{FieldElem, FieldSpec};
pub use polyring::{Monomial, OrderingKind, OrderingSpec, PolySequence, Polynomial, Ring, RingCtx};
