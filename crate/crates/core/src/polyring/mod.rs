//! Monomials, the DRL ordering and its homogenization, sparse polynomials
//! over `F_p`, and the homogenize / dehomogenize / top-part transforms.

mod monomial;
mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

pub use monomial::{Monomial, OrderingKind, OrderingSpec};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;

/// `R = F_p[x_1..x_n]`, or `R' = R[y]` when `has_hom_var` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingCtx {
    pub field: FieldSpec,
    pub nvars: usize,
    pub has_hom_var: bool,
    pub ordering: OrderingSpec,
}

/// Shared handle to a ring context.
pub type Ring = Arc<RingCtx>;

impl RingCtx {
    pub fn affine(field: FieldSpec, nvars: usize) -> Ring {
        assert!(nvars >= 1, "a ring needs at least one variable");
        Arc::new(RingCtx {
            field,
            nvars,
            has_hom_var: false,
            ordering: OrderingSpec::drl(nvars),
        })
    }

    pub fn homogenized(field: FieldSpec, nvars: usize) -> Ring {
        assert!(nvars >= 1, "a ring needs at least one variable");
        Arc::new(RingCtx {
            field,
            nvars,
            has_hom_var: true,
            ordering: OrderingSpec::homogenized(nvars),
        })
    }

    /// Number of exponent slots, counting `y`.
    #[inline]
    pub fn arity(&self) -> usize {
        self.nvars + self.has_hom_var as usize
    }

    /// `R'` for `R`, or `R` for `R'`.
    pub fn hom_ring(&self) -> Ring {
        RingCtx::homogenized(self.field, self.nvars)
    }

    pub fn base_ring(&self) -> Ring {
        RingCtx::affine(self.field, self.nvars)
    }

    pub fn var_name(&self, i: usize) -> String {
        if self.has_hom_var && i == self.nvars {
            "y".to_string()
        } else {
            format!("x{}", i + 1)
        }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_name(i)),
                _ => parts.push(format!("{}^{}", self.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<_> = (0..self.arity()).map(|i| self.var_name(i)).collect();
        write!(f, "{}[{}]", self.field, vars.join(","))
    }
}

/// A nonempty sequence `(f_1, ..., f_m)` of nonzero polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySequence {
    polys: Vec<Polynomial>,
}

impl PolySequence {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        let first = polys.first().ok_or(Error::ZeroInput)?;
        let ring = first.ring().clone();
        for f in &polys {
            if f.is_zero() {
                return Err(Error::ZeroInput);
            }
            if **f.ring() != *ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self { polys })
    }

    pub fn ring(&self) -> &Ring {
        self.polys[0].ring()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial> {
        self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.polys.iter().map(Polynomial::degree).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(Polynomial::is_homogeneous)
    }

    /// `F^h = (f_1^h, ..., f_m^h)` in `R'`.
    pub fn homogenize(&self) -> Result<PolySequence> {
        let polys = self
            .polys
            .iter()
            .map(Polynomial::homogenize)
            .collect::<Result<Vec<_>>>()?;
        PolySequence::new(polys)
    }

    /// `F^top`, staying in `R`.
    pub fn top(&self) -> Result<PolySequence> {
        let polys = self
            .polys
            .iter()
            .map(Polynomial::top_part)
            .collect::<Result<Vec<_>>>()?;
        PolySequence::new(polys)
    }

    /// The prefix `(f_1, ..., f_k)`.
    pub fn prefix(&self, k: usize) -> Result<PolySequence> {
        PolySequence::new(self.polys[..k].to_vec())
    }
}

impl std::ops::Deref for PolySequence {
    type Target = [Polynomial];
    fn deref(&self) -> &[Polynomial] {
        &self.polys
    }
}
