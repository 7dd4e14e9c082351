use std::fmt;

use super::{Monomial, Ring};
use crate::error::{Error, Result};

/// A sparse polynomial with terms sorted strictly descending and no zero
/// coefficients, so equal polynomials have identical term lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field.from_i64(c);
        Self::term(ring, c, Monomial::one(ring.arity()))
    }

    pub fn term(ring: &Ring, c: u32, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.arity());
        let c = c % ring.field.p();
        let terms = if c == 0 { Vec::new() } else { vec![(c, m)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::term(ring, 1, Monomial::var(ring.arity(), index))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges like terms and
    /// drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(u32, Monomial)>) -> Self {
        let f = ring.field;
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(
                m.nvars(),
                ring.arity(),
                "monomial arity does not match the ring"
            );
            let c = c % f.p();
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = f.add(last.0, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.0 == 0 {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.0 == 0 {
                out.pop();
            }
        }
        Self {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Convenience constructor from signed coefficients and exponent vectors.
    pub fn from_signed(ring: &Ring, terms: &[(i64, &[u32])]) -> Self {
        let terms = terms
            .iter()
            .map(|(c, e)| (ring.field.from_i64(*c), Monomial::new(e)))
            .collect();
        Self::from_terms(ring, terms)
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<(u32, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    #[inline]
    pub fn lc(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lt(&self) -> Option<(u32, &Monomial)> {
        self.terms.first().map(|t| (t.0, &t.1))
    }

    /// Total degree; 0 for the zero polynomial. The ordering is graded, so
    /// this is the degree of the leading monomial.
    pub fn degree(&self) -> u32 {
        self.lm().map_or(0, Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.iter().all(|t| t.1.degree() == d)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (f.neg(*c), m.clone()))
            .collect();
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (f.mul(*a, c), m.clone()))
            .collect();
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, c: u32, t: &Monomial) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, m)| (f.mul(*a, c), m.mul(t)))
            .collect();
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(
                self.ring
                    .field
                    .inv(c)
                    .expect("leading coefficient is nonzero"),
            ),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, true)
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert_eq!(*self.ring, *other.ring, "polynomials from different rings");
        let f = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: u32| if negate { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].1.cmp(&b[j].1) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((sign(b[j].0), b[j].1.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(a[i].0, sign(b[j].0));
                    if c != 0 {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| (sign(*c), m.clone())));
        Self {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(*self.ring, *other.ring, "polynomials from different rings");
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &other.terms {
            acc = acc.add(&self.mul_term(*c, m));
        }
        acc
    }

    /// `S(f, g) = (L/LT(f)) f - (L/LT(g)) g` with `L = lcm(LM(f), LM(g))`.
    pub fn s_polynomial(&self, other: &Polynomial) -> Result<Polynomial> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        let (cf, mf) = self.lt().ok_or(Error::ZeroInput)?;
        let (cg, mg) = other.lt().ok_or(Error::ZeroInput)?;
        let l = mf.lcm(mg);
        let field = self.ring.field;
        let uf = mf.quotient_of(&l).expect("lm divides lcm");
        let ug = mg.quotient_of(&l).expect("lm divides lcm");
        let a = self.mul_term(field.inv(cf)?, &uf);
        let b = other.mul_term(field.inv(cg)?, &ug);
        Ok(a.sub(&b))
    }

    /// Full normal form modulo `basis`: repeatedly eliminate the largest
    /// reducible term using the first basis element (by index) whose leading
    /// monomial divides it. Zero entries of `basis` are ignored.
    pub fn reduce(&self, basis: &[Polynomial]) -> Polynomial {
        let reducers: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
        let inv_lcs: Vec<u32> = reducers
            .iter()
            .map(|g| self.ring.field.inv(g.lc().unwrap()).unwrap())
            .collect();
        self.reduce_with(|m| {
            reducers
                .iter()
                .zip(&inv_lcs)
                .find(|(g, _)| g.lm().unwrap().divides(m))
                .map(|(g, inv)| (*g, *inv))
        })
    }

    /// Normal form with a caller-supplied reducer lookup. `find` returns the
    /// reducer for a monomial together with the inverse of its leading
    /// coefficient.
    pub(crate) fn reduce_with<'a, F>(&self, mut find: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> Option<(&'a Polynomial, u32)>,
    {
        let f = self.ring.field;
        // ascending, so the leading term is at the end
        let mut work: Vec<(u32, Monomial)> = self.terms.iter().rev().cloned().collect();
        let mut rem: Vec<(u32, Monomial)> = Vec::new();
        while let Some((c, m)) = work.last() {
            match find(m) {
                Some((g, inv_lc)) => {
                    let q = g.lm().unwrap().quotient_of(m).unwrap();
                    let factor = f.mul(*c, inv_lc);
                    work = sub_multiple_ascending(f, &work, factor, &q, g);
                }
                None => rem.push(work.pop().unwrap()),
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: rem,
        }
    }

    /// Lifts `f` in `R` to `f^h = sum c_t t y^(deg f - deg t)` in `R'`.
    pub fn homogenize(&self) -> Result<Polynomial> {
        if self.ring.has_hom_var {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars,
                got: self.ring.arity(),
            });
        }
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let hom = self.ring.hom_ring();
        let d = self.degree();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.push_last(d - m.degree())))
            .collect();
        // total degree is constant, and ties compare X-parts by DRL, so order
        // is preserved
        Ok(Polynomial::from_sorted_unchecked(&hom, terms))
    }

    /// Substitutes `y = 1`, returning a polynomial in `R`. Polynomials already
    /// in `R` are returned unchanged.
    pub fn dehomogenize(&self) -> Polynomial {
        if !self.ring.has_hom_var {
            return self.clone();
        }
        let base = self.ring.base_ring();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.drop_last()))
            .collect();
        Polynomial::from_terms(&base, terms)
    }

    /// For `f` in `R`: the homogeneous component of degree `deg f`.
    /// For `h` in `R'`: `h|_{y=0}` (may be zero), kept in `R'`.
    pub fn top_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let terms: Vec<_> = if self.ring.has_hom_var {
            self.terms
                .iter()
                .filter(|t| t.1.last_exp() == 0)
                .cloned()
                .collect()
        } else {
            let d = self.degree();
            self.terms
                .iter()
                .filter(|t| t.1.degree() == d)
                .cloned()
                .collect()
        };
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Reinterprets a `y`-free polynomial of `R'` as an element of `R`.
    pub fn drop_hom_var(&self) -> Option<Polynomial> {
        if !self.ring.has_hom_var {
            return Some(self.clone());
        }
        if self.terms.iter().any(|t| t.1.last_exp() != 0) {
            return None;
        }
        Some(self.dehomogenize())
    }

    /// Views an element of `R` inside `R'` (no `y` occurrences).
    pub fn lift_to_hom_ring(&self) -> Polynomial {
        if self.ring.has_hom_var {
            return self.clone();
        }
        let hom = self.ring.hom_ring();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (*c, m.push_last(0)))
            .collect();
        Polynomial::from_sorted_unchecked(&hom, terms)
    }

    /// Terms of total degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.1.degree() == d)
            .cloned()
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

/// `work - factor * t * g` where `work` is ascending and `g` descending.
fn sub_multiple_ascending(
    f: crate::gf::FieldSpec,
    work: &[(u32, Monomial)],
    factor: u32,
    t: &Monomial,
    g: &Polynomial,
) -> Vec<(u32, Monomial)> {
    let neg = f.neg(factor);
    let mut out = Vec::with_capacity(work.len() + g.terms.len());
    let mut i = 0;
    let mut prod = g
        .terms
        .iter()
        .rev()
        .map(|(c, m)| (f.mul(*c, neg), m.mul(t)))
        .peekable();
    while i < work.len() {
        match prod.peek() {
            None => break,
            Some((pc, pm)) => match work[i].1.cmp(pm) {
                std::cmp::Ordering::Less => {
                    out.push(work[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*pc, pm.clone()));
                    prod.next();
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(work[i].0, *pc);
                    if c != 0 {
                        out.push((c, work[i].1.clone()));
                    }
                    i += 1;
                    prod.next();
                }
            },
        }
    }
    out.extend(work[i..].iter().cloned());
    out.extend(prod);
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", self.ring.fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", c, self.ring.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
