use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 8]>;

/// A power product `x_1^{e_1} ... x_k^{e_k}` with cached total degree.
///
/// `Ord` is the degree reverse lexicographic order with variable 1 largest
/// and the last variable smallest. In `R' = R[y]` the homogenizing variable is
/// stored last, so the same comparator realizes the homogenized ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u32]) -> Self {
        let degree = exps.iter().sum();
        Self {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: other.nvars(),
            });
        }
        let mut exps = Exps::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, e| acc.checked_add(*e))
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent of the last variable (`y` in a homogenized ring).
    pub fn last_exp(&self) -> u32 {
        *self.exps.last().unwrap_or(&0)
    }

    /// Drops the last coordinate.
    pub fn drop_last(&self) -> Monomial {
        let exps: Exps = self.exps[..self.exps.len() - 1].iter().copied().collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// Appends a last coordinate with exponent `e`.
    pub fn push_last(&self, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial {
            exps,
            degree: self.degree + e,
        }
    }

    /// Monomials of total degree exactly `d` in `nvars` variables, descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::new(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Monomials of total degree at most `d`, descending.
    pub fn all_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        (0..=d)
            .rev()
            .flat_map(|k| Monomial::all_of_degree(nvars, k))
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            if a != b {
                // larger exponent in the rightmost differing variable is smaller
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Ok(Monomial::new(&v))
    }
}

/// Which ring an ordering lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderingKind {
    /// DRL on `x_1 > ... > x_n`.
    Drl,
    /// Homogenization of DRL on `x_1 > ... > x_n > y`.
    HomogenizedDrl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderingSpec {
    pub kind: OrderingKind,
    /// Number of `x` variables.
    pub nvars: usize,
}

impl OrderingSpec {
    pub fn drl(nvars: usize) -> Self {
        Self {
            kind: OrderingKind::Drl,
            nvars,
        }
    }

    pub fn homogenized(nvars: usize) -> Self {
        Self {
            kind: OrderingKind::HomogenizedDrl,
            nvars,
        }
    }

    pub fn arity(&self) -> usize {
        match self.kind {
            OrderingKind::Drl => self.nvars,
            OrderingKind::HomogenizedDrl => self.nvars + 1,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.arity() {
                return Err(Error::ArityMismatch {
                    expected: self.arity(),
                    got: m.nvars(),
                });
            }
        }
        Ok(a.cmp(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    /// Literal two-condition homogenized comparison: total degree, then the
    /// X-parts under DRL on X.
    fn homogenized_reference(a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            let (xa, xb) = (a.drop_last(), b.drop_last());
            drl_reference(&xa, &xb)
        })
    }

    fn drl_reference(a: &Monomial, b: &Monomial) -> Ordering {
        let da: u32 = a.exps().iter().sum();
        let db: u32 = b.exps().iter().sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..a.nvars()).rev() {
            if a.exps()[i] != b.exps()[i] {
                return b.exps()[i].cmp(&a.exps()[i]);
            }
        }
        Ordering::Equal
    }

    #[test]
    fn drl_examples() {
        let drl = OrderingSpec::drl(3);
        assert_eq!(
            drl.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            drl.compare(&m(&[1, 1, 0]), &m(&[2, 0, 0])).unwrap(),
            Ordering::Less
        );
        let hom = OrderingSpec::homogenized(3);
        // y*x3^2 vs x2*x3^2
        assert_eq!(
            hom.compare(&m(&[0, 0, 2, 1]), &m(&[0, 1, 2, 0])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn arity_is_checked() {
        let drl = OrderingSpec::drl(3);
        assert_eq!(
            drl.compare(&m(&[1, 0]), &m(&[0, 1, 0])),
            Err(Error::ArityMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn enumerates_degree_pieces() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms[0], m(&[2, 0, 0]));
        assert_eq!(Monomial::all_up_to_degree(4, 3).len(), 35);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|v| Monomial::new(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn ordering_axioms(a in mono(4), b in mono(4), c in mono(4)) {
            // totality and antisymmetry
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            // multiplicativity
            if a < b {
                prop_assert!(a.mul(&c) < b.mul(&c));
            }
            // transitivity
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
            prop_assert!(Monomial::one(4) <= a);
        }

        #[test]
        fn matches_reference_orders(a in mono(4), b in mono(4)) {
            prop_assert_eq!(a.cmp(&b), homogenized_reference(&a, &b));
            prop_assert_eq!(a.cmp(&b), drl_reference(&a, &b));
        }

        #[test]
        fn homogenized_restricts_to_drl(a in mono(3), b in mono(3)) {
            let (ha, hb) = (a.push_last(0), b.push_last(0));
            prop_assert_eq!(ha.cmp(&hb), drl_reference(&a, &b));
        }

        #[test]
        fn lcm_and_quotient(a in mono(4), b in mono(4)) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            let q = a.quotient_of(&l).unwrap();
            prop_assert_eq!(q.mul(&a), l.clone());
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
        }
    }
}
