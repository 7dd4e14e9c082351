//! Integer power series attached to polynomial systems: the semi-regular
//! Hilbert-Poincare series `[prod (1 - z^d_j) / (1 - z)^n]`, the degree of
//! regularity read off from it, and Hilbert functions of monomial ideals.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// Why a [`TruncatedSeries`] stops where it does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Truncation {
    /// The `[.]` rule fired: `next` is the first non-positive coefficient.
    ByBracket {
        #[serde(serialize_with = "ser_big")]
        next: BigInt,
    },
    /// Computed only up to the requested precision.
    ByPrecision,
}

/// Coefficients `c_0, ..., c_k` of an integer power series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    #[serde(serialize_with = "ser_big_vec")]
    pub coeffs: Vec<BigInt>,
    pub truncation: Truncation,
}

impl TruncatedSeries {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_bracketed(&self) -> bool {
        matches!(self.truncation, Truncation::ByBracket { .. })
    }

    /// Coefficients as `u64`, when all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Coefficient `i`, zero past a bracket truncation.
    pub fn coeff(&self, i: usize) -> Option<BigInt> {
        match self.coeffs.get(i) {
            Some(c) => Some(c.clone()),
            None if self.is_bracketed() => Some(BigInt::zero()),
            None => None,
        }
    }
}

/// Degree of regularity: finite, or not reached up to `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Dreg {
    Finite { value: u32 },
    Infinite { bound: Option<u32> },
}

impl Dreg {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dreg::Finite { value } => Some(value),
            Dreg::Infinite { .. } => None,
        }
    }
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn ser_big_vec<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        match c.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

fn check_shape(n: usize, degrees: &[u32]) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInstance(
            "at least one variable is required".into(),
        ));
    }
    if degrees.iter().any(|&d| d == 0) {
        return Err(Error::InvalidDegree);
    }
    Ok(())
}

/// `prod (1 - z^d)` truncated to `len` coefficients.
pub fn numerator_product(degrees: &[u32], len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    if len == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for &d in degrees {
        let d = d as usize;
        for k in (d..len).rev() {
            let t = c[k - d].clone();
            c[k] -= t;
        }
    }
    c
}

/// Divides a truncated series by `(1 - z)^n`: `n` prefix-sum passes.
pub fn divide_by_one_minus_z(mut c: Vec<BigInt>, n: usize) -> Vec<BigInt> {
    for _ in 0..n {
        for k in 1..c.len() {
            let prev = c[k - 1].clone();
            c[k] += prev;
        }
    }
    c
}

/// Coefficients `0..=upto` of `prod (1 - z^d_j) / (1 - z)^n`.
pub fn rational_series(n: usize, degrees: &[u32], upto: usize) -> Vec<BigInt> {
    divide_by_one_minus_z(numerator_product(degrees, upto + 1), n)
}

/// `[prod_j (1 - z^{d_j}) / (1 - z)^n]`, cut before the first coefficient
/// `<= 0` or after `precision`, whichever comes first.
pub fn semiregular_series(n: usize, degrees: &[u32], precision: usize) -> Result<TruncatedSeries> {
    check_shape(n, degrees)?;
    if precision == 0 {
        return Err(Error::InvalidInstance(
            "precision must be at least 1".into(),
        ));
    }
    Ok(bracket(rational_series(n, degrees, precision)))
}

/// Applies the `[.]` rule to a series prefix.
pub fn bracket(mut coeffs: Vec<BigInt>) -> TruncatedSeries {
    match coeffs.iter().position(|c| !c.is_positive()) {
        Some(k) => {
            let next = coeffs[k].clone();
            coeffs.truncate(k);
            TruncatedSeries {
                coeffs,
                truncation: Truncation::ByBracket { next },
            }
        }
        None => TruncatedSeries {
            coeffs,
            truncation: Truncation::ByPrecision,
        },
    }
}

/// Index of the first non-positive coefficient of
/// `prod (1 - z^d_j) / (1 - z)^n`, searched up to `bound`.
pub fn degree_of_regularity(n: usize, degrees: &[u32], bound: usize) -> Result<Dreg> {
    check_shape(n, degrees)?;
    let c = rational_series(n, degrees, bound);
    Ok(match c.iter().position(|c| !c.is_positive()) {
        Some(k) => Dreg::Finite { value: k as u32 },
        None => Dreg::Infinite {
            bound: Some(bound as u32),
        },
    })
}

/// Exact degree of regularity of the semi-regular series. With `m >= n`
/// the series is a polynomial of degree `sum d_j - n`, so the bracket fires
/// by `sum d_j - n + 1`; with `m < n` every coefficient is positive.
pub fn semiregular_dreg(n: usize, degrees: &[u32]) -> Result<Dreg> {
    check_shape(n, degrees)?;
    if degrees.len() < n {
        return Ok(Dreg::Infinite { bound: None });
    }
    let bound = degrees.iter().map(|&d| d as usize).sum::<usize>() - n + 1;
    degree_of_regularity(n, degrees, bound)
}

/// The first `D` coefficients of `prod (1 - z^d_i) / (1 - z)^(n+1)`, the
/// Hilbert series of `R'/<F^h>` modulo `z^D` for affine cryptographic
/// semi-regular `F`.
pub fn homogenized_prefix(n: usize, degrees: &[u32]) -> Result<TruncatedSeries> {
    let d = semiregular_dreg(n, degrees)?
        .finite()
        .ok_or(Error::NotArtinian)? as usize;
    let coeffs = divide_by_one_minus_z(numerator_product(degrees, d), n + 1);
    Ok(TruncatedSeries {
        coeffs,
        truncation: Truncation::ByPrecision,
    })
}

/// Running sums `c_0, c_0 + c_1, ...`.
pub fn cumulative_sums(c: &[BigInt]) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    c.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// Number of degree-`d` monomials in `n` variables divisible by none of `lms`.
pub fn hf_from_staircase(lms: &[Monomial], n: usize, d: u32) -> u64 {
    assert!(
        lms.iter().all(|m| m.nvars() == n),
        "monomials must have {n} variables"
    );
    Monomial::all_of_degree(n, d)
        .iter()
        .filter(|t| !lms.iter().any(|m| m.divides(t)))
        .count() as u64
}

/// Standard monomials of degree `d` (those divisible by none of `lms`),
/// descending.
pub fn standard_monomials(lms: &[Monomial], n: usize, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(n, d)
        .into_iter()
        .filter(|t| !lms.iter().any(|m| m.divides(t)))
        .collect()
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<BigInt>, other: &[BigInt], shift: usize, sign: i32) {
    if acc.len() < other.len() + shift {
        acc.resize(other.len() + shift, BigInt::zero());
    }
    for (i, c) in other.iter().enumerate() {
        if sign >= 0 {
            acc[i + shift] += c;
        } else {
            acc[i + shift] -= c;
        }
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Numerator `N(z)` of the Hilbert series `N(z) / (1 - z)^n` of
/// `K[x_1..x_n] / <lms>`, by pivoting on variables.
pub fn hilbert_numerator(lms: &[Monomial], n: usize) -> Vec<BigInt> {
    assert!(lms.iter().all(|m| m.nvars() == n));
    trim(numerator_rec(minimalize(lms.to_vec()), n))
}

fn numerator_rec(gens: Vec<Monomial>, n: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let degrees: Vec<u32> = gens.iter().map(Monomial::degree).collect();
        let len = degrees.iter().sum::<u32>() as usize + 1;
        return numerator_product(&degrees, len);
    }
    // pivot on the variable shared by the most generators
    let pivot_var = (0..n)
        .max_by_key(|&k| gens.iter().filter(|g| g.exps()[k] > 0).count())
        .unwrap();
    let pivot = Monomial::var(n, pivot_var);
    // HS(R/I) = HS(R/(I + <x>)) + z * HS(R/(I : x))
    let mut with_pivot: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exps()[pivot_var] == 0)
        .cloned()
        .collect();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exps().to_vec();
            e[pivot_var] = e[pivot_var].saturating_sub(1);
            Monomial::new(&e)
        })
        .collect();
    let mut acc = numerator_rec(minimalize(with_pivot), n);
    let colon_part = numerator_rec(minimalize(colon), n);
    poly_add_shifted(&mut acc, &colon_part, 1, 1);
    acc
}

/// `HF(d)` from a Hilbert numerator over `(1 - z)^n`.
pub fn hf_from_numerator(numerator: &[BigInt], n: usize, d: usize) -> BigInt {
    let mut c: Vec<BigInt> = (0..=d)
        .map(|i| numerator.get(i).cloned().unwrap_or_default())
        .collect();
    c = divide_by_one_minus_z(c, n);
    c.pop().unwrap()
}

/// `a(z) * b(z)` for integer polynomials.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `a(z) * (1 - z^d)`.
pub fn times_one_minus_z_pow(a: &[BigInt], d: u32) -> Vec<BigInt> {
    let mut out = a.to_vec();
    poly_add_shifted(&mut out, a, d as usize, -1);
    trim(out)
}
