//! Graded pieces of the Koszul complex by exact linear algebra: `H_1`
//! dimensions, the three `d`-regularity tests, the actual degree of
//! regularity, Pardue semi-regularity and the first fall degree over
//! `F_q[X]/<x_i^q>`.
//!
//! Graded pieces are enumerated explicitly, so the number of variables,
//! generators and examined degrees are capped (see [`CAP_NVARS`],
//! [`CAP_GENERATORS`], [`CAP_DEGREE`]).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::buchberger::{buchberger, EngineOptions};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::MatrixGF;
use crate::polyring::{Monomial, PolySequence, Polynomial};
use crate::series::{
    hf_from_numerator, hf_from_staircase, hilbert_numerator, rational_series, standard_monomials,
    times_one_minus_z_pow,
};

pub const CAP_NVARS: usize = 6;
pub const CAP_GENERATORS: usize = 10;
pub const CAP_DEGREE: u32 = 12;

fn check_caps(f: &PolySequence, d: u32) -> Result<()> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.ring().arity();
    if n > CAP_NVARS {
        return Err(Error::CapExceeded {
            parameter: "variables",
            value: n,
            cap: CAP_NVARS,
        });
    }
    if f.len() > CAP_GENERATORS {
        return Err(Error::CapExceeded {
            parameter: "generators",
            value: f.len(),
            cap: CAP_GENERATORS,
        });
    }
    if d > CAP_DEGREE {
        return Err(Error::CapExceeded {
            parameter: "degree",
            value: d as usize,
            cap: CAP_DEGREE as usize,
        });
    }
    Ok(())
}

fn rank_of(field: FieldSpec, rows: &[Vec<u32>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    MatrixGF::from_rows(field, rows).rank()
}

/// Graded piece of `R` (`q = None`) or of `B = R/<x_i^q>`.
fn piece(n: usize, d: i64, q: Option<u32>) -> Vec<Monomial> {
    if d < 0 {
        return Vec::new();
    }
    let all = Monomial::all_of_degree(n, d as u32);
    match q {
        None => all,
        Some(q) => all
            .into_iter()
            .filter(|m| m.exps().iter().all(|&e| e < q))
            .collect(),
    }
}

fn in_algebra(m: &Monomial, q: Option<u32>) -> bool {
    q.is_none_or(|q| m.exps().iter().all(|&e| e < q))
}

/// A free module `sum_J A(-d_J)` in one degree, with a coordinate index.
struct FreePiece {
    /// `(J, monomial)` per coordinate.
    coords: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl FreePiece {
    fn new(shifts: &[u32], d: u32, n: usize, q: Option<u32>) -> Self {
        let mut coords = Vec::new();
        for (j, &s) in shifts.iter().enumerate() {
            for m in piece(n, d as i64 - s as i64, q) {
                coords.push((j, m));
            }
        }
        let index = coords
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, c)| (c, k))
            .collect();
        Self { coords, index }
    }

    fn len(&self) -> usize {
        self.coords.len()
    }
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..m {
            cur.push(j);
            rec(j + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// `(phi_i)_d : sum_{|J| = i} A_{d - d_J} -> sum_{|J'| = i-1} A_{d - d_J'}`,
/// one row per source coordinate holding its image.
#[derive(Debug, Clone, Serialize)]
pub struct GradedMapMatrix {
    pub source_shifts: Vec<u32>,
    pub target_shifts: Vec<u32>,
    pub source_dim: usize,
    pub target_dim: usize,
    #[serde(skip)]
    pub rows: Vec<Vec<u32>>,
    #[serde(skip)]
    field: Option<FieldSpec>,
}

impl GradedMapMatrix {
    pub fn rank(&self) -> usize {
        match self.field {
            Some(f) => rank_of(f, &self.rows),
            None => 0,
        }
    }

    pub fn kernel_dim(&self) -> usize {
        self.source_dim - self.rank()
    }

    pub fn to_matrix(&self) -> Option<MatrixGF> {
        let f = self.field?;
        (!self.rows.is_empty() && self.target_dim > 0).then(|| MatrixGF::from_rows(f, &self.rows))
    }
}

fn reduce_mod_powers(f: &Polynomial, q: Option<u32>) -> Vec<(u32, Monomial)> {
    f.terms()
        .iter()
        .filter(|(_, m)| in_algebra(m, q))
        .cloned()
        .collect()
}

fn koszul_map_in(f: &PolySequence, i: usize, d: u32, q: Option<u32>) -> GradedMapMatrix {
    let n = f.ring().arity();
    let field = f.ring().field;
    let m = f.len();
    let degs = f.degrees();
    let src_sets = subsets(m, i);
    let tgt_sets = subsets(m, i - 1);
    let shift = |s: &[usize]| s.iter().map(|&j| degs[j]).sum::<u32>();
    let src_shifts: Vec<u32> = src_sets.iter().map(|s| shift(s)).collect();
    let tgt_shifts: Vec<u32> = tgt_sets.iter().map(|s| shift(s)).collect();
    let tgt_pos: HashMap<&Vec<usize>, usize> =
        tgt_sets.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let src = FreePiece::new(&src_shifts, d, n, q);
    let tgt = FreePiece::new(&tgt_shifts, d, n, q);
    let polys: Vec<Vec<(u32, Monomial)>> = f.iter().map(|p| reduce_mod_powers(p, q)).collect();
    let mut rows = Vec::with_capacity(src.len());
    for (jset, u) in &src.coords {
        let set = &src_sets[*jset];
        let mut row = vec![0u32; tgt.len()];
        for (k, &j) in set.iter().enumerate() {
            let mut rest = set.clone();
            rest.remove(k);
            let t = tgt_pos[&rest];
            for (c, mono) in &polys[j] {
                let um = u.mul(mono);
                if !in_algebra(&um, q) {
                    continue;
                }
                let col = tgt.index[&(t, um)];
                let c = if k % 2 == 0 { *c } else { field.neg(*c) };
                row[col] = field.add(row[col], c);
            }
        }
        rows.push(row);
    }
    GradedMapMatrix {
        source_shifts: src_shifts,
        target_shifts: tgt_shifts,
        source_dim: src.len(),
        target_dim: tgt.len(),
        rows,
        field: Some(field),
    }
}

/// Degree-`d` piece of `phi_i` (`1 <= i <= m`) of the Koszul complex on `F`.
pub fn koszul_map(f: &PolySequence, i: usize, d: u32) -> Result<GradedMapMatrix> {
    check_caps(f, d)?;
    if i == 0 || i > f.len() {
        return Err(Error::InvalidInstance(format!(
            "Koszul map index {i} outside 1..={}",
            f.len()
        )));
    }
    Ok(koszul_map_in(f, i, d, None))
}

/// `dim H_1(K(F))_d = dim ker (phi_1)_d - rank (phi_2)_d`.
pub fn h1_dimension(f: &PolySequence, d: u32) -> Result<u64> {
    check_caps(f, d)?;
    let phi1 = koszul_map_in(f, 1, d, None);
    let im2 = if f.len() >= 2 {
        koszul_map_in(f, 2, d, None).rank()
    } else {
        0
    };
    Ok((phi1.kernel_dim() - im2) as u64)
}

/// `dim H_i(K(F))_d` for `1 <= i <= m`.
pub fn homology_dimension(f: &PolySequence, i: usize, d: u32) -> Result<u64> {
    let phi = koszul_map(f, i, d)?;
    let next = if i < f.len() {
        koszul_map_in(f, i + 1, d, None).rank()
    } else {
        0
    };
    Ok((phi.kernel_dim() - next) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegularityMethod {
    /// Injectivity of each multiplication map on the prefix quotients.
    Direct,
    /// Hilbert function against the series `prod (1 - z^d_j) / (1 - z)^n`.
    Series,
    /// Vanishing of `H_1` below `d`.
    Homology,
}

fn truncated_gb(f: &PolySequence, d: u32) -> Result<Vec<Polynomial>> {
    Ok(buchberger(f, &EngineOptions::truncated(d))?.elements)
}

/// Whether `F` is `d`-regular: multiplication by `f_i` on
/// `(R/<f_1..f_{i-1}>)_{t - d_i}` is injective for all `d_i <= t < d`.
pub fn check_d_regular(f: &PolySequence, d: u32, method: RegularityMethod) -> Result<bool> {
    check_caps(f, d)?;
    if d == 0 {
        return Ok(true);
    }
    let n = f.ring().arity();
    match method {
        RegularityMethod::Direct => {
            let field = f.ring().field;
            for i in 1..f.len() {
                let fi = &f[i];
                let di = fi.degree();
                if di >= d {
                    continue;
                }
                let g = truncated_gb(&f.prefix(i)?, d - 1)?;
                let lms: Vec<Monomial> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
                for t in di..d {
                    let source = standard_monomials(&lms, n, t - di);
                    if source.is_empty() {
                        continue;
                    }
                    let target = standard_monomials(&lms, n, t);
                    let col: HashMap<&Monomial, usize> =
                        target.iter().enumerate().map(|(k, m)| (m, k)).collect();
                    let rows: Vec<Vec<u32>> = source
                        .iter()
                        .map(|s| {
                            let mut row = vec![0u32; target.len()];
                            let img = fi.mul_term(1, s).reduce(&g);
                            for (c, m) in img.terms() {
                                row[col[m]] = *c;
                            }
                            row
                        })
                        .collect();
                    if rank_of(field, &rows) < source.len() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        RegularityMethod::Series => {
            let g = truncated_gb(f, d - 1)?;
            let lms: Vec<Monomial> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
            let expected = rational_series(n, &f.degrees(), d as usize - 1);
            Ok((0..d).all(|t| BigInt::from(hf_from_staircase(&lms, n, t)) == expected[t as usize]))
        }
        RegularityMethod::Homology => {
            for t in 0..d {
                if h1_dimension(f, t)? != 0 {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Actual `d_reg(<F>) = min { d : R_d = <F>_d }`, searched up to the cap.
pub fn degree_of_regularity_actual(f: &PolySequence) -> Result<u32> {
    check_caps(f, 0)?;
    let n = f.ring().arity();
    let g = truncated_gb(f, CAP_DEGREE)?;
    let lms: Vec<Monomial> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
    (0..=CAP_DEGREE)
        .find(|&d| hf_from_staircase(&lms, n, d) == 0)
        .ok_or(Error::NotArtinianWithinCap(CAP_DEGREE))
}

/// `(F is d_reg-regular, d_reg)` with `d_reg` the actual degree of regularity.
pub fn check_crypto_semiregular(f: &PolySequence) -> Result<(bool, u32)> {
    let d = degree_of_regularity_actual(f)?;
    Ok((check_d_regular(f, d, RegularityMethod::Series)?, d))
}

/// Pardue semi-regularity: `HS_{A_i} = [HS_{A_{i-1}} (1 - z^{d_i})]` for
/// every prefix quotient `A_i = R/<f_1..f_i>`. Hilbert series are compared
/// exactly through their numerators over `(1 - z)^n`.
pub fn check_pardue_semiregular(f: &PolySequence) -> Result<bool> {
    check_caps(f, 0)?;
    let n = f.ring().arity();
    let opts = EngineOptions {
        step_degree_cap: Some(3 * CAP_DEGREE),
        ..Default::default()
    };
    let mut prev = vec![BigInt::from(1)];
    for i in 1..=f.len() {
        let g = buchberger(&f.prefix(i)?, &opts).map_err(|e| match e {
            Error::TimeoutDegree { degree, .. } => Error::CapExceeded {
                parameter: "degree",
                value: degree as usize,
                cap: 3 * CAP_DEGREE as usize,
            },
            e => e,
        })?;
        let num = hilbert_numerator(&g.lms(), n);
        let product = times_one_minus_z_pow(&prev, f[i - 1].degree());
        if num != product {
            // the bracket must have cut the product where A_i vanishes
            let Some(top) = artinian_top(&num, n) else {
                return Ok(false);
            };
            for t in 0..=top + 1 {
                let actual = hf_from_numerator(&num, n, t);
                let expected = hf_from_numerator(&product, n, t);
                let ok = if t <= top {
                    actual == expected && expected.is_positive()
                } else {
                    !expected.is_positive()
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        prev = num;
    }
    Ok(true)
}

/// Last degree with a nonzero Hilbert function value when the quotient with
/// numerator `num` is Artinian.
fn artinian_top(num: &[BigInt], n: usize) -> Option<usize> {
    // Artinian iff (1 - z)^n divides the numerator
    let mut h = num.to_vec();
    for _ in 0..n {
        // synthetic division by (1 - z): h = (1 - z) q  <=>  q = prefix sums
        let mut q = Vec::with_capacity(h.len());
        let mut acc = BigInt::zero();
        for c in &h {
            acc += c;
            q.push(acc.clone());
        }
        if !q.last().is_some_and(Zero::is_zero) {
            return None;
        }
        q.pop();
        h = q;
    }
    while h.last().is_some_and(Zero::is_zero) {
        h.pop();
    }
    Some(h.len().saturating_sub(1))
}

/// For `D` with `H_1(K(F))_{<= D} = 0`, checks that every prefix
/// `(f_1..f_j)` also has `H_1 = 0` up to degree `D`.
pub fn prefix_vanishing_check(f: &PolySequence, d: u32) -> Result<bool> {
    check_caps(f, d)?;
    for t in 0..=d {
        if h1_dimension(f, t)? != 0 {
            return Err(Error::PreconditionUnverified(format!(
                "H_1 of F is nonzero in degree {t}"
            )));
        }
    }
    for j in 1..f.len() {
        let p = f.prefix(j)?;
        for t in 0..=d {
            if h1_dimension(&p, t)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both sides of the exact-sequence identity
/// `dim A_i,t = dim A_{i-1},t - dim A_{i-1},t-d_i + dim (0 : f_i)_{t-d_i}`,
/// each computed from its own rank computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionAccounting {
    pub i: usize,
    pub t: u32,
    pub dim_a_i: u64,
    pub dim_a_prev: u64,
    pub dim_a_prev_shifted: u64,
    pub dim_annihilator: u64,
}

impl DimensionAccounting {
    pub fn holds(&self) -> bool {
        self.dim_a_i + self.dim_a_prev_shifted == self.dim_a_prev + self.dim_annihilator
    }
}

/// Rows `u * f_j` for all `j < k` and monomials `u` of the right degree,
/// as vectors over the degree-`t` monomials.
fn ideal_rows(
    f: &PolySequence,
    k: usize,
    t: u32,
    cols: &HashMap<&Monomial, usize>,
    width: usize,
) -> Vec<Vec<u32>> {
    let n = f.ring().arity();
    let mut rows = Vec::new();
    for fj in &f[..k] {
        for u in piece(n, t as i64 - fj.degree() as i64, None) {
            let mut row = vec![0u32; width];
            for (c, m) in fj.mul_term(1, &u).terms() {
                row[cols[m]] = *c;
            }
            rows.push(row);
        }
    }
    rows
}

/// The dimension identity for prefix `i` (1-based) in degree `t`.
pub fn dimension_accounting(f: &PolySequence, i: usize, t: u32) -> Result<DimensionAccounting> {
    check_caps(f, t)?;
    let n = f.ring().arity();
    let field = f.ring().field;
    let fi = &f[i - 1];
    let di = fi.degree();
    let dim_quotient = |k: usize, s: i64| -> u64 {
        if s < 0 {
            return 0;
        }
        let mons = piece(n, s, None);
        let cols: HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
        (mons.len() - rank_of(field, &ideal_rows(f, k, s as u32, &cols, mons.len()))) as u64
    };
    let dim_a_i = dim_quotient(i, t as i64);
    let dim_a_prev = dim_quotient(i - 1, t as i64);
    let s = t as i64 - di as i64;
    let dim_a_prev_shifted = dim_quotient(i - 1, s);
    let dim_annihilator = if s < 0 {
        0
    } else {
        // {a in R_s : a f_i in I_t} has dimension dim R_s + rank M_I - rank [M_a; M_I]
        let mons = piece(n, t as i64, None);
        let cols: HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let m_i = ideal_rows(f, i - 1, t, &cols, mons.len());
        let sources = piece(n, s, None);
        let mut stacked: Vec<Vec<u32>> = sources
            .iter()
            .map(|a| {
                let mut row = vec![0u32; mons.len()];
                for (c, m) in fi.mul_term(1, a).terms() {
                    row[cols[m]] = *c;
                }
                row
            })
            .collect();
        let rank_i = rank_of(field, &m_i);
        stacked.extend(m_i);
        let preimage = sources.len() + rank_i - rank_of(field, &stacked);
        // modulo the part of R_s already in I_{i-1}
        let s_cols: HashMap<&Monomial, usize> =
            sources.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let in_ideal = rank_of(
            field,
            &ideal_rows(f, i - 1, s as u32, &s_cols, sources.len()),
        );
        (preimage - in_ideal) as u64
    };
    Ok(DimensionAccounting {
        i,
        t,
        dim_a_i,
        dim_a_prev,
        dim_a_prev_shifted,
        dim_annihilator,
    })
}

/// Least `d` with `syz(f)_d` strictly larger than `tsyz+(f)_d` over
/// `B = R/<x_1^q, ..., x_n^q>`, where `q` must be the field size.
pub fn first_fall_degree(f: &PolySequence, q: u32) -> Result<u32> {
    check_caps(f, 0)?;
    if q != f.ring().field.p() {
        return Err(Error::InvalidInstance(format!(
            "q = {q} differs from the field size {}",
            f.ring().field.p()
        )));
    }
    let n = f.ring().arity();
    let field = f.ring().field;
    let degs = f.degrees();
    let top = (n as u32 * (q - 1) + degs.iter().max().unwrap()).min(CAP_DEGREE);
    let polys: Vec<Vec<(u32, Monomial)>> =
        f.iter().map(|p| reduce_mod_powers(p, Some(q))).collect();
    for d in 1..=top {
        let phi1 = koszul_map_in(f, 1, d, Some(q));
        let syz = phi1.kernel_dim();
        if syz == 0 {
            continue;
        }
        // trivial syzygies: the Koszul ones, plus f_i^{q-1} e_i
        let mut rows = if f.len() >= 2 {
            koszul_map_in(f, 2, d, Some(q)).rows
        } else {
            Vec::new()
        };
        let src = FreePiece::new(&degs, d, n, Some(q));
        for (i, fi) in polys.iter().enumerate() {
            let power = power_mod(fi, q - 1, field, q, n);
            for t in piece(n, d as i64 - (q * degs[i]) as i64, Some(q)) {
                let mut row = vec![0u32; src.len()];
                for (c, m) in &power {
                    let tm = t.mul(m);
                    if in_algebra(&tm, Some(q)) {
                        let k = src.index[&(i, tm)];
                        row[k] = field.add(row[k], *c);
                    }
                }
                rows.push(row);
            }
        }
        let tsyz = if src.len() == 0 {
            0
        } else {
            rank_of(field, &rows)
        };
        if syz > tsyz {
            return Ok(d);
        }
    }
    Err(Error::NoFallWithinCap(top))
}

fn power_mod(
    f: &[(u32, Monomial)],
    e: u32,
    field: FieldSpec,
    q: u32,
    n: usize,
) -> Vec<(u32, Monomial)> {
    let mut acc: HashMap<Monomial, u32> = HashMap::from([(Monomial::one(n), 1)]);
    for _ in 0..e {
        let mut next: HashMap<Monomial, u32> = HashMap::new();
        for (m1, c1) in &acc {
            for (c2, m2) in f {
                let m = m1.mul(m2);
                if in_algebra(&m, Some(q)) {
                    let v = next.entry(m).or_insert(0);
                    *v = field.add(*v, field.mul(*c1, *c2));
                }
            }
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc.into_iter().map(|(m, c)| (c, m)).collect()
}

/// Outcome of comparing the first fall degree with `min { d : H_1_d != 0 }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FallConsistency {
    /// `q` exceeds both values and they agree.
    Equal { degree: u32 },
    /// `q` does not exceed both; the one-sided implications that apply hold.
    Inconclusive {
        first_fall: Option<u32>,
        h1_onset: Option<u32>,
    },
    /// One of the implications `q > D => d_ff <= D`, `q > d_ff => D <= d_ff`
    /// failed.
    Contradiction {
        first_fall: Option<u32>,
        h1_onset: Option<u32>,
    },
}

/// Least `d <= bound` with `H_1(K(F))_d != 0`.
pub fn h1_onset(f: &PolySequence, bound: u32) -> Result<Option<u32>> {
    for d in 0..=bound.min(CAP_DEGREE) {
        if h1_dimension(f, d)? != 0 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

pub fn first_fall_consistency(f: &PolySequence, q: u32) -> Result<FallConsistency> {
    let ff = match first_fall_degree(f, q) {
        Ok(d) => Some(d),
        Err(Error::NoFallWithinCap(_)) => None,
        Err(e) => return Err(e),
    };
    let onset = h1_onset(f, CAP_DEGREE)?;
    // unknown values count as beyond the cap
    let big = CAP_DEGREE + 1;
    let (dff, dh) = (ff.unwrap_or(big), onset.unwrap_or(big));
    let first_ok = !(q > dh) || dff <= dh;
    let second_ok = !(q > dff) || dh <= dff;
    if !(first_ok && second_ok) {
        return Ok(FallConsistency::Contradiction {
            first_fall: ff,
            h1_onset: onset,
        });
    }
    if q > dh && q > dff && ff.is_some() {
        return Ok(FallConsistency::Equal { degree: dff });
    }
    Ok(FallConsistency::Inconclusive {
        first_fall: ff,
        h1_onset: onset,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KoszulReport {
    pub degrees: Vec<u32>,
    pub h1: Vec<u64>,
    /// Largest examined `d` such that `F` is `d`-regular.
    pub d_regular_up_to: u32,
    pub is_crypto_semiregular: Option<bool>,
    pub is_pardue_semiregular: Option<bool>,
    pub d_reg_actual: Option<u32>,
    pub first_fall_degree: Option<u32>,
}

/// `H_1` dimensions in degrees `0..=dmax` plus the semi-regularity verdicts.
/// Verdicts that hit a cap are left empty.
pub fn koszul_report(f: &PolySequence, dmax: u32, q: Option<u32>) -> Result<KoszulReport> {
    check_caps(f, dmax)?;
    let degrees: Vec<u32> = (0..=dmax).collect();
    let h1 = degrees
        .iter()
        .map(|&d| h1_dimension(f, d))
        .collect::<Result<Vec<_>>>()?;
    let d_regular_up_to = h1
        .iter()
        .position(|&h| h != 0)
        .map_or(dmax + 1, |k| k as u32);
    let crypto = check_crypto_semiregular(f).ok();
    Ok(KoszulReport {
        degrees,
        h1,
        d_regular_up_to,
        is_crypto_semiregular: crypto.map(|c| c.0),
        is_pardue_semiregular: check_pardue_semiregular(f).ok(),
        d_reg_actual: crypto.map(|c| c.1),
        first_fall_degree: q.and_then(|q| first_fall_degree(f, q).ok()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, RingCtx};

    fn seq(p: u64, n: usize, polys: &[&str]) -> PolySequence {
        let ring = RingCtx::affine(FieldSpec::new(p).unwrap(), n);
        PolySequence::new(
            polys
                .iter()
                .map(|s| parse_polynomial(&ring, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    const METHODS: [RegularityMethod; 3] = [
        RegularityMethod::Direct,
        RegularityMethod::Series,
        RegularityMethod::Homology,
    ];

    #[test]
    fn h1_examples() {
        let f = seq(73, 2, &["x1", "x2"]);
        for d in 0..6 {
            assert_eq!(h1_dimension(&f, d).unwrap(), 0);
        }
        let g = seq(73, 2, &["x1^2", "x1^2"]);
        assert_eq!(h1_dimension(&g, 2).unwrap(), 1);
        assert_eq!(
            h1_dimension(&seq(73, 2, &["x1 + 1"]), 1),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn koszul_maps_compose_to_zero() {
        let f = seq(73, 3, &["x1^2 + x2*x3", "x2^2 - x1*x3", "x1*x2 + 3*x3^2"]);
        for d in 2..8 {
            let a = koszul_map(&f, 2, d).unwrap();
            let b = koszul_map(&f, 1, d).unwrap();
            let field = f.ring().field;
            for row in &a.rows {
                // phi_1(phi_2(v)) = sum over coordinates of row * phi_1 row
                let mut acc = vec![0u32; b.target_dim];
                for (k, &c) in row.iter().enumerate() {
                    for (j, &x) in b.rows[k].iter().enumerate() {
                        acc[j] = field.add(acc[j], field.mul(c, x));
                    }
                }
                assert!(acc.iter().all(|&x| x == 0));
            }
            // H_m vanishes
            assert_eq!(homology_dimension(&f, 3, d).unwrap(), 0);
        }
    }

    #[test]
    fn d_regular_examples() {
        let bad = seq(73, 2, &["x1^2", "x1^2"]);
        let reg = seq(73, 3, &["x1^2", "x2^2", "x3^2"]);
        for m in METHODS {
            assert!(!check_d_regular(&bad, 3, m).unwrap(), "{m:?}");
            assert!(check_d_regular(&reg, 10, m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn crypto_examples() {
        assert_eq!(
            check_crypto_semiregular(&seq(73, 3, &["x1^2", "x2^2"])),
            Err(Error::NotArtinianWithinCap(CAP_DEGREE))
        );
        assert_eq!(
            check_crypto_semiregular(&seq(73, 2, &["x1^2", "x1*x2", "x2^2"])).unwrap(),
            (true, 2)
        );
    }

    #[test]
    fn pardue_examples() {
        assert!(!check_pardue_semiregular(&seq(73, 2, &["x1^2", "x1^2"])).unwrap());
        assert!(check_pardue_semiregular(&seq(73, 1, &["x1"])).unwrap());
        // x1*x2 is injective in degree 0 and the bracket cuts at z^2
        assert!(check_pardue_semiregular(&seq(73, 2, &["x1^2", "x2^2", "x1*x2"])).unwrap());
        assert!(!check_pardue_semiregular(&seq(73, 2, &["x1^2", "x1*x2"])).unwrap());
    }

    #[test]
    fn first_fall_example() {
        assert_eq!(first_fall_degree(&seq(2, 2, &["x1*x2"]), 2).unwrap(), 3);
        assert!(matches!(
            first_fall_degree(&seq(3, 2, &["x1*x2"]), 2),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn dimension_identity_small() {
        let f = seq(73, 3, &["x1^2 + x2*x3", "x1^2", "x1*x2 - x3^2"]);
        for i in 1..=3 {
            for t in 0..7 {
                let acc = dimension_accounting(&f, i, t).unwrap();
                assert!(acc.holds(), "{acc:?}");
            }
        }
    }

    #[test]
    fn artinian_top_detects_vanishing() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        // (1 - z^2)^2 over (1 - z)^2: 1 + 2z + z^2
        assert_eq!(artinian_top(&ints(&[1, 0, -2, 0, 1]), 2), Some(2));
        assert_eq!(artinian_top(&ints(&[1, 0, -1]), 2), None);
    }

    #[test]
    fn caps_are_enforced() {
        let ring = RingCtx::affine(FieldSpec::new(73).unwrap(), 7);
        let f = PolySequence::new(vec![Polynomial::var(&ring, 0)]).unwrap();
        assert!(matches!(
            h1_dimension(&f, 1),
            Err(Error::CapExceeded {
                parameter: "variables",
                ..
            })
        ));
        let g = seq(73, 2, &["x1"]);
        assert!(matches!(
            h1_dimension(&g, 13),
            Err(Error::CapExceeded {
                parameter: "degree",
                ..
            })
        ));
    }
}
