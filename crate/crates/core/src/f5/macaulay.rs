use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{FromPrimitive, One};

use crate::buchberger::{is_groebner, reduce_basis, GroebnerBasis, LogBuilder};
use crate::error::{Error, Result};
use crate::linalg::MatrixGF;
use crate::polyring::{Monomial, PolySequence, Polynomial, Ring};

/// Rows `t * f_i`, columns monomials in descending order.
#[derive(Debug, Clone)]
pub struct MacaulayMatrix {
    pub degree: u32,
    pub cumulative: bool,
    /// `(t, i)` with `i` 0-based.
    pub rows: Vec<(Monomial, usize)>,
    pub columns: Vec<Monomial>,
    pub body: MatrixGF,
}

impl MacaulayMatrix {
    /// Row `k` of `m` read back as a polynomial.
    pub fn row_polynomial(&self, ring: &Ring, m: &MatrixGF, k: usize) -> Polynomial {
        let terms = m
            .row(k)
            .iter()
            .zip(&self.columns)
            .filter(|(c, _)| **c != 0)
            .map(|(c, mono)| (*c, mono.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }
}

/// `M_{<=d}(F)` when `cumulative`, else the degree-`d` slice (rows with
/// `deg(t f_i) = d`, columns of degree `d`).
pub fn build_macaulay(f: &PolySequence, d: u32, cumulative: bool) -> Result<MacaulayMatrix> {
    let ring = f.ring();
    let n = ring.arity();
    if f.iter().all(|fi| fi.degree() > d) {
        return Err(Error::EmptyMatrix(d));
    }
    let columns = if cumulative {
        Monomial::all_up_to_degree(n, d)
    } else {
        Monomial::all_of_degree(n, d)
    };
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows = Vec::new();
    let mut data = Vec::new();
    for (i, fi) in f.iter().enumerate() {
        let di = fi.degree();
        if di > d {
            continue;
        }
        let mut multipliers = if cumulative {
            Monomial::all_up_to_degree(n, d - di)
        } else {
            Monomial::all_of_degree(n, d - di)
        };
        multipliers.reverse();
        for t in multipliers {
            let mut row = vec![0u32; columns.len()];
            for (c, m) in fi.terms() {
                let tm = t.mul(m);
                match index.get(&tm) {
                    Some(&k) => row[k] = *c,
                    // only possible for a slice of non-homogeneous input
                    None => return Err(Error::NotHomogeneous),
                }
            }
            rows.push((t, i));
            data.push(row);
        }
    }
    let body = MatrixGF::from_rows(ring.field, &data);
    let body = if data.is_empty() {
        MatrixGF::zeros(ring.field, 0, columns.len())
    } else {
        body
    };
    Ok(MacaulayMatrix {
        degree: d,
        cumulative,
        rows,
        columns,
        body,
    })
}

/// Least `d` in `min d_i ..= dmax` at which the rows of `RREF(M_{<=d}(F))`
/// contain a Groebner basis of `<F>`, together with the reduced basis
/// extracted there. Detection checks the S-pair criterion on the extracted
/// rows and membership of every `f_i`.
pub fn macaulay_gb(f: &PolySequence, dmax: u32) -> Result<(GroebnerBasis, u32)> {
    let ring = f.ring();
    let dmin = f.degrees().into_iter().min().unwrap();
    let homogeneous = f.is_homogeneous();
    let mut log = LogBuilder::default();
    // for homogeneous input M_{<=d} is block diagonal and its RREF is the
    // union of the RREFs of the slices
    let mut slice_rows: Vec<Polynomial> = Vec::new();
    for d in dmin..=dmax {
        let mac = build_macaulay(f, d, !homogeneous)?;
        let (rref, pivots) = mac.body.rref();
        let fresh = (0..pivots.len()).map(|k| mac.row_polynomial(ring, &rref, k));
        let mut rows: Vec<Polynomial> = if homogeneous {
            slice_rows.extend(fresh);
            slice_rows.clone()
        } else {
            fresh.collect()
        };
        let (nrows, rank) = (mac.rows.len(), pivots.len());
        // rows have pairwise distinct leading monomials; keep the minimal ones
        rows.sort_by(|a, b| a.lm().cmp(&b.lm()));
        let mut candidate: Vec<Polynomial> = Vec::new();
        for r in rows {
            if !candidate
                .iter()
                .any(|g| g.lm().unwrap().divides(r.lm().unwrap()))
            {
                candidate.push(r);
            }
        }
        let rec = log.at(d);
        rec.pairs_processed = nrows as u32;
        rec.new_elements = candidate.len() as u32;
        rec.zero_reductions = (nrows - rank) as u32;
        log.productive(d);
        let members = f.iter().all(|fi| fi.reduce(&candidate).is_zero());
        if members && is_groebner(&candidate)? {
            let gb = GroebnerBasis::new(ring, reduce_basis(&candidate), true, log.finish());
            return Ok((gb, d));
        }
    }
    Err(Error::NotReached(dmax))
}

/// `d_1 + ... + d_l - l + 1` over the `l = min(m, n + 1)` largest degrees.
pub fn macaulay_bound(degrees: &[u32], n: usize) -> u32 {
    let mut ds = degrees.to_vec();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    let l = ds.len().min(n + 1);
    ds[..l].iter().sum::<u32>() + 1 - l as u32
}

/// `C(n + d, n)` exactly.
pub fn monomial_count(n: usize, d: u32) -> BigUint {
    let mut acc = BigUint::one();
    for k in 1..=n as u64 {
        acc = acc * BigUint::from(d as u64 + k) / BigUint::from(k);
    }
    acc
}

/// `ceil(N^omega)` with `N = C(n + d, n)`: exact for integral `omega`,
/// otherwise via floating point.
pub fn complexity_estimate(n: usize, d: u32, omega: f64) -> Result<BigUint> {
    if !(2.0..3.0).contains(&omega) {
        return Err(Error::InvalidExponent(omega));
    }
    let big_n = monomial_count(n, d);
    if omega.fract() == 0.0 {
        return Ok(big_n.pow(omega as u32));
    }
    let nf: f64 = big_n
        .to_string()
        .parse()
        .map_err(|_| Error::InvalidExponent(omega))?;
    let v = nf.powf(omega);
    if !v.is_finite() {
        return Err(Error::InvalidExponent(omega));
    }
    // nudge away from representation error before rounding up
    let r = v.round();
    let v = if (v - r).abs() <= r * 1e-12 {
        r
    } else {
        v.ceil()
    };
    BigUint::from_f64(v).ok_or(Error::InvalidExponent(omega))
}
