use serde::{Deserialize, Serialize};

use crate::buchberger::{buchberger, EngineOptions};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::polyring::{Monomial, PolySequence, Polynomial, Ring, RingCtx};
use crate::series::{hf_from_staircase, homogenized_prefix, semiregular_series};

use super::{verify_sequence, CheckSet};

const WORKED_EXAMPLE: &str = include_str!("../../golden/worked_example.json");

type Terms = Vec<(i64, Vec<u32>)>;

/// The worked example over `F_73` with four quadrics in three variables,
/// as recorded in `golden/worked_example.json`.
#[derive(Debug, Clone, Deserialize)]
pub struct GoldenExample {
    pub p: u32,
    pub n: usize,
    pub degrees: Vec<u32>,
    f: Vec<Terms>,
    f_top: Vec<Terms>,
    g_top: Vec<Terms>,
    pub lm_top: Vec<Vec<u32>>,
    pub hs_top: Vec<u64>,
    pub dreg_top: u32,
    g_hom: Vec<Terms>,
    pub lm_hom: Vec<Vec<u32>>,
    pub hs_hom_prefix: Vec<u64>,
    /// `(d, HF_{R'/<F^h>}(d))` beyond the prefix.
    pub hf_hom: Vec<(u32, u64)>,
    g: Vec<Terms>,
}

fn build(ring: &Ring, polys: &[Terms]) -> Vec<Polynomial> {
    polys
        .iter()
        .map(|t| {
            let terms: Vec<(i64, &[u32])> = t.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            Polynomial::from_signed(ring, &terms)
        })
        .collect()
}

fn sorted_by_lm(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort_by(|a, b| a.lm().cmp(&b.lm()));
    v
}

fn monomials(v: &[Vec<u32>]) -> Vec<Monomial> {
    let mut m: Vec<Monomial> = v.iter().map(|e| Monomial::new(e)).collect();
    m.sort();
    m
}

impl GoldenExample {
    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.p as u64)
    }

    pub fn ring(&self) -> Result<Ring> {
        Ok(RingCtx::affine(self.field()?, self.n))
    }

    pub fn system(&self) -> Result<PolySequence> {
        PolySequence::new(build(&self.ring()?, &self.f))
    }

    pub fn top_system(&self) -> Result<PolySequence> {
        PolySequence::new(build(&self.ring()?, &self.f_top))
    }

    pub fn g_top(&self) -> Result<Vec<Polynomial>> {
        Ok(sorted_by_lm(build(&self.ring()?, &self.g_top)))
    }

    pub fn g_hom(&self) -> Result<Vec<Polynomial>> {
        let ring = RingCtx::homogenized(self.field()?, self.n);
        Ok(sorted_by_lm(build(&ring, &self.g_hom)))
    }

    pub fn g(&self) -> Result<Vec<Polynomial>> {
        Ok(sorted_by_lm(build(&self.ring()?, &self.g)))
    }
}

/// Loads the bundled worked example.
pub fn worked_example() -> Result<GoldenExample> {
    serde_json::from_str(WORKED_EXAMPLE).map_err(|e| Error::Golden(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenReport {
    pub checks: Vec<GoldenCheck>,
    pub pass: bool,
}

fn item(name: &str, pass: bool, detail: impl FnOnce() -> String) -> GoldenCheck {
    let detail = if pass { String::new() } else { detail() };
    GoldenCheck {
        name: name.into(),
        pass,
        detail,
    }
}

fn show(v: &[Polynomial]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Recomputes every recorded quantity of the worked example and compares.
pub fn verify_golden(ex: &GoldenExample) -> Result<GoldenReport> {
    let n = ex.n;
    let f = ex.system()?;
    let opts = EngineOptions::default();
    let mut checks = Vec::new();

    checks.push(item("degrees", f.degrees() == ex.degrees, || {
        format!("{:?}", f.degrees())
    }));
    let f_top = f.top()?;
    checks.push(item(
        "F^top",
        f_top.polys() == ex.top_system()?.polys(),
        || show(f_top.polys()),
    ));

    let g_top = buchberger(&f_top, &opts)?;
    let got = sorted_by_lm(g_top.elements.clone());
    checks.push(item("G_top", got == ex.g_top()?, || show(&got)));
    let lms = g_top.lms();
    let mut sorted_lms = lms.clone();
    sorted_lms.sort();
    checks.push(item(
        "LM(G_top)",
        sorted_lms == monomials(&ex.lm_top),
        || format!("{sorted_lms:?}"),
    ));

    let hs: Vec<u64> = (0..=ex.dreg_top)
        .map(|d| hf_from_staircase(&lms, n, d))
        .collect();
    let mut expected_hs = ex.hs_top.clone();
    expected_hs.push(0);
    checks.push(item("HS(R/<F^top>) from G_top", hs == expected_hs, || {
        format!("{hs:?}")
    }));
    let series = semiregular_series(n, &ex.degrees, 16)?
        .to_u64()
        .unwrap_or_default();
    checks.push(item(
        "[prod (1 - z^d_i) / (1 - z)^n]",
        series == ex.hs_top,
        || format!("{series:?}"),
    ));
    let dreg = hs.iter().position(|&h| h == 0).map(|d| d as u32);
    checks.push(item("d_reg(<F^top>)", dreg == Some(ex.dreg_top), || {
        format!("{dreg:?}")
    }));

    let g_hom = buchberger(&f.homogenize()?, &opts)?;
    let got = sorted_by_lm(g_hom.elements.clone());
    checks.push(item("G_hom", got == ex.g_hom()?, || show(&got)));
    let hom_lms = g_hom.lms();
    let mut sorted_hom_lms = hom_lms.clone();
    sorted_hom_lms.sort();
    checks.push(item(
        "LM(G_hom)",
        sorted_hom_lms == monomials(&ex.lm_hom),
        || format!("{sorted_hom_lms:?}"),
    ));
    let prefix: Vec<u64> = (0..ex.dreg_top)
        .map(|d| hf_from_staircase(&hom_lms, n + 1, d))
        .collect();
    checks.push(item(
        "HF(R'/<F^h>) below D",
        prefix == ex.hs_hom_prefix,
        || format!("{prefix:?}"),
    ));
    let expected = homogenized_prefix(n, &ex.degrees)?
        .to_u64()
        .unwrap_or_default();
    checks.push(item(
        "HS(R'/<F^h>) mod z^D",
        expected == ex.hs_hom_prefix,
        || format!("{expected:?}"),
    ));
    let tail: Vec<(u32, u64)> = ex
        .hf_hom
        .iter()
        .map(|&(d, _)| (d, hf_from_staircase(&hom_lms, n + 1, d)))
        .collect();
    checks.push(item(
        "HF(R'/<F^h>) at and above D",
        tail == ex.hf_hom,
        || format!("{tail:?}"),
    ));

    let g = buchberger(&f, &opts)?;
    let got = sorted_by_lm(g.elements.clone());
    checks.push(item("G", got == ex.g()?, || show(&got)));

    let report = verify_sequence(&f, CheckSet::ALL, None)?;
    checks.push(item(
        "verify report",
        report.pass && report.d == ex.dreg_top,
        || serde_json::to_string(&report).unwrap_or_default(),
    ));

    let pass = checks.iter().all(|c| c.pass);
    Ok(GoldenReport { checks, pass })
}
