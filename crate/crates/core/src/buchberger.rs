//! Buchberger's algorithm with the normal selection strategy, Buchberger's
//! coprime criterion and the Gebauer-Moller chain criteria, plus the
//! Hilbert-driven variant and reduced-basis utilities shared by all engines.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, OrderingSpec, PolySequence, Polynomial, Ring};
use crate::series::hf_from_staircase;

/// Switches shared by the Groebner engines.
#[derive(Debug, Clone, Serialize)]
pub struct EngineOptions {
    /// Buchberger's first criterion (coprime leading monomials).
    pub coprime_criterion: bool,
    /// Gebauer-Moller chain criteria.
    pub chain_criterion: bool,
    /// Abort with [`Error::TimeoutDegree`] once a step degree exceeds this.
    pub step_degree_cap: Option<u32>,
    /// For homogeneous input: stop after this degree, returning a
    /// `d`-Groebner basis.
    pub truncate_degree: Option<u32>,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self {
            coprime_criterion: true,
            chain_criterion: true,
            step_degree_cap: None,
            truncate_degree: None,
        }
    }
}

impl EngineOptions {
    pub fn truncated(d: u32) -> Self {
        Self {
            truncate_degree: Some(d),
            ..Self::default()
        }
    }
}

/// Counters for one step degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub degree: u32,
    pub generators_processed: u32,
    pub pairs_processed: u32,
    pub discarded_coprime: u32,
    pub discarded_chain: u32,
    pub discarded_duplicate_signature: u32,
    pub discarded_syzygy: u32,
    pub discarded_singular: u32,
    pub skipped_hilbert: u32,
    pub zero_reductions: u32,
    pub new_elements: u32,
    pub new_lms: Vec<Monomial>,
}

/// Per-degree history of an engine run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StepLog {
    pub steps: Vec<StepRecord>,
    /// Highest step degree reached before the intermediate basis contained a
    /// Groebner basis (the solving degree `sd^hsd`). Input generators are
    /// processed at their own degree, so this is at least the degree of the
    /// lowest generator.
    pub highest_step_degree: u32,
    /// Highest step degree of any processed S-polynomial, including the
    /// trailing zero reductions.
    pub max_processed_degree: u32,
}

impl StepLog {
    pub fn step(&self, degree: u32) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.degree == degree)
    }

    pub fn zero_reductions_below(&self, degree: u32) -> u32 {
        self.steps
            .iter()
            .filter(|s| s.degree < degree)
            .map(|s| s.zero_reductions)
            .sum()
    }

    pub fn total_zero_reductions(&self) -> u32 {
        self.steps.iter().map(|s| s.zero_reductions).sum()
    }
}

/// Accumulates a [`StepLog`] keyed by degree.
#[derive(Debug, Default)]
pub(crate) struct LogBuilder {
    steps: BTreeMap<u32, StepRecord>,
    highest: u32,
    max_processed: u32,
}

impl LogBuilder {
    pub(crate) fn at(&mut self, degree: u32) -> &mut StepRecord {
        self.steps.entry(degree).or_insert_with(|| StepRecord {
            degree,
            ..Default::default()
        })
    }

    pub(crate) fn processed(&mut self, degree: u32) {
        self.max_processed = self.max_processed.max(degree);
    }

    /// Records that an item processed at `degree` grew the basis.
    pub(crate) fn productive(&mut self, degree: u32) {
        self.processed(degree);
        self.highest = self.highest.max(self.max_processed);
    }

    pub(crate) fn finish(self) -> StepLog {
        StepLog {
            steps: self.steps.into_values().collect(),
            highest_step_degree: self.highest,
            max_processed_degree: self.max_processed,
        }
    }
}

/// A Groebner basis together with the run that produced it.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub ordering: OrderingSpec,
    pub reduced: bool,
    pub log: StepLog,
    ring: Ring,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: &Ring, elements: Vec<Polynomial>, reduced: bool, log: StepLog) -> Self {
        Self {
            elements,
            ordering: ring.ordering,
            reduced,
            log,
            ring: ring.clone(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lms(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.lm().cloned())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Elements of degree `<= d`.
    pub fn up_to_degree(&self, d: u32) -> Vec<Polynomial> {
        self.elements
            .iter()
            .filter(|g| g.degree() <= d)
            .cloned()
            .collect()
    }

    /// Replaces the elements by the reduced Groebner basis they generate.
    pub fn into_reduced(mut self) -> Self {
        self.elements = reduce_basis(&self.elements);
        self.reduced = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Item {
    /// An input generator, by position.
    Generator(usize),
    /// An S-pair of basis positions `i < j`.
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct QueueKey {
    degree: u32,
    lcm: Monomial,
    item: Item,
}

/// Hilbert function oracle: `Some(HF(d))` where known.
pub type HilbertOracle<'a> = &'a dyn Fn(u32) -> Option<u64>;

struct Engine<'a> {
    ring: Ring,
    opts: &'a EngineOptions,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    inv_lcs: Vec<u32>,
    active: Vec<bool>,
    queue: BTreeSet<QueueKey>,
    log: LogBuilder,
    hilbert: Option<HilbertOracle<'a>>,
    standard_count: Option<(u32, u64)>,
}

impl<'a> Engine<'a> {
    fn new(generators: Vec<Polynomial>, ring: Ring, opts: &'a EngineOptions) -> Self {
        let mut queue = BTreeSet::new();
        for (i, g) in generators.iter().enumerate() {
            if let Some(lm) = g.lm() {
                queue.insert(QueueKey {
                    degree: g.degree(),
                    lcm: lm.clone(),
                    item: Item::Generator(i),
                });
            }
        }
        Self {
            ring,
            opts,
            generators,
            basis: Vec::new(),
            inv_lcs: Vec::new(),
            active: Vec::new(),
            queue,
            log: LogBuilder::default(),
            hilbert: None,
            standard_count: None,
        }
    }

    fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let basis = &self.basis;
        let inv = &self.inv_lcs;
        let active = &self.active;
        f.reduce_with(|m| {
            (0..basis.len())
                .find(|&k| active[k] && basis[k].lm().unwrap().divides(m))
                .map(|k| (&basis[k], inv[k]))
        })
    }

    fn active_lms(&self) -> Vec<Monomial> {
        (0..self.basis.len())
            .filter(|&k| self.active[k])
            .map(|k| self.basis[k].lm().unwrap().clone())
            .collect()
    }

    /// Gebauer-Moller update for a new (monic, reduced) element.
    fn insert(&mut self, h: Polynomial, degree: u32) {
        let hi = self.basis.len();
        let lm_h = h.lm().unwrap().clone();
        self.log.at(degree).new_elements += 1;
        self.log.at(degree).new_lms.push(lm_h.clone());

        // B-criterion on the existing pairs
        if self.opts.chain_criterion {
            let doomed: Vec<QueueKey> = self
                .queue
                .iter()
                .filter(|k| match k.item {
                    Item::Pair(i, j) => {
                        lm_h.divides(&k.lcm)
                            && self.basis[i].lm().unwrap().lcm(&lm_h) != k.lcm
                            && self.basis[j].lm().unwrap().lcm(&lm_h) != k.lcm
                    }
                    Item::Generator(_) => false,
                })
                .cloned()
                .collect();
            for k in doomed {
                self.log.at(k.degree).discarded_chain += 1;
                self.queue.remove(&k);
            }
        }

        // candidate pairs with h
        let mut candidates: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&i| self.active[i])
            .map(|i| {
                let lm_i = self.basis[i].lm().unwrap();
                (i, lm_i.lcm(&lm_h), lm_i.is_coprime(&lm_h))
            })
            .collect();

        if self.opts.chain_criterion {
            // M-criterion: drop (i, h) if some (k, h) has an LCM properly dividing it
            let lcms: Vec<Monomial> = candidates.iter().map(|c| c.1.clone()).collect();
            let mut kept = Vec::new();
            for c in candidates {
                let dominated = lcms.iter().any(|l| l.divides(&c.1) && *l != c.1);
                if dominated {
                    self.log.at(c.1.degree()).discarded_chain += 1;
                } else {
                    kept.push(c);
                }
            }
            // F-criterion: among equal LCMs keep one; drop all if one is coprime
            let mut by_lcm: BTreeMap<Monomial, Vec<(usize, bool)>> = BTreeMap::new();
            for (i, l, cop) in kept {
                by_lcm.entry(l).or_default().push((i, cop));
            }
            candidates = Vec::new();
            for (l, group) in by_lcm {
                let any_coprime = group.iter().any(|g| g.1);
                if any_coprime && self.opts.coprime_criterion {
                    let extra = group.len() as u32 - 1;
                    self.log.at(l.degree()).discarded_coprime += 1;
                    self.log.at(l.degree()).discarded_chain += extra;
                } else {
                    let (first, cop) = group[0];
                    self.log.at(l.degree()).discarded_chain += group.len() as u32 - 1;
                    candidates.push((first, l, cop));
                }
            }
        }

        self.basis.push(h.clone());
        self.inv_lcs.push(1);
        self.active.push(true);
        for (i, l, cop) in candidates {
            if cop && self.opts.coprime_criterion {
                self.log.at(l.degree()).discarded_coprime += 1;
                continue;
            }
            self.queue.insert(QueueKey {
                degree: l.degree(),
                lcm: l,
                item: Item::Pair(i, hi),
            });
        }
        // older elements whose LM is a multiple of LM(h) stop generating pairs
        for k in 0..hi {
            if self.active[k] && lm_h.divides(self.basis[k].lm().unwrap()) {
                self.active[k] = false;
            }
        }
        self.standard_count = None;
    }

    /// Hilbert-driven skip test for an item of degree `d`.
    fn hilbert_complete(&mut self, d: u32) -> Result<bool> {
        let Some(oracle) = self.hilbert else {
            return Ok(false);
        };
        let Some(expected) = oracle(d) else {
            return Ok(false);
        };
        let count = match self.standard_count {
            Some((deg, c)) if deg == d => c,
            _ => {
                let c = hf_from_staircase(&self.active_lms(), self.ring.arity(), d);
                self.standard_count = Some((d, c));
                c
            }
        };
        if count < expected {
            return Err(Error::OracleViolation {
                degree: d,
                claimed: expected,
                actual: count,
            });
        }
        Ok(count == expected)
    }

    fn run(mut self) -> Result<GroebnerBasis> {
        while let Some(key) = self.queue.pop_first() {
            if let Some(t) = self.opts.truncate_degree {
                if key.degree > t {
                    break;
                }
            }
            if let Some(cap) = self.opts.step_degree_cap {
                if key.degree > cap {
                    return Err(Error::TimeoutDegree {
                        degree: key.degree,
                        cap,
                    });
                }
            }
            if self.hilbert_complete(key.degree)? {
                self.log.at(key.degree).skipped_hilbert += 1;
                continue;
            }
            let (candidate, step_degree) = match key.item {
                Item::Generator(i) => {
                    self.log.at(key.degree).generators_processed += 1;
                    (self.generators[i].clone(), key.degree)
                }
                Item::Pair(i, j) => {
                    let s = self.basis[i].s_polynomial(&self.basis[j])?;
                    // the step degree is the degree of the S-polynomial itself,
                    // which drops below the LCM degree when top parts cancel
                    let d = if s.is_zero() { key.degree } else { s.degree() };
                    self.log.at(d).pairs_processed += 1;
                    (s, d)
                }
            };
            let r = if candidate.is_zero() {
                candidate
            } else {
                self.normal_form(&candidate)
            };
            if r.is_zero() {
                self.log.at(step_degree).zero_reductions += 1;
                self.log.processed(step_degree);
                continue;
            }
            let r = r.monic();
            self.log.productive(step_degree);
            if r.is_constant() {
                self.log.at(step_degree).new_elements += 1;
                self.log
                    .at(step_degree)
                    .new_lms
                    .push(r.lm().unwrap().clone());
                let log = self.log.finish();
                return Ok(GroebnerBasis::new(&self.ring, vec![r], true, log));
            }
            self.insert(r, step_degree);
        }
        let elements: Vec<Polynomial> = (0..self.basis.len())
            .filter(|&k| self.active[k])
            .map(|k| self.basis[k].clone())
            .collect();
        let reduced = reduce_basis(&elements);
        Ok(GroebnerBasis::new(
            &self.ring,
            reduced,
            true,
            self.log.finish(),
        ))
    }
}

fn check_nonzero(polys: &[Polynomial]) -> Result<Ring> {
    let first = polys.first().ok_or(Error::ZeroInput)?;
    if polys.iter().any(|p| **p.ring() != **first.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(first.ring().clone())
}

/// Reduced Groebner basis of `<F>` under the ring's ordering.
pub fn buchberger(f: &PolySequence, opts: &EngineOptions) -> Result<GroebnerBasis> {
    buchberger_from(f.polys(), opts)
}

/// Same as [`buchberger`], seeded with an arbitrary list of generators
/// (zero entries allowed and skipped).
pub fn buchberger_from(polys: &[Polynomial], opts: &EngineOptions) -> Result<GroebnerBasis> {
    let ring = check_nonzero(polys)?;
    Engine::new(polys.to_vec(), ring, opts).run()
}

/// Buchberger with Hilbert-driven pruning: once the standard monomials of
/// the current step degree are as few as `hf(d)`, the remaining items of that
/// degree are skipped. `hf` returning `None` disables pruning at that degree.
pub fn buchberger_hilbert_driven(
    f: &PolySequence,
    hf: HilbertOracle<'_>,
    opts: &EngineOptions,
) -> Result<GroebnerBasis> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut engine = Engine::new(f.polys().to_vec(), f.ring().clone(), opts);
    engine.hilbert = Some(hf);
    engine.run()
}

/// Inter-reduces a Groebner basis into the reduced one: drops elements whose
/// leading monomial is a multiple of another's, tail-reduces the rest, makes
/// them monic and sorts by leading monomial, ascending.
pub fn reduce_basis(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(Polynomial::monic)
        .collect();
    if gens.iter().any(Polynomial::is_constant) {
        let ring = gens[0].ring().clone();
        return vec![Polynomial::constant(&ring, 1)];
    }
    gens.sort_by(|a, b| a.lm().cmp(&b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !minimal
            .iter()
            .any(|h| h.lm().unwrap().divides(g.lm().unwrap()))
        {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = Polynomial::term(minimal[k].ring(), 1, minimal[k].lm().unwrap().clone());
        let tail = minimal[k].sub(&lead).reduce(&others);
        out.push(lead.add(&tail));
    }
    out
}

/// Whether every S-pair of `g` with LCM degree at most `d` reduces to zero
/// modulo `g`. Requires homogeneous input.
pub fn is_d_groebner(g: &[Polynomial], d: u32) -> Result<bool> {
    if g.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    s_pairs_reduce_to_zero(g, Some(d))
}

/// Buchberger's criterion on all S-pairs; coprime pairs are skipped.
pub fn is_groebner(g: &[Polynomial]) -> Result<bool> {
    s_pairs_reduce_to_zero(g, None)
}

fn s_pairs_reduce_to_zero(g: &[Polynomial], max_degree: Option<u32>) -> Result<bool> {
    let g: Vec<&Polynomial> = g.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Polynomial> = g.iter().map(|p| (*p).clone()).collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (g[i].lm().unwrap(), g[j].lm().unwrap());
            if let Some(d) = max_degree {
                if a.lcm(b).degree() > d {
                    continue;
                }
            }
            if a.is_coprime(b) {
                continue;
            }
            if !g[i].s_polynomial(g[j])?.reduce(&owned).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dehomogenizes a Groebner basis of `<F^h>` into the reduced Groebner basis
/// of `<F>`.
pub fn dehomogenize_gb(g_hom: &GroebnerBasis) -> GroebnerBasis {
    let ring = g_hom.ring().base_ring();
    let ring = if g_hom.ring().has_hom_var {
        ring
    } else {
        g_hom.ring().clone()
    };
    let elements: Vec<Polynomial> = g_hom
        .elements
        .iter()
        .map(Polynomial::dehomogenize)
        .collect();
    GroebnerBasis::new(&ring, reduce_basis(&elements), true, g_hom.log.clone())
}

/// Result of the homogenize-first pipeline.
#[derive(Debug, Clone)]
pub struct HSeededRun {
    /// `(G_hom)_{<= D}` from the truncated homogeneous pre-process.
    pub g_hom_prefix: Vec<Polynomial>,
    /// The seed `H`: the dehomogenized prefix, plus every `f_i` of degree
    /// above `d` (which the truncated pre-process cannot see).
    pub seed: Vec<Polynomial>,
    /// Reduced Groebner basis of `<F>`, with the step log of the latter
    /// process started from `H`.
    pub gb: GroebnerBasis,
}

/// Computes `(G_hom)_{<= d}` as a `d`-Groebner basis of `<F^h>`, dehomogenizes
/// it into `H` and continues Buchberger from `H`.
pub fn buchberger_h_seeded(f: &PolySequence, d: u32, opts: &EngineOptions) -> Result<HSeededRun> {
    let fh = if f.ring().has_hom_var {
        f.clone()
    } else {
        f.homogenize()?
    };
    let pre = EngineOptions {
        truncate_degree: Some(d),
        ..opts.clone()
    };
    let g_hom = buchberger(&fh, &pre)?;
    let g_hom_prefix = g_hom.up_to_degree(d);
    let mut seed: Vec<Polynomial> = g_hom_prefix.iter().map(Polynomial::dehomogenize).collect();
    if !f.ring().has_hom_var {
        seed.extend(f.iter().filter(|fi| fi.degree() > d).cloned());
    }
    let gb = buchberger_from(&seed, opts)?;
    Ok(HSeededRun {
        g_hom_prefix,
        seed,
        gb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::polyring::{parse_polynomial, RingCtx};

    fn seq(ring: &Ring, polys: &[&str]) -> PolySequence {
        PolySequence::new(
            polys
                .iter()
                .map(|s| parse_polynomial(ring, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn r(n: usize) -> Ring {
        RingCtx::affine(FieldSpec::new(73).unwrap(), n)
    }

    #[test]
    fn already_reduced_input() {
        let ring = r(2);
        let g = buchberger(&seq(&ring, &["x1", "x2"]), &EngineOptions::default()).unwrap();
        assert_eq!(g.elements, seq(&ring, &["x2", "x1"]).into_polys());
        assert_eq!(g.log.highest_step_degree, 1);
    }

    #[test]
    fn unit_ideal() {
        let ring = r(2);
        let g = buchberger(&seq(&ring, &["x1*x2 - 1", "x1"]), &EngineOptions::default()).unwrap();
        assert!(g.is_unit());
    }

    #[test]
    fn d_groebner_examples() {
        let ring = r(3);
        let g = seq(&ring, &["x1^2 + x2^2", "x1*x2"]);
        assert!(!is_d_groebner(&g, 3).unwrap());
        assert!(is_d_groebner(&g, 2).unwrap());
        let gb = buchberger(&g, &EngineOptions::default()).unwrap();
        for d in 0..8 {
            assert!(is_d_groebner(&gb.elements, d).unwrap());
        }
        let affine = seq(&ring, &["x1 + 1"]);
        assert_eq!(is_d_groebner(&affine, 2), Err(Error::NotHomogeneous));
    }

    #[test]
    fn criteria_do_not_change_the_result() {
        let ring = r(3);
        let f = seq(
            &ring,
            &[
                "x1^2 + 3*x2*x3 - x1",
                "x2^2 - x1*x3 + 2",
                "x3^2 + x1*x2 - x2",
            ],
        );
        let plain = EngineOptions {
            coprime_criterion: false,
            chain_criterion: false,
            ..Default::default()
        };
        let a = buchberger(&f, &EngineOptions::default()).unwrap();
        let b = buchberger(&f, &plain).unwrap();
        assert_eq!(a.elements, b.elements);
        assert!(is_groebner(&a.elements).unwrap());
        for fi in f.iter() {
            assert!(fi.reduce(&a.elements).is_zero());
        }
    }

    #[test]
    fn step_cap_aborts() {
        let ring = r(3);
        let f = seq(&ring, &["x1^2 + x2*x3", "x2^2 + x1*x3", "x3^2 + x1*x2"]);
        let opts = EngineOptions {
            step_degree_cap: Some(2),
            ..Default::default()
        };
        assert!(matches!(
            buchberger(&f, &opts),
            Err(Error::TimeoutDegree { cap: 2, .. })
        ));
    }

    #[test]
    fn hilbert_driven_regular_sequence() {
        let ring = r(2);
        let f = seq(&ring, &["x1^2", "x2^2"]);
        // prod (1 - z^2)^2 / (1 - z)^2 = 1 + 2z + z^2
        let hf = |d: u32| Some([1u64, 2, 1].get(d as usize).copied().unwrap_or(0));
        let a = buchberger_hilbert_driven(&f, &hf, &EngineOptions::default()).unwrap();
        let b = buchberger(&f, &EngineOptions::default()).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn hilbert_oracle_violation() {
        let ring = r(2);
        let f = seq(&ring, &["x1", "x2^2"]);
        // only x2^2 survives in degree 2 once x1 is in the basis
        let hf = |d: u32| if d == 2 { Some(3) } else { None };
        assert!(matches!(
            buchberger_hilbert_driven(&f, &hf, &EngineOptions::default()),
            Err(Error::OracleViolation { degree: 2, .. })
        ));
    }

    #[test]
    fn truncated_run_is_a_d_groebner_basis() {
        let ring = r(3);
        let f = seq(&ring, &["x1^2 + x2*x3", "x2^2 + x1*x3", "x1*x2 + x3^2"]);
        let full = buchberger(&f, &EngineOptions::default()).unwrap();
        let t = buchberger(&f, &EngineOptions::truncated(3)).unwrap();
        assert!(is_d_groebner(&t.elements, 3).unwrap());
        let full_low: Vec<_> = full.up_to_degree(3);
        assert_eq!(reduce_basis(&full_low), reduce_basis(&t.elements));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let ring = r(2);
        let polys = seq(&ring, &["x1^2 + x2", "x1^2 + 2*x2", "3*x1^3"]).into_polys();
        // <x1^2 + x2, x2, x1^3> -> {x2, x1^2}
        let gb = buchberger_from(&polys, &EngineOptions::default()).unwrap();
        assert_eq!(gb.elements, seq(&ring, &["x2", "x1^2"]).into_polys());
    }
}
