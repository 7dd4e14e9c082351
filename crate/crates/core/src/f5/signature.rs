use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::buchberger::{reduce_basis, EngineOptions, GroebnerBasis, LogBuilder};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolySequence, Polynomial};

/// Module monomial `t * e_i` (with `index` 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub mono: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn unit(index: usize, nvars: usize) -> Self {
        Self {
            mono: Monomial::one(nvars),
            index,
        }
    }

    pub fn mul(&self, t: &Monomial) -> Signature {
        Signature {
            mono: self.mono.mul(t),
            index: self.index,
        }
    }

    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }
}

/// Schreyer order induced by the leading monomials of the generators:
/// compare `LM(t f_i)`, then the larger index is smaller.
#[derive(Debug, Clone)]
pub struct SchreyerOrder {
    lms: Vec<Monomial>,
}

impl SchreyerOrder {
    pub fn new(generators: &[Polynomial]) -> Self {
        Self {
            lms: generators
                .iter()
                .map(|f| f.lm().expect("nonzero generator").clone())
                .collect(),
        }
    }

    /// `LM(t f_i)`.
    pub fn image(&self, s: &Signature) -> Monomial {
        s.mono.mul(&self.lms[s.index])
    }

    pub fn compare(&self, a: &Signature, b: &Signature) -> Ordering {
        self.image(a)
            .cmp(&self.image(b))
            .then_with(|| b.index.cmp(&a.index))
            .then_with(|| a.mono.cmp(&b.mono))
    }
}

/// A polynomial with the signature of a representation over the generators.
#[derive(Debug, Clone)]
pub struct LabeledPoly {
    pub poly: Polynomial,
    pub sig: Signature,
}

/// Sort key for the work queue: degree, then signature ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
struct WorkKey {
    degree: u32,
    image: Monomial,
    rev_index: std::cmp::Reverse<usize>,
    mono: Monomial,
    /// Source of the candidate: `None` for a generator, `Some(k)` for
    /// `t * G[k]`. Ties between equal signatures go to the earliest source.
    source: Option<usize>,
}

impl Ord for WorkKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.degree,
            &self.image,
            self.rev_index,
            &self.mono,
            self.source,
        )
            .cmp(&(
                other.degree,
                &other.image,
                other.rev_index,
                &other.mono,
                other.source,
            ))
    }
}

impl PartialOrd for WorkKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct F5<'a> {
    order: SchreyerOrder,
    generators: Vec<Polynomial>,
    basis: Vec<LabeledPoly>,
    syzygies: Vec<Signature>,
    queue: BTreeSet<WorkKey>,
    log: LogBuilder,
    opts: &'a EngineOptions,
}

impl<'a> F5<'a> {
    fn key(&self, sig: &Signature, degree: u32, source: Option<usize>) -> WorkKey {
        WorkKey {
            degree,
            image: self.order.image(sig),
            rev_index: std::cmp::Reverse(sig.index),
            mono: sig.mono.clone(),
            source,
        }
    }

    fn sig_of(key: &WorkKey) -> Signature {
        Signature {
            mono: key.mono.clone(),
            index: key.rev_index.0,
        }
    }

    fn is_syzygy_signature(&self, sig: &Signature) -> bool {
        self.syzygies.iter().any(|s| s.divides(sig))
    }

    /// Regular reduction of `h` (signature `sig`) by the current basis: a
    /// step `h - c t g` is taken only when `t sig(g) < sig`.
    fn regular_reduce(&self, h: Polynomial, sig: &Signature) -> Polynomial {
        let field = h.ring().field;
        let mut work = h;
        let mut out: Vec<(u32, Monomial)> = Vec::new();
        loop {
            let Some((c, m)) = work.lt().map(|(c, m)| (c, m.clone())) else {
                break;
            };
            let reducer = self.basis.iter().find_map(|g| {
                let t = g.poly.lm().unwrap().quotient_of(&m)?;
                (self.order.compare(&g.sig.mul(&t), sig) == Ordering::Less).then_some((g, t))
            });
            match reducer {
                Some((g, t)) => {
                    let factor = field.mul(c, field.inv(g.poly.lc().unwrap()).unwrap());
                    work = work.sub(&g.poly.mul_term(factor, &t));
                }
                None => {
                    out.push((c, m.clone()));
                    work = work.sub(&Polynomial::term(work.ring(), c, m));
                }
            }
        }
        Polynomial::from_terms(work.ring(), out)
    }

    /// Whether `LM(h)` is top-reducible by some `t g` with `t sig(g) = sig`.
    fn singular_top_reducible(&self, h: &Polynomial, sig: &Signature) -> bool {
        let m = h.lm().unwrap();
        self.basis
            .iter()
            .any(|g| match g.poly.lm().unwrap().quotient_of(m) {
                Some(t) => g.sig.mul(&t) == *sig,
                None => false,
            })
    }

    fn add_pairs(&mut self, k: usize) {
        let new = &self.basis[k];
        let lm_new = new.poly.lm().unwrap().clone();
        let mut keys = Vec::new();
        let mut syz = Vec::new();
        for (j, g) in self.basis.iter().enumerate().take(k) {
            let lm_g = g.poly.lm().unwrap();
            let l = lm_g.lcm(&lm_new);
            let t_new = lm_new.quotient_of(&l).unwrap();
            let t_g = lm_g.quotient_of(&l).unwrap();
            let (s_new, s_g) = (new.sig.mul(&t_new), g.sig.mul(&t_g));
            // principal syzygy g * u_new - new * u_g
            let (p_new, p_g) = (new.sig.mul(lm_g), g.sig.mul(&lm_new));
            match self.order.compare(&p_new, &p_g) {
                Ordering::Greater => syz.push(p_new),
                Ordering::Less => syz.push(p_g),
                Ordering::Equal => {}
            }
            match self.order.compare(&s_new, &s_g) {
                Ordering::Greater => keys.push((s_new, l.degree(), k)),
                Ordering::Less => keys.push((s_g, l.degree(), j)),
                Ordering::Equal => self.log.at(l.degree()).discarded_singular += 1,
            }
        }
        self.syzygies.extend(syz);
        for (sig, degree, src) in keys {
            let key = self.key(&sig, degree, Some(src));
            self.queue.insert(key);
        }
    }

    fn run(mut self) -> Result<(Vec<Polynomial>, crate::buchberger::StepLog)> {
        let mut last_sig: Option<Signature> = None;
        while let Some(key) = self.queue.pop_first() {
            let degree = key.degree;
            if self.opts.truncate_degree.is_some_and(|t| degree > t) {
                break;
            }
            if let Some(cap) = self.opts.step_degree_cap {
                if degree > cap {
                    return Err(Error::TimeoutDegree { degree, cap });
                }
            }
            let sig = Self::sig_of(&key);
            if last_sig.as_ref() == Some(&sig) {
                self.log.at(degree).discarded_duplicate_signature += 1;
                continue;
            }
            last_sig = Some(sig.clone());
            if self.is_syzygy_signature(&sig) {
                self.log.at(degree).discarded_syzygy += 1;
                continue;
            }
            let candidate = match key.source {
                None => {
                    self.log.at(degree).generators_processed += 1;
                    self.generators[sig.index].clone()
                }
                Some(k) => {
                    self.log.at(degree).pairs_processed += 1;
                    let g = &self.basis[k];
                    let t = g
                        .sig
                        .mono
                        .quotient_of(&sig.mono)
                        .expect("signature multiple");
                    g.poly.mul_term(1, &t)
                }
            };
            let h = self.regular_reduce(candidate, &sig);
            if h.is_zero() {
                self.log.at(degree).zero_reductions += 1;
                self.log.processed(degree);
                self.syzygies.push(sig);
                continue;
            }
            if self.singular_top_reducible(&h, &sig) {
                self.log.at(degree).discarded_singular += 1;
                self.log.processed(degree);
                continue;
            }
            self.log.productive(degree);
            let rec = self.log.at(degree);
            rec.new_elements += 1;
            rec.new_lms.push(h.lm().unwrap().clone());
            self.basis.push(LabeledPoly {
                poly: h.monic(),
                sig,
            });
            let k = self.basis.len() - 1;
            self.add_pairs(k);
        }
        let polys = self.basis.into_iter().map(|g| g.poly).collect();
        Ok((polys, self.log.finish()))
    }
}

/// Signature-based Groebner basis. Homogeneous input is processed degree by
/// degree with signatures ascending under the Schreyer order; affine input
/// is homogenized first and the result dehomogenized. The returned basis is
/// reduced.
pub fn f5_gb(f: &PolySequence, opts: &EngineOptions) -> Result<GroebnerBasis> {
    if !f.is_homogeneous() {
        let gh = f5_gb(&f.homogenize()?, opts)?;
        return Ok(crate::buchberger::dehomogenize_gb(&gh));
    }
    let generators = f.polys().to_vec();
    let arity = f.ring().arity();
    let order = SchreyerOrder::new(&generators);
    let mut engine = F5 {
        order,
        generators: generators.clone(),
        basis: Vec::new(),
        syzygies: Vec::new(),
        queue: BTreeSet::new(),
        log: LogBuilder::default(),
        opts,
    };
    // trivial syzygies f_j e_i - f_i e_j have signature LM(f_j) e_i for j > i
    for i in 0..generators.len() {
        for fj in &generators[i + 1..] {
            engine.syzygies.push(Signature {
                mono: fj.lm().unwrap().clone(),
                index: i,
            });
        }
        let key = engine.key(&Signature::unit(i, arity), generators[i].degree(), None);
        engine.queue.insert(key);
    }
    let (polys, log) = engine.run()?;
    Ok(GroebnerBasis::new(
        f.ring(),
        reduce_basis(&polys),
        true,
        log,
    ))
}
