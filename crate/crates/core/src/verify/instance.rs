use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::koszul::{check_crypto_semiregular, CAP_DEGREE};
use crate::polyring::{Monomial, PolySequence, Polynomial, RingCtx};

/// Attempts before [`random_affine_sequence`] gives up.
pub const MAX_RETRIES: u32 = 50;

/// A reproducible random instance: `m` dense affine polynomials in `n`
/// variables over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<u32>,
    pub seed: u64,
    /// Reject draws whose top parts are not cryptographic semi-regular.
    pub require_semiregular: bool,
}

impl InstanceSpec {
    /// `m` generators all of degree `d`.
    pub fn uniform(p: u32, n: usize, m: usize, d: u32, seed: u64) -> Self {
        Self {
            p,
            n,
            m,
            degrees: vec![d; m],
            seed,
            require_semiregular: true,
        }
    }

    fn validate(&self) -> Result<FieldSpec> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::InvalidInstance("need n >= 1 and m >= 1".into()));
        }
        if self.degrees.len() != self.m {
            return Err(Error::InvalidInstance(format!(
                "{} degrees given for m = {}",
                self.degrees.len(),
                self.m
            )));
        }
        if self.degrees.contains(&0) {
            return Err(Error::InvalidDegree);
        }
        FieldSpec::new(self.p as u64)
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &crate::polyring::Ring, d: u32) -> Polynomial {
    let p = ring.field.p();
    let top = Monomial::all_of_degree(ring.nvars, d);
    loop {
        let terms: Vec<(u32, Monomial)> = Monomial::all_up_to_degree(ring.nvars, d)
            .into_iter()
            .map(|m| (rng.gen_range(0..p), m))
            .collect();
        let f = Polynomial::from_terms(ring, terms);
        if f.terms().iter().any(|(_, m)| top.contains(m)) {
            return f;
        }
    }
}

/// Draws the instance described by `spec`. Coefficients are uniform over
/// `F_p` on every monomial of degree `<= d_i`, redrawn until the top part is
/// nonzero. With `require_semiregular`, whole sequences are redrawn until
/// `F^top` is cryptographic semi-regular.
pub fn random_affine_sequence(spec: &InstanceSpec) -> Result<PolySequence> {
    let field = spec.validate()?;
    if spec.require_semiregular && spec.m < spec.n {
        // fewer equations than variables never give an Artinian top ideal
        return Err(Error::NotArtinianWithinCap(CAP_DEGREE));
    }
    let ring = RingCtx::affine(field, spec.n);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut last = String::new();
    for _ in 0..MAX_RETRIES {
        let polys = spec
            .degrees
            .iter()
            .map(|&d| random_poly(&mut rng, &ring, d))
            .collect();
        let f = PolySequence::new(polys)?;
        if !spec.require_semiregular {
            return Ok(f);
        }
        match check_crypto_semiregular(&f.top()?) {
            Ok((true, _)) => return Ok(f),
            Ok((false, d)) => last = format!("top part not {d}-regular"),
            Err(Error::NotArtinianWithinCap(c)) => {
                last = format!("top ideal not Artinian up to degree {c}")
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed {
        retries: MAX_RETRIES,
        reason: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let spec = InstanceSpec::uniform(31, 3, 4, 2, 9);
        let a = random_affine_sequence(&spec).unwrap();
        let b = random_affine_sequence(&spec).unwrap();
        assert_eq!(a.polys(), b.polys());
        let c = random_affine_sequence(&InstanceSpec { seed: 10, ..spec }).unwrap();
        assert_ne!(a.polys(), c.polys());
        assert_eq!(a.degrees(), vec![2; 4]);
    }

    #[test]
    fn underdetermined_is_refused() {
        let spec = InstanceSpec::uniform(31, 3, 2, 2, 0);
        assert_eq!(
            random_affine_sequence(&spec).unwrap_err(),
            Error::NotArtinianWithinCap(CAP_DEGREE)
        );
        let free = InstanceSpec {
            require_semiregular: false,
            ..spec
        };
        assert_eq!(random_affine_sequence(&free).unwrap().len(), 2);
    }

    #[test]
    fn bad_specs() {
        let mut spec = InstanceSpec::uniform(31, 3, 4, 2, 0);
        spec.degrees.pop();
        assert!(matches!(
            random_affine_sequence(&spec),
            Err(Error::InvalidInstance(_))
        ));
        assert_eq!(
            random_affine_sequence(&InstanceSpec::uniform(30, 3, 4, 2, 0)).unwrap_err(),
            Error::NotPrime(30)
        );
    }
}
