//! Seeded random polynomial corpora.
//!
//! The generator is Xoshiro256++ seeded through `seed_from_u64` (SplitMix64
//! expansion of the 64-bit seed), so a seed names the same corpus on every
//! platform.

use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rootbound::poly::{normalize, sign_split, Polynomial};
use thiserror::Error;

/// Attempts per instance before giving up on a mixed-sign draw.
const MAX_REDRAWS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    SpecInvalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoefficientDistribution {
    /// Real coefficients uniform in `[lo, hi)`.
    Uniform { lo: f64, hi: f64 },
    /// Integer coefficients uniform in `[lo, hi]`.
    IntegerUniform { lo: i64, hi: i64 },
    /// Monic product of `(x - r)` with distinct roots uniform in `[lo, hi]`
    /// and pairwise gaps of at least `min_gap`.
    PlantedRoots { lo: f64, hi: f64, min_gap: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub degree_range: (usize, usize),
    pub distribution: CoefficientDistribution,
    pub require_mixed_signs: bool,
    pub count: usize,
    pub seed: u64,
}

/// One generated polynomial, with its roots when they were planted.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub poly: Polynomial,
    pub planted: Option<Vec<f64>>,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        let (lo, hi) = self.degree_range;
        if lo < 1 || hi > 100 || lo > hi {
            return Err(GenError::SpecInvalid(format!(
                "degree range {lo}:{hi} must lie within 1:100"
            )));
        }
        if self.count < 1 {
            return Err(GenError::SpecInvalid("count must be at least 1".into()));
        }
        match self.distribution {
            CoefficientDistribution::Uniform { lo, hi } => {
                if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                    return Err(GenError::SpecInvalid(format!("bad uniform range {lo}:{hi}")));
                }
            }
            CoefficientDistribution::IntegerUniform { lo, hi } => {
                if lo > hi || (lo == 0 && hi == 0) {
                    return Err(GenError::SpecInvalid(format!("bad integer range {lo}:{hi}")));
                }
            }
            CoefficientDistribution::PlantedRoots { lo, hi, min_gap } => {
                let (_, max_degree) = self.degree_range;
                if !(lo.is_finite() && hi.is_finite() && lo < hi && min_gap >= 0.0) {
                    return Err(GenError::SpecInvalid(format!("bad root range {lo}:{hi}")));
                }
                if min_gap * (max_degree as f64 - 1.0) >= hi - lo {
                    return Err(GenError::SpecInvalid(format!(
                        "{max_degree} roots with gap {min_gap} do not fit in {lo}:{hi}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Draws `spec.count` samples.
pub fn gen_samples(spec: &GeneratorSpec) -> Result<Vec<Sample>, GenError> {
    spec.validate()?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            for _ in 0..MAX_REDRAWS {
                let degree = rng.random_range(spec.degree_range.0..=spec.degree_range.1);
                let sample = draw(&mut rng, degree, spec.distribution);
                if !spec.require_mixed_signs || mixed(&sample.poly) {
                    return Ok(sample);
                }
            }
            Err(GenError::SpecInvalid(format!(
                "no mixed-sign polynomial after {MAX_REDRAWS} draws (instance {i})"
            )))
        })
        .collect()
}

/// Draws `spec.count` polynomials.
pub fn gen_random(spec: &GeneratorSpec) -> Result<Vec<Polynomial>, GenError> {
    Ok(gen_samples(spec)?.into_iter().map(|s| s.poly).collect())
}

fn mixed(p: &Polynomial) -> bool {
    let (p, _) = normalize(p.coeffs()).expect("nonzero");
    sign_split(&p).q() > 0
}

fn draw(rng: &mut Xoshiro256PlusPlus, degree: usize, dist: CoefficientDistribution) -> Sample {
    match dist {
        CoefficientDistribution::Uniform { lo, hi } => {
            let coeffs = nonzero_ends(degree, || rng.random_range(lo..hi));
            Sample {
                poly: Polynomial::new(coeffs).expect("nonzero leading"),
                planted: None,
            }
        }
        CoefficientDistribution::IntegerUniform { lo, hi } => {
            let coeffs = nonzero_ends(degree, || rng.random_range(lo..=hi) as f64);
            Sample {
                poly: Polynomial::new(coeffs).expect("nonzero leading"),
                planted: None,
            }
        }
        CoefficientDistribution::PlantedRoots { lo, hi, min_gap } => {
            // Uniform on the shrunk range, then spread by the gap: uniform
            // over all root sets honoring the gap.
            let span = (degree as f64 - 1.0) * min_gap;
            let mut roots: Vec<f64> = (0..degree)
                .map(|_| rng.random_range(lo..=hi - span))
                .collect();
            roots.sort_by(f64::total_cmp);
            for (i, r) in roots.iter_mut().enumerate() {
                *r += i as f64 * min_gap;
            }
            Sample {
                poly: Polynomial::new(expand(&roots)).expect("monic"),
                planted: Some(roots),
            }
        }
    }
}

/// Coefficients with the leading and constant terms redrawn until nonzero,
/// so the drawn degree survives normalization.
fn nonzero_ends(degree: usize, mut next: impl FnMut() -> f64) -> Vec<f64> {
    let mut coeffs: Vec<f64> = (0..=degree).map(|_| next()).collect();
    for j in [0, degree] {
        while coeffs[j] == 0.0 {
            coeffs[j] = next();
        }
    }
    coeffs
}

/// Coefficients of `prod (x - r)`, ascending.
pub fn expand(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= r * a;
        }
        c = next;
    }
    c
}
