//! How close each bound comes to the largest real root over a corpus.

use rootbound::bounds::all_bounds;
use rootbound::oracle;
use rootbound::poly::{normalize, Polynomial};
use rootbound::{Result, DEFAULT_REL_TOL};

/// Bound names in their fixed order; ties in the win count go to the
/// earliest name.
pub const BOUND_NAMES: [&str; 8] = [
    "rho",
    "stage2",
    "stage3",
    "stage4",
    "rho_prime",
    "rho_dprime",
    "theorem",
    "lagrange",
];

/// Tolerance for the soundness check: a bound may sit this far (relative)
/// below the oracle's root before it counts as a violation.
pub const SOUNDNESS_REL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TightnessRow {
    pub bound_name: &'static str,
    /// Ratios are bound / largest real root; NaN when the row is empty.
    pub mean_ratio: f64,
    pub median_ratio: f64,
    pub worst_ratio: f64,
    /// Instances where this bound was the smallest.
    pub win_count: usize,
    /// Instances that contributed a ratio.
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TightnessReport {
    pub rows: Vec<TightnessRow>,
    pub instances: usize,
    /// Instances with a positive largest real root (the ones measured).
    pub measured: usize,
    pub all_same_sign: usize,
    pub no_real_root: usize,
    /// Real roots exist but none is positive, so ratios are meaningless.
    pub no_positive_root: usize,
    /// Bounds that fell below the oracle's root.
    pub soundness_violations: usize,
}

/// Largest real root of the raw polynomial, counting the roots at zero
/// that normalization strips.
pub fn largest_root(p: &Polynomial, zero_roots: usize, tol: f64) -> Result<Option<f64>> {
    let nonzero = if p.degree() >= 1 {
        oracle::max_real_root(p, tol)?
    } else {
        None
    };
    let zero = (zero_roots > 0).then_some(0.0);
    Ok(match (nonzero, zero) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    })
}

pub fn tightness_study(corpus: &[Polynomial], tol: f64) -> Result<TightnessReport> {
    let mut ratios: Vec<Vec<f64>> = vec![Vec::new(); BOUND_NAMES.len()];
    let mut wins = [0usize; BOUND_NAMES.len()];
    let mut report = TightnessReport {
        rows: Vec::new(),
        instances: corpus.len(),
        measured: 0,
        all_same_sign: 0,
        no_real_root: 0,
        no_positive_root: 0,
        soundness_violations: 0,
    };

    for raw in corpus {
        let (p, zero_roots) = normalize(raw.coeffs())?;
        let Some(bounds) = all_bounds(&p, DEFAULT_REL_TOL)?.bounds else {
            report.all_same_sign += 1;
            continue;
        };
        let root = match largest_root(&p, zero_roots, tol)? {
            None => {
                report.no_real_root += 1;
                continue;
            }
            Some(r) => r,
        };
        let slack = SOUNDNESS_REL * root.abs().max(1.0);
        report.soundness_violations += bounds
            .all_named()
            .iter()
            .filter(|(_, v)| *v < root - slack)
            .count();
        if root <= 0.0 {
            report.no_positive_root += 1;
            continue;
        }
        report.measured += 1;

        let mut best: Option<(usize, f64)> = None;
        for (name, value) in bounds.headline() {
            let i = BOUND_NAMES.iter().position(|&n| n == name).expect("known name");
            ratios[i].push(value / root);
            if best.is_none_or(|(_, b)| value < b) {
                best = Some((i, value));
            }
        }
        if let Some((i, _)) = best {
            wins[i] += 1;
        }
    }

    report.rows = BOUND_NAMES
        .iter()
        .zip(ratios)
        .zip(wins)
        .map(|((&bound_name, mut r), win_count)| {
            r.sort_by(f64::total_cmp);
            let samples = r.len();
            let (mean, median, worst) = if samples == 0 {
                (f64::NAN, f64::NAN, f64::NAN)
            } else {
                let mid = samples / 2;
                let median = if samples % 2 == 1 {
                    r[mid]
                } else {
                    0.5 * (r[mid - 1] + r[mid])
                };
                (r.iter().sum::<f64>() / samples as f64, median, r[samples - 1])
            };
            TightnessRow {
                bound_name,
                mean_ratio: mean,
                median_ratio: median,
                worst_ratio: worst,
                win_count,
                samples,
            }
        })
        .collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec()).unwrap()
    }

    fn row<'a>(r: &'a TightnessReport, name: &str) -> &'a TightnessRow {
        r.rows.iter().find(|row| row.bound_name == name).unwrap()
    }

    #[test]
    fn cubic_theorem_is_exact() {
        let r = tightness_study(&[poly(&[-1.0, -1.0, 0.0, 1.0])], 1e-12).unwrap();
        assert_eq!(r.measured, 1);
        assert!((row(&r, "theorem").mean_ratio - 1.0).abs() < 1e-6);
        assert_eq!(row(&r, "stage4").samples, 0);
        assert!(row(&r, "stage4").mean_ratio.is_nan());
        // stage3 equals the root too and comes first in the fixed order.
        assert_eq!(row(&r, "stage3").win_count, 1);
        assert_eq!(r.rows.iter().map(|r| r.win_count).sum::<usize>(), 1);
        assert_eq!(r.soundness_violations, 0);
    }

    #[test]
    fn no_real_roots_counted_apart() {
        let r = tightness_study(&[poly(&[1.0, 0.0, 1.0])], 1e-12).unwrap();
        assert_eq!(r.all_same_sign, 1);
        assert_eq!(r.measured, 0);
        assert!(r.rows.iter().all(|row| row.samples == 0));

        // x^2 - x + 1 has a negative coefficient and no real roots.
        let r = tightness_study(&[poly(&[1.0, -1.0, 1.0])], 1e-12).unwrap();
        assert_eq!(r.no_real_root, 1);
        assert!(r.rows.iter().all(|row| row.samples == 0));
    }

    #[test]
    fn binomial_ratios() {
        let r = tightness_study(&[poly(&[-4.0, 0.0, 1.0])], 1e-12).unwrap();
        for name in ["stage2", "rho_dprime", "theorem", "lagrange"] {
            assert!((row(&r, name).mean_ratio - 1.0).abs() < 1e-9, "{name}");
        }
        // The plain sums give 4 / 1 for a root at 2.
        for name in ["rho", "rho_prime"] {
            assert!((row(&r, name).mean_ratio - 2.0).abs() < 1e-9, "{name}");
        }
    }

    #[test]
    fn negative_only_roots() {
        // (x + 1)(x + 2)(x^2 - 3x + 3): mixed signs, largest root -1.
        let c = crate::gen::expand(&[-1.0, -2.0]);
        let mut prod = vec![0.0; c.len() + 2];
        for (i, &a) in c.iter().enumerate() {
            prod[i] += 3.0 * a;
            prod[i + 1] -= 3.0 * a;
            prod[i + 2] += a;
        }
        let r = tightness_study(&[poly(&prod)], 1e-12).unwrap();
        assert_eq!(r.no_positive_root, 1);
        assert_eq!(r.measured, 0);
    }

    #[test]
    fn zero_roots_are_counted() {
        // x^2 (x + 1) has largest real root 0.
        assert_eq!(
            largest_root(&poly(&[1.0, 1.0]), 2, 1e-12).unwrap(),
            Some(0.0)
        );
        assert_eq!(largest_root(&poly(&[3.0]), 1, 1e-12).unwrap(), Some(0.0));
        assert_eq!(largest_root(&poly(&[3.0]), 0, 1e-12).unwrap(), None);
    }
}
