//! Upper bounds on the real roots of a normalized polynomial.
//!
//! Every bound here is clamped below by 1 and holds for all real roots of
//! the polynomial. They fall into three groups:
//!
//! * the Cauchy bound and the stage bounds obtained by stopping the
//!   degree-reducing recursion on the magnitude polynomial
//!   `|a_n| x^n - |a_{n-1}| x^{n-1} - ... - |a_0|` early;
//! * bounds that only sum the negative coefficients, divided by a positive
//!   coefficient `A_l` whose degree `l` lies above every negative degree
//!   (plain ratio, and its `1/(l-k)`-th power with `k` the top negative
//!   degree);
//! * the smallest positive root over all Cauchy polynomials
//!   `A_l x^l - sum B_j x^j` extracted from the polynomial.

use std::collections::BTreeMap;

use crate::cauchy::CauchyPolynomial;
use crate::poly::{sign_split, Polynomial, SignSplit};
use crate::{Error, Result};

/// Exit stages carried by a [`BoundReport`].
pub const REPORT_STAGES: [usize; 4] = [1, 2, 3, 4];

fn checked_split(p: &Polynomial) -> Result<SignSplit> {
    if !p.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let split = sign_split(p);
    if split.q() == 0 {
        return Err(Error::AllSameSign);
    }
    Ok(split)
}

fn checked_l(split: &SignSplit, l: usize) -> Result<f64> {
    let k = split.top_negative_degree().ok_or(Error::NoNegativeCoefficients)?;
    match split.positive.get(&l) {
        Some(&a) if l > k => Ok(a),
        _ => Err(Error::InvalidL { l }),
    }
}

fn negative_split(p: &Polynomial) -> Result<SignSplit> {
    checked_split(p).map_err(|e| match e {
        Error::AllSameSign => Error::NoNegativeCoefficients,
        e => e,
    })
}

/// The Cauchy polynomial built from the magnitudes of all coefficients.
pub fn magnitude_cauchy(p: &Polynomial) -> Result<CauchyPolynomial> {
    checked_split(p)?;
    CauchyPolynomial::from_alpha(p.coeffs().iter().map(|c| c.abs()).collect())
}

/// `max{1, sum_{j<n} |a_j| / a_n}`.
pub fn cauchy_bound(p: &Polynomial) -> Result<f64> {
    Ok(magnitude_cauchy(p)?.mu1().max(1.0))
}

/// Positive root of the recursion exited at degree `s`,
/// `a_n x^s - |a_{n-1}| x^{s-1} - ... - |a_{n-s+1}| x - (|a_{n-s}| + ... + |a_0|)`.
pub fn stage_mu(p: &Polynomial, s: usize, rel_tol: f64) -> Result<f64> {
    let c = magnitude_cauchy(p)?;
    let staged = c.exit_at(s)?;
    if s == 1 {
        return Ok(staged.mu1());
    }
    staged.positive_root(rel_tol)
}

/// Closed form of the quadratic exit,
/// `[|a_{n-1}| + sqrt(a_{n-1}^2 + 4 a_n (|a_{n-2}| + ... + |a_0|))] / (2 a_n)`.
pub fn stage_mu2_closed_form(p: &Polynomial) -> Result<f64> {
    let c = magnitude_cauchy(p)?;
    let q = c.exit_at(2)?;
    let (tail, b, a) = (q.alpha(0), q.alpha(1), q.alpha(2));
    Ok((b + (b * b + 4.0 * a * tail).sqrt()) / (2.0 * a))
}

/// `max{1, stage_mu(p, s)}`.
pub fn stage_bound(p: &Polynomial, s: usize, rel_tol: f64) -> Result<f64> {
    Ok(stage_mu(p, s, rel_tol)?.max(1.0))
}

/// The Cauchy polynomial `A_l x^l - sum_j B_j x^j` keeping every negative
/// term of `p`.
pub fn extract_cauchy(p: &Polynomial, l: usize) -> Result<CauchyPolynomial> {
    let split = negative_split(p)?;
    let a = checked_l(&split, l)?;
    CauchyPolynomial::new((l, a), split.negative)
}

/// `max{1, (sum B) / A_l}`.
pub fn neg_sum_bound_l(p: &Polynomial, l: usize) -> Result<f64> {
    let split = negative_split(p)?;
    let a = checked_l(&split, l)?;
    Ok((split.negative_sum() / a).max(1.0))
}

/// `max{1, (sum B) / A_max}` with `A_max` the largest admissible `A_l`.
pub fn neg_sum_bound(p: &Polynomial) -> Result<f64> {
    let split = negative_split(p)?;
    let a_max = split
        .admissible_degrees()
        .into_iter()
        .map(|l| split.positive[&l])
        .fold(0.0, f64::max);
    Ok((split.negative_sum() / a_max).max(1.0))
}

/// `max{1, ((sum B) / A_l)^{1/(l-k)}}` with `k` the top negative degree.
pub fn power_bound_l(p: &Polynomial, l: usize) -> Result<f64> {
    let split = negative_split(p)?;
    let a = checked_l(&split, l)?;
    let k = split.top_negative_degree().expect("q >= 1");
    Ok(power_term(split.negative_sum(), a, l - k))
}

fn power_term(neg_sum: f64, a: f64, gap: usize) -> f64 {
    (neg_sum / a).powf(1.0 / gap as f64).max(1.0)
}

/// Minimum of [`power_bound_l`] over admissible `l`.
pub fn power_bound(p: &Polynomial) -> Result<f64> {
    let split = negative_split(p)?;
    Ok(power_bound_per_l(&split).values().copied().fold(f64::INFINITY, f64::min))
}

fn power_bound_per_l(split: &SignSplit) -> BTreeMap<usize, f64> {
    let k = split.top_negative_degree().expect("q >= 1");
    let neg = split.negative_sum();
    split
        .admissible_degrees()
        .into_iter()
        .map(|l| (l, power_term(neg, split.positive[&l], l - k)))
        .collect()
}

/// `max{1, min_l mu_l}` over the positive roots `mu_l` of every extracted
/// Cauchy polynomial.
pub fn theorem_bound(p: &Polynomial, rel_tol: f64) -> Result<f64> {
    let split = negative_split(p)?;
    let mut best = f64::INFINITY;
    for l in split.admissible_degrees() {
        let c = CauchyPolynomial::new((l, split.positive[&l]), split.negative.clone())?;
        best = best.min(c.positive_root(rel_tol)?);
    }
    Ok(best.max(1.0))
}

/// `max{1, lagrange}` where `lagrange` is the sum of the two largest terms
/// `(|a_{n-t}| / a_n)^{1/t}`.
pub fn lagrange_bound(p: &Polynomial) -> Result<f64> {
    Ok(magnitude_cauchy(p)?.lagrange_type_bound().max(1.0))
}

/// Every bound for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    pub rho: f64,
    /// Stage `s` to `max{1, mu_s}` for `s` in 1..=min(4, n).
    pub stage_bounds: BTreeMap<usize, f64>,
    pub rho_prime_per_l: BTreeMap<usize, f64>,
    pub rho_prime: f64,
    pub rho_dprime_per_l: BTreeMap<usize, f64>,
    pub rho_dprime: f64,
    pub theorem: f64,
    pub lagrange: f64,
}

impl Bounds {
    /// The headline bounds in their fixed order; stages above the degree
    /// are skipped.
    pub fn headline(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![("rho", self.rho)];
        for (s, name) in [(2, "stage2"), (3, "stage3"), (4, "stage4")] {
            if let Some(&v) = self.stage_bounds.get(&s) {
                out.push((name, v));
            }
        }
        out.extend([
            ("rho_prime", self.rho_prime),
            ("rho_dprime", self.rho_dprime),
            ("theorem", self.theorem),
            ("lagrange", self.lagrange),
        ]);
        out
    }

    /// Every value in the report, including per-`l` entries, with flat
    /// names such as `stage1` or `rho_prime_l3`.
    pub fn all_named(&self) -> Vec<(String, f64)> {
        let mut out = vec![("rho".to_string(), self.rho)];
        out.extend(self.stage_bounds.iter().map(|(s, &v)| (format!("stage{s}"), v)));
        out.push(("rho_prime".into(), self.rho_prime));
        out.extend(
            self.rho_prime_per_l
                .iter()
                .map(|(l, &v)| (format!("rho_prime_l{l}"), v)),
        );
        out.push(("rho_dprime".into(), self.rho_dprime));
        out.extend(
            self.rho_dprime_per_l
                .iter()
                .map(|(l, &v)| (format!("rho_dprime_l{l}"), v)),
        );
        out.push(("theorem".into(), self.theorem));
        out.push(("lagrange".into(), self.lagrange));
        out
    }
}

/// Bounds for one polynomial, or the marker that every coefficient shares
/// one sign (no positive roots, so 0 bounds them).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bounds: Option<Bounds>,
}

impl BoundReport {
    pub fn all_same_sign(&self) -> bool {
        self.bounds.is_none()
    }
}

pub fn all_bounds(p: &Polynomial, rel_tol: f64) -> Result<BoundReport> {
    if !p.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let split = sign_split(p);
    if split.q() == 0 {
        return Ok(BoundReport { bounds: None });
    }
    let magnitude = magnitude_cauchy(p)?;
    let rho = magnitude.mu1().max(1.0);

    let mut stage_bounds = BTreeMap::new();
    for s in REPORT_STAGES.into_iter().filter(|&s| s <= p.degree()) {
        stage_bounds.insert(s, stage_bound(p, s, rel_tol)?);
    }

    let neg = split.negative_sum();
    let rho_prime_per_l: BTreeMap<usize, f64> = split
        .admissible_degrees()
        .into_iter()
        .map(|l| (l, (neg / split.positive[&l]).max(1.0)))
        .collect();
    let rho_prime = rho_prime_per_l.values().copied().fold(f64::INFINITY, f64::min);
    let rho_dprime_per_l = power_bound_per_l(&split);
    let rho_dprime = rho_dprime_per_l.values().copied().fold(f64::INFINITY, f64::min);

    Ok(BoundReport {
        bounds: Some(Bounds {
            rho,
            stage_bounds,
            rho_prime_per_l,
            rho_prime,
            rho_dprime_per_l,
            rho_dprime,
            theorem: theorem_bound(p, rel_tol)?,
            lagrange: magnitude.lagrange_type_bound().max(1.0),
        }),
    })
}
