//! Cauchy polynomials and their unique positive root.
//!
//! A Cauchy polynomial `a_n x^n - a_{n-1} x^{n-1} - ... - a_0` has a positive
//! leading coefficient and non-positive remaining coefficients, at least one
//! of them strictly negative. It changes sign exactly once on `(0, inf)`, so
//! it has exactly one positive root.

use crate::{Error, Result};

/// Maximum iterations of the bracketed root solver.
pub const MAX_ITERATIONS: usize = 500;

/// Left bracket floor used if the reciprocal lower bound underflows.
const BRACKET_FLOOR: f64 = 1e-300;

/// Magnitudes `alpha[j]` of a Cauchy polynomial, ascending degree. The
/// represented polynomial is `alpha[n] x^n - sum_{j<n} alpha[j] x^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyPolynomial {
    alpha: Vec<f64>,
}

impl CauchyPolynomial {
    /// Builds a Cauchy polynomial from its leading term and the magnitudes of
    /// the lower terms. Repeated degrees are summed.
    pub fn new(
        leading: (usize, f64),
        lower: impl IntoIterator<Item = (usize, f64)>,
    ) -> Result<Self> {
        let (n, lead) = leading;
        if !(lead > 0.0 && lead.is_finite()) {
            return Err(Error::NotCauchy("leading coefficient must be positive"));
        }
        let mut alpha = vec![0.0; n + 1];
        alpha[n] = lead;
        for (j, a) in lower {
            if j >= n {
                return Err(Error::NotCauchy("lower term at or above the leading degree"));
            }
            if !a.is_finite() {
                return Err(Error::NonFinite { degree: j });
            }
            if a < 0.0 {
                return Err(Error::NotCauchy("positive coefficient below the leading term"));
            }
            alpha[j] += a;
        }
        Self::from_alpha(alpha)
    }

    /// Builds from the magnitude vector directly; the last element is the
    /// leading coefficient.
    pub fn from_alpha(alpha: Vec<f64>) -> Result<Self> {
        let Some((&lead, lower)) = alpha.split_last() else {
            return Err(Error::NotCauchy("empty coefficient list"));
        };
        if !(lead > 0.0 && lead.is_finite()) {
            return Err(Error::NotCauchy("leading coefficient must be positive"));
        }
        if let Some(j) = lower.iter().position(|a| !a.is_finite()) {
            return Err(Error::NonFinite { degree: j });
        }
        if lower.iter().any(|&a| a < 0.0) {
            return Err(Error::NotCauchy("positive coefficient below the leading term"));
        }
        if !lower.iter().any(|&a| a > 0.0) {
            return Err(Error::NotCauchy("a monomial is not a Cauchy polynomial"));
        }
        Ok(Self { alpha })
    }

    pub fn degree(&self) -> usize {
        self.alpha.len() - 1
    }

    /// Magnitude of the coefficient of `x^j` (0 above the degree).
    pub fn alpha(&self, j: usize) -> f64 {
        self.alpha.get(j).copied().unwrap_or(0.0)
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alpha
    }

    fn leading(&self) -> f64 {
        self.alpha[self.degree()]
    }

    /// Signed coefficients of the represented polynomial.
    pub fn signed_coeffs(&self) -> Vec<f64> {
        let n = self.degree();
        self.alpha
            .iter()
            .enumerate()
            .map(|(j, &a)| if j == n { a } else { -a })
            .collect()
    }

    /// Value of the represented polynomial at `x`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.value_and_slope(x).0
    }

    fn value_and_slope(&self, x: f64) -> (f64, f64) {
        let n = self.degree();
        let mut value = 0.0;
        let mut slope = 0.0;
        for (j, &a) in self.alpha.iter().enumerate().rev() {
            let c = if j == n { a } else { -a };
            slope = slope * x + value;
            value = value * x + c;
        }
        (value, slope)
    }

    /// `sum_{j<n} alpha[j] / alpha[n]`: the root of the linear equation that
    /// ends the degree-reducing recursion, and an upper bound on the root
    /// whenever the root is at least 1.
    pub fn mu1(&self) -> f64 {
        let n = self.degree();
        self.alpha[..n].iter().sum::<f64>() / self.leading()
    }

    /// The recursion exited at degree `s`:
    /// `alpha[n] x^s - alpha[n-1] x^{s-1} - ... - alpha[n-s+1] x - (alpha[n-s] + ... + alpha[0])`.
    ///
    /// `s = n` returns the polynomial itself, `s = 1` the linear equation
    /// whose root is [`mu1`](Self::mu1).
    pub fn exit_at(&self, s: usize) -> Result<CauchyPolynomial> {
        let n = self.degree();
        if s == 0 || s > n {
            return Err(Error::StageOutOfRange { stage: s, degree: n });
        }
        let shift = n - s;
        let mut alpha = self.alpha[shift..].to_vec();
        alpha[0] = self.alpha[..=shift].iter().sum();
        Self::from_alpha(alpha)
    }

    /// Factors out the largest power of `x` dividing the polynomial. The
    /// positive root is unchanged.
    pub fn deflate_zero_root(&self) -> CauchyPolynomial {
        let zeros = self.alpha.iter().take_while(|&&a| a == 0.0).count();
        CauchyPolynomial {
            alpha: self.alpha[zeros..].to_vec(),
        }
    }

    /// Reciprocals `(alpha[n-t] / alpha[n])^{1/t}` of the bounds on the roots
    /// of the reversed polynomial, for every `t` with `alpha[n-t] > 0`,
    /// ordered by `t`.
    pub fn reciprocal_sequence(&self) -> Vec<f64> {
        let n = self.degree();
        let lead = self.leading();
        (1..=n)
            .filter(|&t| self.alpha[n - t] > 0.0)
            .map(|t| (self.alpha[n - t] / lead).powf(1.0 / t as f64))
            .collect()
    }

    /// Largest element of the reciprocal sequence; never exceeds the
    /// positive root.
    pub fn lower_bound(&self) -> f64 {
        self.reciprocal_sequence().into_iter().fold(0.0, f64::max)
    }

    /// Sum of the two largest elements of the reciprocal sequence (the single
    /// element when only one exists); never below the positive root.
    pub fn lagrange_type_bound(&self) -> f64 {
        let mut seq = self.reciprocal_sequence();
        seq.sort_by(|a, b| b.total_cmp(a));
        seq.iter().take(2).sum()
    }

    /// The unique positive root, to `|root - mu| <= rel_tol * max(1, mu)`.
    ///
    /// The bracket starts at `[lower_bound, max(1, mu1)]` and is only ever
    /// shrunk. Newton steps are taken while they stay inside the bracket and
    /// keep halving; otherwise the step bisects.
    pub fn positive_root(&self, rel_tol: f64) -> Result<f64> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::InvalidTolerance(rel_tol));
        }
        let c = self.deflate_zero_root();
        let f = |x: f64| c.value_and_slope(x);

        let mut lo = c.lower_bound().max(BRACKET_FLOOR);
        let mut hi = c.mu1().max(1.0);
        let (flo, _) = f(lo);
        if flo == 0.0 {
            return Ok(lo);
        }
        // Rounding can put the exact lower bound a hair past the root.
        if flo > 0.0 {
            while f(lo).0 > 0.0 {
                lo *= 0.5;
            }
        }
        let (fhi, _) = f(hi);
        if fhi == 0.0 {
            return Ok(hi);
        }
        if fhi < 0.0 {
            while f(hi).0 < 0.0 {
                hi *= 2.0;
            }
        }

        let mut x = hi;
        let (mut fx, mut dfx) = f(x);
        let mut step = hi - lo;
        let mut prev_step = step;
        for _ in 0..MAX_ITERATIONS {
            let mid = 0.5 * (lo + hi);
            let tol = rel_tol * lo.max(1.0);
            if hi - lo <= tol || mid <= lo || mid >= hi {
                let polished = if dfx != 0.0 { x - fx / dfx } else { f64::NAN };
                return Ok(if polished >= lo && polished <= hi { polished } else { mid });
            }

            let newton = if dfx != 0.0 { x - fx / dfx } else { f64::NAN };
            let before_last = prev_step;
            prev_step = step;
            let next = if newton > lo && newton < hi && (newton - x).abs() <= 0.5 * before_last.abs()
            {
                newton
            } else {
                mid
            };
            step = next - x;
            x = next;
            (fx, dfx) = f(x);
            if fx == 0.0 {
                return Ok(x);
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }

            // A converged Newton iterate only pins one side; probe the other.
            if step.abs() < tol {
                let probe = if fx < 0.0 { x + tol } else { x - tol };
                if probe > lo && probe < hi {
                    let fp = f(probe).0;
                    if fp == 0.0 {
                        return Ok(probe);
                    }
                    if fp < 0.0 {
                        lo = probe;
                    } else {
                        hi = probe;
                    }
                }
            }
        }
        Err(Error::ToleranceNotReached {
            iterations: MAX_ITERATIONS,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> CauchyPolynomial {
        CauchyPolynomial::new((3, 1.0), [(1, 1.0), (0, 1.0)]).unwrap()
    }

    // Plain bisection on the represented polynomial.
    fn bisect(c: &CauchyPolynomial, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if c.evaluate(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn construction() {
        let c = cubic();
        assert_eq!(c.signed_coeffs(), vec![-1.0, -1.0, 0.0, 1.0]);
        let b = CauchyPolynomial::new((4, 2.0), [(2, 3.0)]).unwrap();
        assert_eq!(b.signed_coeffs(), vec![0.0, 0.0, -3.0, 0.0, 2.0]);
        assert!(matches!(
            CauchyPolynomial::new((2, 1.0), []),
            Err(Error::NotCauchy(_))
        ));
        assert!(matches!(
            CauchyPolynomial::new((2, 1.0), [(0, 0.0)]),
            Err(Error::NotCauchy(_))
        ));
        assert!(matches!(
            CauchyPolynomial::new((2, 1.0), [(0, -1.0)]),
            Err(Error::NotCauchy(_))
        ));
        assert!(matches!(
            CauchyPolynomial::new((2, 1.0), [(2, 1.0)]),
            Err(Error::NotCauchy(_))
        ));
        assert!(matches!(
            CauchyPolynomial::new((2, -1.0), [(0, 1.0)]),
            Err(Error::NotCauchy(_))
        ));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(cubic().lower_bound(), 1.0);
        let b = CauchyPolynomial::new((4, 2.0), [(2, 3.0)]).unwrap();
        assert!((b.lower_bound() - 1.5f64.sqrt()).abs() < 1e-15);
        let sq = CauchyPolynomial::new((2, 1.0), [(0, 4.0)]).unwrap();
        assert_eq!(sq.lower_bound(), 2.0);
    }

    #[test]
    fn lagrange_examples() {
        assert_eq!(cubic().lagrange_type_bound(), 2.0);
        let sq = CauchyPolynomial::new((2, 1.0), [(0, 4.0)]).unwrap();
        assert_eq!(sq.lagrange_type_bound(), 2.0);
        let c = CauchyPolynomial::new((3, 1.0), [(2, 2.0), (0, 1.0)]).unwrap();
        assert_eq!(c.lagrange_type_bound(), 3.0);
        assert!(c.positive_root(1e-12).unwrap() <= 3.0);
    }

    #[test]
    fn root_examples() {
        let golden = CauchyPolynomial::new((2, 1.0), [(1, 1.0), (0, 1.0)]).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((golden.positive_root(1e-12).unwrap() - phi).abs() < 1e-10);

        let c = cubic();
        let oracle = bisect(&c, 0.0, 2.0);
        assert!((oracle - 1.324_717_957_244_746).abs() < 1e-12);
        assert!((c.positive_root(1e-12).unwrap() - oracle).abs() < 1e-9);

        let sq = CauchyPolynomial::new((2, 1.0), [(0, 4.0)]).unwrap();
        assert!((sq.positive_root(1e-12).unwrap() - 2.0).abs() < 2e-12);
    }

    #[test]
    fn root_with_zero_constant() {
        // x^3 - 3x^2 = x^2 (x - 3)
        let c = CauchyPolynomial::new((3, 1.0), [(2, 3.0)]).unwrap();
        assert!((c.positive_root(1e-12).unwrap() - 3.0).abs() < 1e-11);
        assert_eq!(c.deflate_zero_root().alphas(), &[3.0, 1.0]);
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(matches!(cubic().positive_root(0.0), Err(Error::InvalidTolerance(_))));
        assert!(matches!(cubic().positive_root(1e-3), Err(Error::InvalidTolerance(_))));
    }

    #[test]
    fn tiny_tolerance_terminates() {
        let r = cubic().positive_root(1e-20).unwrap();
        assert!((r - 1.324_717_957_244_746).abs() < 1e-15);
    }

    #[test]
    fn exit_stages() {
        let c = cubic();
        assert_eq!(c.exit_at(3).unwrap(), c);
        assert_eq!(c.exit_at(2).unwrap().alphas(), &[2.0, 0.0, 1.0]);
        assert_eq!(c.exit_at(1).unwrap().alphas(), &[2.0, 1.0]);
        assert_eq!(
            c.exit_at(4),
            Err(Error::StageOutOfRange { stage: 4, degree: 3 })
        );
        assert!(c.exit_at(0).is_err());
    }

    #[test]
    fn intersection_at_one() {
        // f_n(x) = alpha_n x^n - ... - alpha_1 x and f_{n-1}(x) = f_n(x) / x
        // agree at x = 1.
        let c = CauchyPolynomial::from_alpha(vec![0.7, 1.3, 0.2, 2.5, 4.0]).unwrap();
        let n = c.degree();
        let mut f_n = c.signed_coeffs();
        f_n[0] = 0.0;
        let f_n1 = &f_n[1..];
        let eval = |cs: &[f64], x: f64| cs.iter().rev().fold(0.0, |acc, &a| acc * x + a);
        assert_eq!(eval(&f_n, 1.0), eval(f_n1, 1.0));
        assert_eq!(eval(&f_n, 1.0), 4.0 - 2.5 - 0.2 - 1.3);
        assert_eq!(f_n1.len(), n);
    }
}
