//! Ground truth for the bounds: Sturm-sequence isolation of the distinct
//! real roots, refined by bisection.
//!
//! The only dependency on the bounds module is the initial search interval.

use crate::bounds;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Maximum bisection depth during isolation.
pub const MAX_DEPTH: usize = 2000;

/// Remainder coefficients at or below this fraction of the dividend's
/// largest coefficient are treated as zero.
pub const SNAP_REL: f64 = 1e-12;

/// Real roots found by the oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Distinct real roots, strictly increasing.
    pub roots: Vec<f64>,
    /// Last element of `roots`.
    pub max_real_root: Option<f64>,
    pub search_interval: (f64, f64),
}

fn max_abs(c: &[f64]) -> f64 {
    c.iter().fold(0.0, |m, a| m.max(a.abs()))
}

fn trim(c: &mut Vec<f64>) {
    while c.last() == Some(&0.0) {
        c.pop();
    }
}

/// Remainder of `num / den` with small coefficients snapped to zero. An
/// empty result is the zero polynomial.
fn remainder(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut r = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    while r.len() > dn {
        let shift = r.len() - 1 - dn;
        let factor = r[r.len() - 1] / lead;
        for (i, &d) in den.iter().enumerate() {
            r[shift + i] -= factor * d;
        }
        r.pop();
    }
    let floor = SNAP_REL * max_abs(num);
    for c in r.iter_mut() {
        if c.abs() <= floor {
            *c = 0.0;
        }
    }
    trim(&mut r);
    r
}

/// Quotient of `num / den`, remainder discarded.
fn quotient(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut r = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    let mut q = vec![0.0; num.len().saturating_sub(dn).max(1)];
    while r.len() > dn {
        let shift = r.len() - 1 - dn;
        let factor = r[r.len() - 1] / lead;
        q[shift] = factor;
        for (i, &d) in den.iter().enumerate() {
            r[shift + i] -= factor * d;
        }
        r.pop();
    }
    q
}

/// Signed remainder chain `p0, p1, -rem(p0, p1), ...`; remainders from the
/// third term on are rescaled to unit max-norm.
fn remainder_chain(p0: Vec<f64>, p1: Vec<f64>) -> Vec<Vec<f64>> {
    let mut chain = vec![p0, p1];
    loop {
        let n = chain.len();
        if chain[n - 1].len() <= 1 {
            break;
        }
        let mut r = remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let scale = max_abs(&r);
        for c in r.iter_mut() {
            *c = -*c / scale;
        }
        chain.push(r);
    }
    chain
}

/// Sturm sequence of the square-free part of `p`, ending in a nonzero
/// constant.
pub fn sturm_sequence(p: &Polynomial) -> Result<Vec<Polynomial>> {
    let dp = p.derivative()?;
    let chain = remainder_chain(p.coeffs().to_vec(), dp.coeffs().to_vec());
    let gcd = chain.last().expect("chain is non-empty");
    let chain = if gcd.len() > 1 {
        let lead = gcd[gcd.len() - 1];
        let monic: Vec<f64> = gcd.iter().map(|c| c / lead).collect();
        let square_free = Polynomial::new(quotient(p.coeffs(), &monic))?;
        let derivative = square_free.derivative()?;
        remainder_chain(square_free.coeffs().to_vec(), derivative.coeffs().to_vec())
    } else {
        chain
    };
    chain.into_iter().map(Polynomial::new).collect()
}

/// A Sturm sequence ready for sign-variation counts.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        Ok(Self {
            seq: sturm_sequence(p)?,
        })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.seq
    }

    /// The square-free part of the input.
    pub fn square_free(&self) -> &Polynomial {
        &self.seq[0]
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: f64) -> usize {
        let mut count = 0;
        let mut last = 0.0;
        for p in &self.seq {
            let v = p.evaluate(x);
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && (v < 0.0) != (last < 0.0) {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, mut a: f64, mut b: f64) -> usize {
        let sf = self.square_free();
        // Moving an endpoint that is a root one step up keeps the half-open
        // interval's root set.
        if sf.evaluate(a) == 0.0 {
            a = a.next_up();
        }
        if sf.evaluate(b) == 0.0 {
            b = b.next_up();
        }
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn count_real_roots(p: &Polynomial, a: f64, b: f64) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(a, b))
}

/// `[-rho(p(-x)) - 1, rho(p) + 1]` with `rho` the Cauchy bound; a side
/// without sign changes uses the magnitude bound directly.
pub fn search_interval(p: &Polynomial) -> (f64, f64) {
    let side = |q: &Polynomial| {
        let (q, _) = crate::normalize(q.coeffs()).expect("nonzero polynomial");
        bounds::cauchy_bound(&q).unwrap_or_else(|_| {
            let n = q.degree();
            let lead = q.leading().abs();
            (q.coeffs()[..n].iter().map(|c| c.abs()).sum::<f64>() / lead).max(1.0)
        })
    };
    (-side(&p.reflect()) - 1.0, side(p) + 1.0)
}

/// Disjoint intervals `(a, b]`, ascending, each holding exactly one
/// distinct real root.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<(f64, f64)>> {
    let chain = SturmChain::new(p)?;
    isolate(&chain, search_interval(p))
}

fn isolate(chain: &SturmChain, (lo, hi): (f64, f64)) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    // Right half is pushed first so intervals come out ascending.
    let mut stack = vec![(lo, hi, chain.count(lo, hi), 0usize)];
    while let Some((a, b, n, depth)) = stack.pop() {
        match n {
            0 => continue,
            1 => {
                out.push((a, b));
                continue;
            }
            _ => {}
        }
        let mid = 0.5 * (a + b);
        if depth >= MAX_DEPTH || mid <= a || mid >= b {
            return Err(Error::DepthExceeded(MAX_DEPTH));
        }
        let left = chain.count(a, mid);
        stack.push((mid, b, n.saturating_sub(left), depth + 1));
        stack.push((a, mid, left, depth + 1));
    }
    Ok(out)
}

fn refine(chain: &SturmChain, (mut a, mut b): (f64, f64), tol: f64) -> f64 {
    loop {
        let mid = 0.5 * (a + b);
        if b - a <= tol * mid.abs().max(1.0) || mid <= a || mid >= b {
            return mid;
        }
        if chain.count(a, mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol <= 1e-6 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Every distinct real root, refined to width `tol * max(1, |root|)`.
pub fn real_roots(p: &Polynomial, tol: f64) -> Result<OracleResult> {
    check_tol(tol)?;
    let chain = SturmChain::new(p)?;
    let interval = search_interval(p);
    let roots: Vec<f64> = isolate(&chain, interval)?
        .into_iter()
        .map(|iv| refine(&chain, iv, tol))
        .collect();
    Ok(OracleResult {
        max_real_root: roots.last().copied(),
        roots,
        search_interval: interval,
    })
}

/// The largest real root, or `None` when there are no real roots.
pub fn max_real_root(p: &Polynomial, tol: f64) -> Result<Option<f64>> {
    check_tol(tol)?;
    let chain = SturmChain::new(p)?;
    let intervals = isolate(&chain, search_interval(p))?;
    Ok(intervals.last().map(|&iv| refine(&chain, iv, tol)))
}
