//! Dense real polynomials, normalization and the sign split.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// A dense polynomial with coefficients in ascending degree order.
///
/// The leading coefficient is always nonzero; the zero polynomial cannot be
/// represented.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial, dropping zero coefficients on the high-degree
    /// side.
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if let Some(degree) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { degree });
        }
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Result<Polynomial> {
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| j as f64 * c)
            .collect();
        Ok(Polynomial { coeffs })
    }

    /// Multiplies every coefficient by `c`, which must be nonzero and finite.
    pub fn scale(&self, c: f64) -> Polynomial {
        assert!(c != 0.0 && c.is_finite(), "scale factor must be nonzero and finite");
        Polynomial {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    /// The polynomial `p(-x)`.
    pub fn reflect(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { -c } else { c })
            .collect();
        Polynomial { coeffs }
    }

    /// True when the leading coefficient is positive and the constant term
    /// is nonzero, i.e. the form produced by [`normalize`].
    pub fn is_normalized(&self) -> bool {
        self.leading() > 0.0 && self.coeffs[0] != 0.0
    }
}

/// Normalizes a raw coefficient sequence (ascending degree).
///
/// High-degree zeros are dropped, the whole sequence is negated when the
/// leading coefficient is negative, and zero coefficients on the constant
/// side are stripped. Returns the polynomial together with the number of
/// stripped zeros, which is the multiplicity of the root at 0.
pub fn normalize(raw: &[f64]) -> Result<(Polynomial, usize)> {
    let p = Polynomial::new(raw.to_vec())?;
    let zeros = p.coeffs.iter().take_while(|&&c| c == 0.0).count();
    let sign = if p.leading() < 0.0 { -1.0 } else { 1.0 };
    let coeffs = p.coeffs[zeros..].iter().map(|&c| sign * c).collect();
    Ok((Polynomial { coeffs }, zeros))
}

/// Partition of the nonzero coefficients by sign.
#[derive(Debug, Clone, PartialEq)]
pub struct SignSplit {
    /// Degree to positive coefficient.
    pub positive: BTreeMap<usize, f64>,
    /// Degree to absolute value of a negative coefficient.
    pub negative: BTreeMap<usize, f64>,
    /// Zero coefficients on the constant side (0 for a normalized input).
    pub zero_root_multiplicity: usize,
}

impl SignSplit {
    /// Number of positive terms.
    pub fn p(&self) -> usize {
        self.positive.len()
    }

    /// Number of negative terms.
    pub fn q(&self) -> usize {
        self.negative.len()
    }

    /// Highest degree carrying a negative coefficient.
    pub fn top_negative_degree(&self) -> Option<usize> {
        self.negative.keys().next_back().copied()
    }

    /// Sum of the absolute values of the negative coefficients.
    pub fn negative_sum(&self) -> f64 {
        self.negative.values().sum()
    }

    /// Degrees `l` with a positive coefficient above every negative degree,
    /// ascending. Empty when there are no negative coefficients.
    pub fn admissible_degrees(&self) -> Vec<usize> {
        match self.top_negative_degree() {
            Some(k) => self.positive.range(k + 1..).map(|(&l, _)| l).collect(),
            None => Vec::new(),
        }
    }
}

pub fn sign_split(p: &Polynomial) -> SignSplit {
    let mut positive = BTreeMap::new();
    let mut negative = BTreeMap::new();
    for (j, &c) in p.coeffs().iter().enumerate() {
        if c > 0.0 {
            positive.insert(j, c);
        } else if c < 0.0 {
            negative.insert(j, -c);
        }
    }
    let zero_root_multiplicity = p.coeffs().iter().take_while(|&&c| c == 0.0).count();
    SignSplit {
        positive,
        negative,
        zero_root_multiplicity,
    }
}
