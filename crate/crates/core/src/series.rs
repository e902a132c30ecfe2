//! Truncated power series without constant term, and the generating
//! functions counting trees and forests.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{HochError, Result};
use crate::lincomb::Rational;

/// `c₁x + c₂x² + … + c_N x^N`, truncated at order `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    /// Series from `c₁, …, c_N`.
    pub fn from_coefficients(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// `x/(1−x) = x + x² + …`
    pub fn geometric(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::one(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^n`, zero for `n = 0` or beyond the truncation.
    pub fn coefficient(&self, n: usize) -> Rational {
        if n == 0 {
            return Rational::zero();
        }
        self.coeffs
            .get(n - 1)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients as integers; fails if any denominator survives.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(HochError::Internal(format!(
                        "coefficient of x^{} is not an integer: {c}",
                        i + 1
                    )))
                }
            })
            .collect()
    }

    fn add(&self, other: &Self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Truncated product. Both factors have zero constant term, so the product starts at `x²`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            // x^{i+1} · x^{j+1} = x^{i+j+2}, stored at index i+j+1
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j + 1;
                if k >= n {
                    break;
                }
                out.coeffs[k] += a * b;
            }
        }
        out
    }

    /// `f(g(x))` by Horner's scheme; `g` must have zero constant term.
    pub fn compose(&self, g: &PowerSeries) -> Self {
        let n = self.order().min(g.order());
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().take(n).rev() {
            // acc ← (acc + c) · g
            let mut shifted = g.truncate(n).scale(c);
            if !acc.coeffs.iter().all(Zero::is_zero) {
                shifted = shifted.add(&acc.mul(g));
            }
            acc = shifted;
        }
        acc
    }

    /// Composition with a series that may have a constant term `g₀`.
    /// Only `g₀ = 0` is meaningful for truncated series.
    pub fn compose_with_constant(&self, g_constant: &Rational, g: &PowerSeries) -> Result<Self> {
        if !g_constant.is_zero() {
            return Err(HochError::InvalidComposition(format!(
                "inner series has constant term {g_constant}"
            )));
        }
        Ok(self.compose(g))
    }

    fn truncate(&self, n: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().take(n).cloned().collect(),
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{}", i + 1)?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Tree series `f = x + f²/(1−f)`: a tree is a leaf or a grafting of at least two trees.
pub fn tinf_series(order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(HochError::InvalidArgument(
            "series order must be at least 1".into(),
        ));
    }
    // x²/(1−x) = x² + x³ + …
    let mut at_least_two = PowerSeries::geometric(order);
    at_least_two.coeffs[0] = Rational::zero();
    let x = PowerSeries::x(order);
    let mut f = x.clone();
    // each pass fixes one more coefficient
    for _ in 1..order {
        f = x.add(&at_least_two.compose(&f));
    }
    Ok(f)
}

/// Forest series `x/(1−x) ∘ f_T`.
pub fn hoch_series(order: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::geometric(order).compose(&tinf_series(order)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchroederKind {
    /// Trees: 1, 1, 3, 11, 45, …
    Little,
    /// Forests: 1, 2, 6, 22, 90, …
    Large,
}

pub fn schroeder(kind: SchroederKind, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(HochError::InvalidArgument("n must be at least 1".into()));
    }
    let series = match kind {
        SchroederKind::Little => tinf_series(n)?,
        SchroederKind::Large => hoch_series(n)?,
    };
    let c = series.coefficient(n);
    if !c.is_integer() {
        return Err(HochError::Internal(format!(
            "Schroeder value {c} is not an integer"
        )));
    }
    Ok(c.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rational;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coefficients()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn identity_and_geometric() {
        let g = PowerSeries::from_coefficients(vec![rational(2), rational(-1), rational(5)]);
        assert_eq!(PowerSeries::x(3).compose(&g), g);
        assert_eq!(
            ints(&PowerSeries::geometric(5).compose(&PowerSeries::x(5))),
            vec![1; 5]
        );
    }

    #[test]
    fn tree_and_forest_series() {
        assert_eq!(ints(&tinf_series(5).unwrap()), vec![1, 1, 3, 11, 45]);
        assert_eq!(ints(&tinf_series(2).unwrap()), vec![1, 1]);
        assert_eq!(tinf_series(6).unwrap().coefficient(6), rational(197));
        assert_eq!(ints(&hoch_series(4).unwrap()), vec![1, 2, 6, 22]);
        assert_eq!(hoch_series(5).unwrap().coefficient(5), rational(90));
        assert_eq!(hoch_series(6).unwrap().coefficient(6), rational(394));
    }

    #[test]
    fn schroeder_values() {
        assert_eq!(
            schroeder(SchroederKind::Little, 4).unwrap(),
            BigInt::from(11)
        );
        assert_eq!(schroeder(SchroederKind::Large, 2).unwrap(), BigInt::from(2));
        assert_eq!(
            schroeder(SchroederKind::Large, 7).unwrap(),
            BigInt::from(1806)
        );
        assert!(schroeder(SchroederKind::Large, 0).is_err());
    }

    #[test]
    fn constant_term_rejected() {
        let g = PowerSeries::x(3);
        assert!(matches!(
            PowerSeries::geometric(3).compose_with_constant(&rational(1), &g),
            Err(HochError::InvalidComposition(_))
        ));
        assert!(PowerSeries::geometric(3)
            .compose_with_constant(&rational(0), &g)
            .is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(
            tinf_series(3).unwrap().to_string(),
            "1x + 1x^2 + 3x^3 + O(x^4)"
        );
    }
}
