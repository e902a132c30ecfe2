use std::fmt;

use crate::algebra::Element;
use crate::lincomb::{write_terms, LinComb, Rational};
use crate::trees::Forest;

/// A combination of `arity`-fold tensors `f₁ ⊗ … ⊗ f_k` of basis factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<F: Ord> {
    arity: usize,
    terms: LinComb<Vec<F>>,
}

/// Tensors of forests, the target of the coproduct and its iterates.
pub type TensorElement = Tensor<Forest>;

impl<F: Ord + Clone> Tensor<F> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        Tensor {
            arity,
            terms: LinComb::zero(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &LinComb<Vec<F>> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<F>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[F]) -> Rational {
        self.terms.coefficient(&key.to_vec())
    }

    pub fn add_term(&mut self, key: Vec<F>, c: Rational) {
        assert_eq!(key.len(), self.arity, "tensor key of wrong arity");
        self.terms.add_term(key, c);
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        assert_eq!(self.arity, other.arity, "adding tensors of different arity");
        self.terms.add_scaled(c, &other.terms);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Tensor {
            arity: self.arity,
            terms: self.terms.scale(c),
        }
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<F>, Rational)>) -> Self {
        let mut out = Self::zero(arity);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `x ⊗ y` for two combinations of basis factors.
    pub fn outer(x: &LinComb<F>, y: &LinComb<F>) -> Self {
        let mut out = Self::zero(2);
        for (a, c) in x {
            for (b, d) in y {
                out.add_term(vec![a.clone(), b.clone()], c * d);
            }
        }
        out
    }
}

impl<F: Ord + Clone> std::ops::Sub for &Tensor<F> {
    type Output = Tensor<F>;

    fn sub(self, rhs: &Tensor<F>) -> Tensor<F> {
        assert_eq!(
            self.arity, rhs.arity,
            "subtracting tensors of different arity"
        );
        Tensor {
            arity: self.arity,
            terms: &self.terms - &rhs.terms,
        }
    }
}

impl<F: Ord + Clone> std::ops::Add for &Tensor<F> {
    type Output = Tensor<F>;

    fn add(self, rhs: &Tensor<F>) -> Tensor<F> {
        assert_eq!(self.arity, rhs.arity, "adding tensors of different arity");
        Tensor {
            arity: self.arity,
            terms: &self.terms + &rhs.terms,
        }
    }
}

impl TensorElement {
    /// Embeds an element as a tensor of arity 1.
    pub fn from_element(x: &Element) -> Self {
        Tensor {
            arity: 1,
            terms: x
                .iter()
                .map(|(f, c)| (vec![f.clone()], c.clone()))
                .collect(),
        }
    }

    /// Each key's slot degrees.
    pub fn slot_degrees(key: &[Forest]) -> Vec<usize> {
        key.iter().map(Forest::degree).collect()
    }
}

impl<F: Ord + Clone + fmt::Display> fmt::Display for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), |f, key| {
            for (i, factor) in key.iter().enumerate() {
                if i > 0 {
                    f.write_str(" (x) ")?;
                }
                write!(f, "{factor}")?;
            }
            Ok(())
        })
    }
}

impl<F: Ord + Clone + fmt::Display> fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{}]({self})", self.arity)
    }
}
