//! The unital extension `K·1 ⊕ Hoch(V)`, where `1` is a two-sided unit for
//! both products, and its coproduct `δ(x) = 1 ⊗ x + x ⊗ 1 + Δ(x)`.

use std::fmt;

use num_traits::{One, Zero};

use super::{Coproduct, Op, Tensor};
use crate::algebra::Element;
use crate::error::Result;
use crate::lincomb::{self, rational, LinComb, Rational};
use crate::trees::{parse_forest_at, Alphabet, Forest};

/// A tensor factor in unital mode: the unit or a forest. The unit sorts first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitalFactor {
    One,
    Forest(Forest),
}

impl fmt::Display for UnitalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitalFactor::One => f.write_str("1"),
            UnitalFactor::Forest(x) => write!(f, "{x}"),
        }
    }
}

pub type UnitalTensor = Tensor<UnitalFactor>;

/// `unit·1 + part`, with `part` in the augmentation ideal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnitalElement {
    pub unit: Rational,
    pub part: Element,
}

impl UnitalElement {
    pub fn one() -> Self {
        UnitalElement {
            unit: Rational::one(),
            part: Element::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn forest(f: Forest) -> Self {
        UnitalElement::from(Element::forest(f))
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.part.is_zero()
    }

    fn as_lincomb(&self) -> LinComb<UnitalFactor> {
        let mut out = LinComb::term(self.unit.clone(), UnitalFactor::One);
        for (f, c) in &self.part {
            out.add_term(UnitalFactor::Forest(f.clone()), c.clone());
        }
        out
    }

    fn from_lincomb(x: LinComb<UnitalFactor>) -> Self {
        let mut out = UnitalElement::zero();
        for (b, c) in x {
            match b {
                UnitalFactor::One => out.unit = c,
                UnitalFactor::Forest(f) => out.part.add_term(f, c),
            }
        }
        out
    }

    /// Element grammar where a bare `1` body denotes the unit, e.g. `2*1 - | |`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let terms = lincomb::parse_terms(text, |body, offset| {
            if body == "1" {
                Ok(UnitalFactor::One)
            } else {
                parse_forest_at(body, offset, alphabet).map(UnitalFactor::Forest)
            }
        })?;
        Ok(Self::from_lincomb(terms))
    }
}

impl From<Element> for UnitalElement {
    fn from(part: Element) -> Self {
        UnitalElement {
            unit: Rational::zero(),
            part,
        }
    }
}

impl std::ops::Add for &UnitalElement {
    type Output = UnitalElement;

    fn add(self, rhs: &UnitalElement) -> UnitalElement {
        UnitalElement {
            unit: &self.unit + &rhs.unit,
            part: &self.part + &rhs.part,
        }
    }
}

impl fmt::Display for UnitalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_lincomb())
    }
}

impl std::str::FromStr for UnitalElement {
    type Err = crate::error::HochError;

    fn from_str(s: &str) -> Result<Self> {
        UnitalElement::parse(s, Alphabet::default())
    }
}

/// `x op y` with `1` acting as a two-sided unit for both products.
pub fn unital_op(x: &UnitalElement, y: &UnitalElement, op: Op) -> UnitalElement {
    let mut part = op.apply(&x.part, &y.part);
    part.add_scaled(&x.unit, &y.part);
    part.add_scaled(&y.unit, &x.part);
    UnitalElement {
        unit: &x.unit * &y.unit,
        part,
    }
}

fn factor_op(a: &UnitalFactor, y: &UnitalElement, op: Op, factor_left: bool) -> UnitalElement {
    let a = match a {
        UnitalFactor::One => UnitalElement::one(),
        UnitalFactor::Forest(f) => UnitalElement::forest(f.clone()),
    };
    if factor_left {
        unital_op(&a, y, op)
    } else {
        unital_op(y, &a, op)
    }
}

/// `x ⊗ y` over the unital basis.
fn unital_outer(x: &UnitalElement, y: &UnitalElement) -> UnitalTensor {
    UnitalTensor::outer(&x.as_lincomb(), &y.as_lincomb())
}

impl Coproduct {
    /// `δ(1) = 1 ⊗ 1` and `δ(x) = 1 ⊗ x + x ⊗ 1 + Δ(x)` on the augmentation ideal.
    pub fn unital(&self, x: &UnitalElement) -> UnitalTensor {
        let mut out = UnitalTensor::zero(2);
        out.add_term(vec![UnitalFactor::One, UnitalFactor::One], x.unit.clone());
        for (f, c) in &x.part {
            let forest = UnitalFactor::Forest(f.clone());
            out.add_term(vec![UnitalFactor::One, forest.clone()], c.clone());
            out.add_term(vec![forest, UnitalFactor::One], c.clone());
        }
        for (key, c) in self.apply(&x.part).iter() {
            out.add_term(
                key.iter().cloned().map(UnitalFactor::Forest).collect(),
                c.clone(),
            );
        }
        out
    }

    /// `δ(x op y)` minus `x₍₁₎ ⊗ (x₍₂₎ op y) + (x op y₍₁₎) ⊗ y₍₂₎ − x ⊗ y`,
    /// with Sweedler components taken from `δ`.
    pub fn unital_relation_defect(
        &self,
        x: &UnitalElement,
        y: &UnitalElement,
        op: Op,
    ) -> UnitalTensor {
        let lhs = self.unital(&unital_op(x, y, op));
        let mut rhs = UnitalTensor::zero(2);
        for (key, c) in self.unital(x).iter() {
            let right = factor_op(&key[1], y, op, true);
            for (g, d) in &right.as_lincomb() {
                rhs.add_term(vec![key[0].clone(), g.clone()], c * d);
            }
        }
        for (key, c) in self.unital(y).iter() {
            let left = factor_op(&key[0], x, op, false);
            for (g, d) in &left.as_lincomb() {
                rhs.add_term(vec![g.clone(), key[1].clone()], c * d);
            }
        }
        rhs.add_scaled(&rational(-1), &unital_outer(x, y));
        &lhs - &rhs
    }

    pub fn check_unital_relation(&self, x: &UnitalElement, y: &UnitalElement, op: Op) -> bool {
        self.unital_relation_defect(x, y, op).is_zero()
    }

    /// `δ(x) − 1 ⊗ x − x ⊗ 1` for `x` in the augmentation ideal, as a forest tensor.
    /// Returns `None` if a unit factor survives.
    pub fn reduced_unital(&self, x: &Element) -> Option<super::TensorElement> {
        let mut t = self.unital(&UnitalElement::from(x.clone()));
        for (f, c) in x {
            let forest = UnitalFactor::Forest(f.clone());
            t.add_term(vec![UnitalFactor::One, forest.clone()], -c.clone());
            t.add_term(vec![forest, UnitalFactor::One], -c.clone());
        }
        let mut out = super::TensorElement::zero(2);
        for (key, c) in t.iter() {
            let forests: Option<Vec<Forest>> = key
                .iter()
                .map(|k| match k {
                    UnitalFactor::One => None,
                    UnitalFactor::Forest(f) => Some(f.clone()),
                })
                .collect();
            out.add_term(forests?, c.clone());
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> UnitalElement {
        s.parse().unwrap()
    }

    #[test]
    fn unit_laws() {
        assert_eq!(
            unital_op(&UnitalElement::one(), &u("[|,|]"), Op::Succ),
            u("[|,|]")
        );
        assert_eq!(
            unital_op(&u("[|,|]"), &UnitalElement::one(), Op::Succ),
            u("[|,|]")
        );
        assert_eq!(
            unital_op(&UnitalElement::one(), &UnitalElement::one(), Op::Star),
            u("1")
        );
        assert_eq!(unital_op(&u("1 + |"), &u("|"), Op::Star), u("| + | |"));
    }

    #[test]
    fn unital_coproduct_examples() {
        let delta = Coproduct::new();
        assert_eq!(delta.unital(&u("1")).to_string(), "1 (x) 1");
        assert_eq!(delta.unital(&u("|")).to_string(), "1 (x) | + | (x) 1");
        assert_eq!(
            delta.unital(&u("| |")).to_string(),
            "1 (x) | | + | (x) | + | | (x) 1"
        );
    }

    #[test]
    fn unital_relations_on_small_pairs() {
        let delta = Coproduct::new();
        for (x, y) in [
            ("1", "1"),
            ("1", "|"),
            ("|", "1"),
            ("|", "|"),
            ("| |", "[|,|]"),
        ] {
            for op in [Op::Star, Op::Succ] {
                assert!(
                    delta.check_unital_relation(&u(x), &u(y), op),
                    "{x} {op:?} {y}"
                );
            }
        }
    }

    #[test]
    fn parse_unit_terms() {
        let x = u("2*1 - | |");
        assert_eq!(x.unit, rational(2));
        assert_eq!(x.to_string(), "2*1 - | |");
    }
}
