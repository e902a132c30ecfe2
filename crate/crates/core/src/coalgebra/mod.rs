//! The infinitesimal coproduct on the free Hoch-algebra.
//!
//! `Δ` is fixed by `Δ(leaf) = 0` and the two compatibility rules
//!
//! ```text
//! Δ(x * y) = x₍₁₎ ⊗ (x₍₂₎ * y) + (x * y₍₁₎) ⊗ y₍₂₎ + x ⊗ y
//! Δ(x ≻ y) = x₍₁₎ ⊗ (x₍₂₎ ≻ y) + (x ≻ y₍₁₎) ⊗ y₍₂₎ + x ⊗ y
//! ```
//!
//! A word `t₁…t_k` is split as `t₁ * (t₂…t_k)`; a corolla-rooted tree
//! `[t₁, t₂]` is `t₁ ≻ t₂`; a wider tree `[t₁,…,t_m]` is rewritten as
//! `(t₁ * (t₂…t_{m−1})) ≻ t_m − t₁ * ((t₂…t_{m−1}) ≻ t_m)`. Every recursive
//! call lands on a forest with strictly fewer leaves.

mod tensor;
pub mod unital;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::algebra::{star, succ, Element};
use crate::error::{HochError, Result};
use crate::linalg::RatMatrix;
use crate::lincomb::{rational, Rational};
use crate::trees::{enumerate_forests, Alphabet, Forest};

pub use tensor::{Tensor, TensorElement};
pub use unital::{UnitalElement, UnitalFactor, UnitalTensor};

/// One of the two Hoch-algebra products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Star,
    Succ,
}

impl Op {
    pub fn apply(self, x: &Element, y: &Element) -> Element {
        match self {
            Op::Star => star(x, y),
            Op::Succ => succ(x, y),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Star => "*",
            Op::Succ => ">",
        }
    }
}

/// Sign of the `x ⊗ y` term in each compatibility rule used by the recursion.
///
/// The coproduct of the free algebra uses `+1` for both; other values exist
/// only to build deliberately broken engines for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossTerm {
    pub star: i8,
    pub succ: i8,
}

impl CrossTerm {
    pub const STANDARD: CrossTerm = CrossTerm { star: 1, succ: 1 };
    pub const FLIPPED: CrossTerm = CrossTerm { star: -1, succ: -1 };

    fn sign(self, op: Op) -> i64 {
        match op {
            Op::Star => self.star.into(),
            Op::Succ => self.succ.into(),
        }
    }
}

impl Default for CrossTerm {
    fn default() -> Self {
        CrossTerm::STANDARD
    }
}

/// Computes `Δ` with a shared per-forest cache. Safe to use from many threads.
pub struct Coproduct {
    cross: CrossTerm,
    memoize: bool,
    cache: RwLock<HashMap<Forest, Arc<TensorElement>>>,
}

impl Default for Coproduct {
    fn default() -> Self {
        Coproduct::new()
    }
}

impl Coproduct {
    pub fn new() -> Self {
        Coproduct::with_cross_term(CrossTerm::STANDARD)
    }

    pub fn with_cross_term(cross: CrossTerm) -> Self {
        Coproduct {
            cross,
            memoize: true,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// An engine that recomputes every forest from scratch.
    pub fn without_memo() -> Self {
        Coproduct {
            memoize: false,
            ..Coproduct::new()
        }
    }

    pub fn cross_term(&self) -> CrossTerm {
        self.cross
    }

    /// `Δ(f)` for a basis forest.
    pub fn basis(&self, f: &Forest) -> Arc<TensorElement> {
        if self.memoize {
            if let Some(hit) = self.cache.read().expect("cache lock").get(f) {
                return Arc::clone(hit);
            }
        }
        let value = Arc::new(self.compute(f));
        if self.memoize {
            self.cache
                .write()
                .expect("cache lock")
                .entry(f.clone())
                .or_insert_with(|| Arc::clone(&value));
        }
        value
    }

    fn basis_below(&self, f: &Forest, bound: usize) -> Arc<TensorElement> {
        debug_assert!(
            f.degree() < bound,
            "coproduct recursion must decrease the leaf count"
        );
        self.basis(f)
    }

    fn element_below(&self, x: &Element, bound: usize) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (f, c) in x {
            out.add_scaled(c, &self.basis_below(f, bound));
        }
        out
    }

    fn compute(&self, f: &Forest) -> TensorElement {
        let bound = f.degree();
        let trees = f.trees();
        if trees.len() >= 2 {
            let x = Element::forest(f.slice(0..1));
            let y = Element::forest(f.slice(1..trees.len()));
            let dx = self.element_below(&x, bound);
            let dy = self.element_below(&y, bound);
            return self.rule(Op::Star, &x, &dx, &y, &dy);
        }
        let tree = &trees[0];
        if tree.is_leaf() {
            return TensorElement::zero(2);
        }
        let children = tree.children();
        let m = children.len();
        let first = Element::tree(children[0].clone());
        let last = Element::tree(children[m - 1].clone());
        let d_first = self.element_below(&first, bound);
        let d_last = self.element_below(&last, bound);
        if m == 2 {
            return self.rule(Op::Succ, &first, &d_first, &last, &d_last);
        }
        let middle = Element::forest(Forest::from_trees_unchecked(children[1..m - 1].to_vec()));
        let d_middle = self.element_below(&middle, bound);

        // (t₁ * middle) ≻ t_m
        let head = Element::forest(Forest::from_trees_unchecked(children[..m - 1].to_vec()));
        let d_head = self.element_below(&head, bound);
        let mut out = self.rule(Op::Succ, &head, &d_head, &last, &d_last);

        // t₁ * (middle ≻ t_m)
        let inner = succ(&middle, &last);
        let d_inner = self.rule(Op::Succ, &middle, &d_middle, &last, &d_last);
        let tail = self.rule(Op::Star, &first, &d_first, &inner, &d_inner);
        out.add_scaled(&rational(-1), &tail);
        out
    }

    fn rule(
        &self,
        op: Op,
        x: &Element,
        dx: &TensorElement,
        y: &Element,
        dy: &TensorElement,
    ) -> TensorElement {
        compatibility_rhs(op, x, dx, y, dy, &rational(self.cross.sign(op)))
    }

    /// Linear extension of [`Coproduct::basis`].
    pub fn apply(&self, x: &Element) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (f, c) in x {
            out.add_scaled(c, &self.basis(f));
        }
        out
    }

    /// Applies `Δ` to slot `slot` of every key and keeps the other slots.
    pub fn apply_to_slot(&self, t: &TensorElement, slot: usize) -> TensorElement {
        assert!(slot < t.arity(), "slot out of range");
        let mut out = TensorElement::zero(t.arity() + 1);
        for (key, c) in t.iter() {
            let d = self.basis(&key[slot]);
            for (pair, d_c) in d.iter() {
                let mut new_key = Vec::with_capacity(key.len() + 1);
                new_key.extend_from_slice(&key[..slot]);
                new_key.extend_from_slice(pair);
                new_key.extend_from_slice(&key[slot + 1..]);
                out.add_term(new_key, c * d_c);
            }
        }
        out
    }

    /// `Δ⁽ʳ⁾ = (Δ ⊗ id^{r−1}) Δ⁽ʳ⁻¹⁾`, of arity `r + 1`.
    pub fn iterated(&self, x: &Element, r: usize) -> Result<TensorElement> {
        if r == 0 {
            return Err(HochError::InvalidArgument(
                "iterated coproduct order must be at least 1".into(),
            ));
        }
        let mut current = self.apply(x);
        for _ in 1..r {
            if current.is_zero() {
                return Ok(TensorElement::zero(r + 1));
            }
            current = self.apply_to_slot(&current, 0);
        }
        Ok(current)
    }

    pub fn is_primitive(&self, x: &Element) -> bool {
        self.apply(x).is_zero()
    }

    /// Least `r` with `Δ⁽ʳ⁾(x) = 0`, or `None` for the zero element.
    pub fn filtration_level(&self, x: &Element) -> Result<Option<usize>> {
        let Some(max_degree) = x.max_degree() else {
            return Ok(None);
        };
        let mut current = self.apply(x);
        let mut r = 1;
        while !current.is_zero() {
            if r > max_degree {
                return Err(HochError::Internal(format!(
                    "iterated coproduct of order {r} is nonzero on an element of degree {max_degree}"
                )));
            }
            current = self.apply_to_slot(&current, 0);
            r += 1;
        }
        Ok(Some(r))
    }

    /// Matrix of `Δ` on the degree-`n` forests: columns follow `forests`,
    /// rows follow the sorted tensor keys that occur.
    pub fn matrix(&self, forests: &[Forest]) -> RatMatrix {
        let images: Vec<Arc<TensorElement>> = forests.iter().map(|f| self.basis(f)).collect();
        let mut rows: BTreeMap<&Vec<Forest>, usize> = BTreeMap::new();
        for image in &images {
            for (key, _) in image.iter() {
                rows.entry(key).or_insert(0);
            }
        }
        for (i, slot) in rows.values_mut().enumerate() {
            *slot = i;
        }
        let mut m = RatMatrix::zeros(rows.len(), forests.len());
        for (col, image) in images.iter().enumerate() {
            for (key, c) in image.iter() {
                m.set(rows[key], col, c.clone());
            }
        }
        m
    }

    /// Basis of the degree-`n` primitives, in reduced row-echelon form over
    /// the canonical forest order.
    pub fn primitive_basis(&self, n: usize, alphabet: Alphabet) -> Result<Vec<Element>> {
        let forests = enumerate_forests(n, alphabet)?;
        let kernel = self.matrix(&forests).kernel_basis();
        Ok(kernel
            .into_iter()
            .map(|v| {
                forests
                    .iter()
                    .zip(v)
                    .map(|(f, c)| (f.clone(), c))
                    .collect::<Element>()
            })
            .collect())
    }

    /// `Δ(x op y)` minus the right-hand side of the compatibility rule for `op`,
    /// both sides computed independently with the standard `+ x ⊗ y` term.
    pub fn compatibility_defect(&self, x: &Element, y: &Element, op: Op) -> TensorElement {
        let lhs = self.apply(&op.apply(x, y));
        let rhs = compatibility_rhs(op, x, &self.apply(x), y, &self.apply(y), &Rational::one());
        &lhs - &rhs
    }

    pub fn check_compatibility(&self, x: &Element, y: &Element, op: Op) -> bool {
        self.compatibility_defect(x, y, op).is_zero()
    }
}

/// `x₍₁₎ ⊗ (x₍₂₎ op y) + (x op y₍₁₎) ⊗ y₍₂₎ + cross · x ⊗ y`.
pub(crate) fn compatibility_rhs(
    op: Op,
    x: &Element,
    dx: &TensorElement,
    y: &Element,
    dy: &TensorElement,
    cross: &Rational,
) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (key, c) in dx.iter() {
        let right = op.apply(&Element::forest(key[1].clone()), y);
        for (g, d) in &right {
            out.add_term(vec![key[0].clone(), g.clone()], c * d);
        }
    }
    for (key, c) in dy.iter() {
        let left = op.apply(x, &Element::forest(key[0].clone()));
        for (g, d) in &left {
            out.add_term(vec![g.clone(), key[1].clone()], c * d);
        }
    }
    out.add_scaled(cross, &TensorElement::outer(x, y));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn fo(s: &str) -> Forest {
        s.parse().unwrap()
    }

    fn tensor(pairs: &[(&str, &str, i64)]) -> TensorElement {
        TensorElement::from_terms(
            2,
            pairs
                .iter()
                .map(|(a, b, c)| (vec![fo(a), fo(b)], rational(*c))),
        )
    }

    #[test]
    fn basis_examples() {
        let delta = Coproduct::new();
        assert!(delta.basis(&fo("|")).is_zero());
        assert_eq!(*delta.basis(&fo("| |")), tensor(&[("|", "|", 1)]));
        assert_eq!(*delta.basis(&fo("[|,|]")), tensor(&[("|", "|", 1)]));
        assert!(delta.basis(&fo("[|,|,|]")).is_zero());
    }

    #[test]
    fn linear_examples() {
        let delta = Coproduct::new();
        assert!(delta.apply(&e("[|,|] - | |")).is_zero());
        assert!(delta.apply(&Element::zero()).is_zero());
        assert_eq!(delta.apply(&e("2*| |")), tensor(&[("|", "|", 2)]));
    }

    #[test]
    fn iterated_examples() {
        let delta = Coproduct::new();
        let three = delta.iterated(&e("| | |"), 2).unwrap();
        assert_eq!(three.arity(), 3);
        assert_eq!(
            three,
            TensorElement::from_terms(3, [(vec![fo("|"), fo("|"), fo("|")], rational(1))])
        );
        assert!(delta.iterated(&e("| |"), 2).unwrap().is_zero());
        assert!(matches!(
            delta.iterated(&e("|"), 0),
            Err(HochError::InvalidArgument(_))
        ));
    }

    #[test]
    fn primitivity_and_filtration() {
        let delta = Coproduct::new();
        assert!(delta.is_primitive(&e("|")));
        assert!(!delta.is_primitive(&e("[|,|]")));
        assert!(delta.is_primitive(&e("[|,|] - | |")));
        assert_eq!(delta.filtration_level(&e("|")).unwrap(), Some(1));
        assert_eq!(delta.filtration_level(&e("| |")).unwrap(), Some(2));
        assert_eq!(delta.filtration_level(&e("| | |")).unwrap(), Some(3));
        assert_eq!(delta.filtration_level(&Element::zero()).unwrap(), None);
    }

    #[test]
    fn small_primitive_bases() {
        let delta = Coproduct::new();
        let a = Alphabet::default();
        assert_eq!(delta.primitive_basis(1, a).unwrap(), vec![e("|")]);
        let two = delta.primitive_basis(2, a).unwrap();
        assert_eq!(two, vec![e("| | - [|,|]")]);
        assert_eq!(delta.primitive_basis(3, a).unwrap().len(), 3);
        assert_eq!(delta.primitive_basis(4, a).unwrap().len(), 11);
        assert!(delta.primitive_basis(0, a).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let delta = Coproduct::new();
        assert!(delta.check_compatibility(&e("|"), &e("|"), Op::Succ));
        assert!(delta.check_compatibility(&e("| |"), &e("[|,|]"), Op::Star));
        assert!(delta.check_compatibility(&e("[|,|] |"), &e("| [|,|]"), Op::Succ));
    }

    #[test]
    fn memo_does_not_change_results() {
        let cached = Coproduct::new();
        let fresh = Coproduct::without_memo();
        for f in enumerate_forests(5, Alphabet::default()).unwrap() {
            assert_eq!(*cached.basis(&f), *fresh.basis(&f), "{f}");
        }
    }

    #[test]
    fn flipped_cross_term_is_detected() {
        let broken = Coproduct::with_cross_term(CrossTerm::FLIPPED);
        assert!(!broken.check_compatibility(&e("|"), &e("|"), Op::Star));
    }
}
