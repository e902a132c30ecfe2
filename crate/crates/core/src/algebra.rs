//! The free Hoch-algebra: linear combinations of forests with the
//! concatenation product `*` and the grafting product `≻`.

use num_traits::One;

use crate::error::{HochError, Result};
use crate::lincomb::{self, LinComb, Rational};
use crate::trees::{parse_forest_at, Alphabet, Forest, PlanarTree};

/// An element of the free Hoch-algebra, keyed by canonical forest.
pub type Element = LinComb<Forest>;

impl Element {
    pub fn forest(f: Forest) -> Self {
        Element::basis(f)
    }

    pub fn tree(t: PlanarTree) -> Self {
        Element::basis(Forest::from(t))
    }

    /// The generator-0 leaf `|`.
    pub fn leaf() -> Self {
        Element::basis(Forest::leaf())
    }

    /// Parses the element grammar `term (('+'|'-') term)*` over the given alphabet.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        lincomb::parse_terms(text, |body, offset| parse_forest_at(body, offset, alphabet))
    }

    /// Degree-`n` homogeneous component.
    pub fn component(&self, n: usize) -> Self {
        self.filter(|f| f.degree() == n)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.support().map(Forest::degree).max()
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.support().all(|f| f.degree() == n)
    }

    pub fn star(&self, other: &Element) -> Element {
        star(self, other)
    }

    pub fn succ(&self, other: &Element) -> Element {
        succ(self, other)
    }
}

impl std::str::FromStr for Element {
    type Err = HochError;

    fn from_str(s: &str) -> Result<Self> {
        Element::parse(s, Alphabet::default())
    }
}

/// Bilinear extension of concatenation of words.
pub fn star(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (f, a) in x {
        for (g, b) in y {
            out.add_term(f.concat(g), a * b);
        }
    }
    out
}

/// `(t₁…t_p) ≻ (s₁…s_q)`: for each suffix `t_{p−i}…t_p` of the left word and
/// each nonempty prefix `s₁…s_k` of the right word, graft them together under
/// a new root and keep the remaining trees on either side.
pub fn succ_basis(f: &Forest, g: &Forest) -> Element {
    let (left, right) = (f.trees(), g.trees());
    let (p, q) = (left.len(), right.len());
    let mut out = Element::zero();
    for k in 1..=q {
        for i in 0..p {
            let split = p - (i + 1);
            let mut grafted = Vec::with_capacity(i + 1 + k);
            grafted.extend_from_slice(&left[split..]);
            grafted.extend_from_slice(&right[..k]);
            let mut word = Vec::with_capacity(split + 1 + q - k);
            word.extend_from_slice(&left[..split]);
            word.push(PlanarTree::graft(grafted).expect("at least two trees are grafted"));
            word.extend_from_slice(&right[k..]);
            out.add_term(Forest::from_trees_unchecked(word), Rational::one());
        }
    }
    out
}

pub fn succ(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (f, a) in x {
        for (g, b) in y {
            out.add_scaled(&(a * b), &succ_basis(f, g));
        }
    }
    out
}

/// The `n`-ary bracket `(x₁*…*x_{n−1}) ≻ xₙ − x₁*((x₂*…*x_{n−1}) ≻ xₙ)`.
///
/// For `n = 2` the empty middle product is read as the unit, giving
/// `x₁ ≻ x₂ − x₁ * x₂`.
pub fn nary_bracket(args: &[Element]) -> Result<Element> {
    let n = args.len();
    if n < 2 {
        return Err(HochError::InvalidArity(format!(
            "a bracket takes at least 2 arguments, got {n}"
        )));
    }
    let last = &args[n - 1];
    if n == 2 {
        return Ok(succ(&args[0], last) - star(&args[0], last));
    }
    let head = product(&args[..n - 1]);
    let middle = product(&args[1..n - 1]);
    Ok(succ(&head, last) - star(&args[0], &succ(&middle, last)))
}

/// `x₁ * … * x_k` for a nonempty slice.
pub fn product(factors: &[Element]) -> Element {
    let (first, rest) = factors.split_first().expect("nonempty product");
    rest.iter().fold(first.clone(), |acc, x| star(&acc, x))
}

/// The primitive element attached to a tree: leaves map to themselves and
/// `[t₁,…,tₙ]` maps to the bracket of the images of its children.
pub fn tree_to_primitive(t: &PlanarTree) -> Element {
    if t.is_leaf() {
        return Element::tree(t.clone());
    }
    let args: Vec<Element> = t.children().iter().map(tree_to_primitive).collect();
    nary_bracket(&args).expect("internal nodes have arity at least 2")
}

/// `P(t₁) * … * P(t_k)` for the forest `t₁…t_k`.
pub fn pbw_basis_element(f: &Forest) -> Element {
    let factors: Vec<Element> = f.trees().iter().map(tree_to_primitive).collect();
    product(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rational;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn fo(s: &str) -> Forest {
        s.parse().unwrap()
    }

    #[test]
    fn vector_space_laws() {
        let x = e("3/2*[|,|] - | |");
        assert_eq!(&x + &Element::zero(), x);
        assert!(x.scale(&rational(0)).is_zero());
        assert!((&x + &x.scale(&rational(-1))).is_zero());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&e("|"), &e("|")), e("| |"));
        assert_eq!(star(&e("| |"), &e("[|,|]")), e("| | [|,|]"));
    }

    #[test]
    fn succ_basis_worked_examples() {
        assert_eq!(
            succ_basis(&fo("| | |"), &fo("|")),
            e("| | [|,|] + | [|,|,|] + [|,|,|,|]")
        );
        assert_eq!(
            succ_basis(&fo("|"), &fo("| [|,|]")),
            e("[|,|] [|,|] + [|,|,[|,|]]")
        );
        assert_eq!(succ_basis(&fo("|"), &fo("|")), e("[|,|]"));
    }

    #[test]
    fn succ_is_bilinear() {
        assert!(succ(&Element::zero(), &e("|")).is_zero());
        assert_eq!(succ(&e("2*|"), &e("|")), e("2*[|,|]"));
        assert_eq!(succ(&e("|"), &e("| + [|,|]")), e("[|,|] + [|,[|,|]]"));
    }

    #[test]
    fn succ_is_not_associative() {
        let l = succ(&succ(&e("|"), &e("|")), &e("|"));
        let r = succ(&e("|"), &succ(&e("|"), &e("|")));
        assert_eq!(l, e("[[|,|],|]"));
        assert_eq!(r, e("[|,[|,|]]"));
        assert_ne!(l, r);
    }

    #[test]
    fn brackets() {
        let leaf = e("|");
        assert_eq!(
            nary_bracket(&[leaf.clone(), leaf.clone()]).unwrap(),
            e("[|,|] - | |")
        );
        assert_eq!(nary_bracket(&vec![leaf.clone(); 3]).unwrap(), e("[|,|,|]"));
        assert_eq!(
            nary_bracket(&vec![leaf.clone(); 4]).unwrap(),
            e("[|,|,|,|]")
        );
        assert!(matches!(
            nary_bracket(&[leaf]),
            Err(HochError::InvalidArity(_))
        ));
        assert!(nary_bracket(&[]).is_err());
    }

    #[test]
    fn primitive_images_of_trees() {
        assert_eq!(tree_to_primitive(&"|".parse().unwrap()), e("|"));
        assert_eq!(
            tree_to_primitive(&"[|,|]".parse().unwrap()),
            e("[|,|] - | |")
        );
        assert_eq!(
            tree_to_primitive(&"[|,[|,|]]".parse().unwrap()),
            e("[|,[|,|]] - [|,|] | - [|,|,|] - | [|,|] + | | |")
        );
    }

    #[test]
    fn pbw_examples() {
        assert_eq!(pbw_basis_element(&fo("| |")), e("| |"));
        assert_eq!(pbw_basis_element(&fo("[|,|]")), e("[|,|] - | |"));
        assert_eq!(pbw_basis_element(&fo("[|,|] |")), e("[|,|] | - | | |"));
    }

    #[test]
    fn element_text_roundtrip() {
        let x = e("3/2*[|,|] - | |");
        assert_eq!(x.to_string(), "-| | + 3/2*[|,|]");
        assert_eq!(e(&x.to_string()), x);
        assert!(e("0").is_zero());
        assert!("2*[|]".parse::<Element>().is_err());
    }

    #[test]
    fn element_parse_error_positions() {
        match "| + [|,x]".parse::<Element>() {
            Err(HochError::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
    }
}
