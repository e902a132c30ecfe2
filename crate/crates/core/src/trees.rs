//! Planar rooted trees (every internal vertex has at least two children)
//! and forests of them, which index the basis of the free Hoch-algebra.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{HochError, Result};

/// Index of a generator in the declared alphabet. Printed as `|` for 0 and `|k` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Generator(pub u32);

/// Number of generator symbols available to leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(HochError::InvalidArgument(
                "alphabet size must be positive".into(),
            ));
        }
        Ok(Alphabet(size))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn contains(self, g: Generator) -> bool {
        (g.0 as usize) < self.0
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        (0..self.0 as u32).map(Generator)
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Leaf(Generator),
    Node {
        children: Arc<[PlanarTree]>,
        leaves: usize,
    },
}

/// A planar rooted tree whose leaves carry generator labels.
///
/// Trees are immutable; children are shared, so cloning is cheap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarTree(Repr);

impl PlanarTree {
    /// The leaf labelled by generator 0, written `|`.
    pub fn leaf() -> Self {
        PlanarTree(Repr::Leaf(Generator(0)))
    }

    pub fn labelled_leaf(g: Generator) -> Self {
        PlanarTree(Repr::Leaf(g))
    }

    /// Joins the roots of `children` under a new root: `t₁ ∨ … ∨ t_p`.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(HochError::InvalidArity(format!(
                "grafting needs at least 2 children, got {}",
                children.len()
            )));
        }
        let leaves = children.iter().map(PlanarTree::leaf_count).sum();
        Ok(PlanarTree(Repr::Node {
            children: children.into(),
            leaves,
        }))
    }

    /// The unique list of root children, inverse to [`PlanarTree::graft`].
    pub fn decompose(&self) -> Result<Vec<PlanarTree>> {
        match &self.0 {
            Repr::Leaf(_) => Err(HochError::NotDecomposable),
            Repr::Node { children, .. } => Ok(children.to_vec()),
        }
    }

    pub fn children(&self) -> &[PlanarTree] {
        match &self.0 {
            Repr::Leaf(_) => &[],
            Repr::Node { children, .. } => children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.0, Repr::Leaf(_))
    }

    pub fn label(&self) -> Option<Generator> {
        match self.0 {
            Repr::Leaf(g) => Some(g),
            Repr::Node { .. } => None,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match &self.0 {
            Repr::Leaf(_) => 1,
            Repr::Node { leaves, .. } => *leaves,
        }
    }

    /// Highest generator index used by any leaf.
    pub fn max_label(&self) -> Generator {
        match &self.0 {
            Repr::Leaf(g) => *g,
            Repr::Node { children, .. } => children
                .iter()
                .map(PlanarTree::max_label)
                .max()
                .unwrap_or_default(),
        }
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaf_count()
            .cmp(&other.leaf_count())
            .then_with(|| match (&self.0, &other.0) {
                (Repr::Leaf(a), Repr::Leaf(b)) => a.cmp(b),
                (Repr::Leaf(_), Repr::Node { .. }) => Ordering::Less,
                (Repr::Node { .. }, Repr::Leaf(_)) => Ordering::Greater,
                (Repr::Node { children: a, .. }, Repr::Node { children: b, .. }) => {
                    a.iter().cmp(b.iter())
                }
            })
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Leaf(Generator(0)) => f.write_str("|"),
            Repr::Leaf(Generator(k)) => write!(f, "|{k}"),
            Repr::Node { children, .. } => {
                f.write_str("[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// A nonempty word of planar trees. Its degree is the total number of leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest(Vec<PlanarTree>);

impl Forest {
    pub fn new(trees: Vec<PlanarTree>) -> Result<Self> {
        if trees.is_empty() {
            return Err(HochError::InvalidArgument(
                "a forest has at least one tree".into(),
            ));
        }
        Ok(Forest(trees))
    }

    /// Callers guarantee `trees` is nonempty.
    pub(crate) fn from_trees_unchecked(trees: Vec<PlanarTree>) -> Self {
        debug_assert!(!trees.is_empty());
        Forest(trees)
    }

    pub fn leaf() -> Self {
        Forest(vec![PlanarTree::leaf()])
    }

    /// The word of `n` generator-0 leaves.
    pub fn leaves(n: usize) -> Result<Self> {
        Forest::new(vec![PlanarTree::leaf(); n])
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    pub fn into_trees(self) -> Vec<PlanarTree> {
        self.0
    }

    pub fn tree_count(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(PlanarTree::leaf_count).sum()
    }

    /// `Some(t)` when the forest is the single tree `t`.
    pub fn as_tree(&self) -> Option<&PlanarTree> {
        match self.0.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Concatenation of words.
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.0.len() + other.0.len());
        trees.extend_from_slice(&self.0);
        trees.extend_from_slice(&other.0);
        Forest(trees)
    }

    /// The subword `trees[range]`, which must be nonempty.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Forest {
        Forest::from_trees_unchecked(self.0[range].to_vec())
    }

    pub fn max_label(&self) -> Generator {
        self.0
            .iter()
            .map(PlanarTree::max_label)
            .max()
            .unwrap_or_default()
    }
}

impl From<PlanarTree> for Forest {
    fn from(t: PlanarTree) -> Self {
        Forest(vec![t])
    }
}

/// Ascending degree, then descending number of trees, then tree by tree.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.len().cmp(&self.0.len()))
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Forest {
    type Err = HochError;

    fn from_str(s: &str) -> Result<Self> {
        parse_forest(s, Alphabet::default())
    }
}

impl FromStr for PlanarTree {
    type Err = HochError;

    fn from_str(s: &str) -> Result<Self> {
        let forest = parse_forest(s, Alphabet::default())?;
        match forest.0.len() {
            1 => Ok(forest.0.into_iter().next().expect("one tree")),
            _ => Err(HochError::parse(0, "expected a single tree")),
        }
    }
}

/// Parses a forest, rejecting leaves whose label is outside `alphabet`.
pub fn parse_forest(text: &str, alphabet: Alphabet) -> Result<Forest> {
    parse_forest_at(text, 0, alphabet)
}

/// Like [`parse_forest`], reporting positions relative to `offset`.
pub(crate) fn parse_forest_at(text: &str, offset: usize, alphabet: Alphabet) -> Result<Forest> {
    let mut p = TreeParser {
        bytes: text.as_bytes(),
        pos: 0,
        offset,
        alphabet,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("expected a forest"));
    }
    let mut trees = Vec::new();
    loop {
        trees.push(p.tree()?);
        let before = p.pos;
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if p.pos == before {
            return Err(p.error("trees of a forest must be separated by spaces"));
        }
    }
    Ok(Forest(trees))
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
    alphabet: Alphabet,
}

impl TreeParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> HochError {
        HochError::parse(self.offset + self.pos, message)
    }

    fn tree(&mut self) -> Result<PlanarTree> {
        match self.peek() {
            Some(b'|') => {
                let start = self.pos;
                self.pos += 1;
                let digits_start = self.pos;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                let label = if self.pos == digits_start {
                    0
                } else {
                    std::str::from_utf8(&self.bytes[digits_start..self.pos])
                        .expect("ascii digits")
                        .parse::<u32>()
                        .map_err(|_| {
                            HochError::parse(self.offset + digits_start, "label too large")
                        })?
                };
                let g = Generator(label);
                if !self.alphabet.contains(g) {
                    return Err(HochError::parse(
                        self.offset + start,
                        format!(
                            "unknown generator |{label} (alphabet has {} symbols)",
                            self.alphabet.size()
                        ),
                    ));
                }
                Ok(PlanarTree::labelled_leaf(g))
            }
            Some(b'[') => {
                let open = self.pos;
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    children.push(self.tree()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected ',' or ']'")),
                    }
                }
                if children.len() < 2 {
                    return Err(HochError::parse(
                        self.offset + open,
                        "internal node needs at least 2 children",
                    ));
                }
                PlanarTree::graft(children)
            }
            Some(_) => Err(self.error("expected '|' or '['")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// All planar trees with `n` leaves over `alphabet`, sorted and without duplicates.
pub fn enumerate_trees(n: usize, alphabet: Alphabet) -> Result<Vec<PlanarTree>> {
    if n == 0 {
        return Err(HochError::InvalidArgument("n must be at least 1".into()));
    }
    let mut table = TreeTable::new(alphabet);
    let mut out = table.trees(n).to_vec();
    out.sort();
    Ok(out)
}

/// All forests with `n` leaves in total over `alphabet`, sorted and without duplicates.
pub fn enumerate_forests(n: usize, alphabet: Alphabet) -> Result<Vec<Forest>> {
    if n == 0 {
        return Err(HochError::InvalidArgument("n must be at least 1".into()));
    }
    let mut table = TreeTable::new(alphabet);
    let mut out = Vec::new();
    for parts in compositions(n, 1) {
        let factors: Vec<Vec<PlanarTree>> =
            parts.iter().map(|&k| table.trees(k).to_vec()).collect();
        for word in cartesian(&factors) {
            out.push(Forest(word));
        }
    }
    out.sort();
    Ok(out)
}

struct TreeTable {
    alphabet: Alphabet,
    by_leaves: HashMap<usize, Vec<PlanarTree>>,
}

impl TreeTable {
    fn new(alphabet: Alphabet) -> Self {
        TreeTable {
            alphabet,
            by_leaves: HashMap::new(),
        }
    }

    fn trees(&mut self, n: usize) -> &[PlanarTree] {
        if !self.by_leaves.contains_key(&n) {
            let trees = if n == 1 {
                self.alphabet
                    .generators()
                    .map(PlanarTree::labelled_leaf)
                    .collect()
            } else {
                let mut acc = Vec::new();
                for parts in compositions(n, 2) {
                    let factors: Vec<Vec<PlanarTree>> =
                        parts.iter().map(|&k| self.trees(k).to_vec()).collect();
                    for children in cartesian(&factors) {
                        acc.push(PlanarTree::graft(children).expect("at least two parts"));
                    }
                }
                acc
            };
            self.by_leaves.insert(n, trees);
        }
        &self.by_leaves[&n]
    }
}

/// Compositions of `n` into at least `min_parts` positive parts.
pub(crate) fn compositions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, current: &mut Vec<usize>, min_parts: usize, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if current.len() >= min_parts {
                out.push(current.clone());
            }
            return;
        }
        for first in 1..=rest {
            current.push(first);
            go(rest - first, current, min_parts, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), min_parts, &mut out);
    out
}

fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::with_capacity(factors.len())];
    for choices in factors {
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for prefix in &acc {
            for c in choices {
                let mut word = prefix.clone();
                word.push(c.clone());
                next.push(word);
            }
        }
        acc = next;
    }
    acc
}
