//! Sparse formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HochError, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A finite combination `Σ cᵢ·bᵢ` stored as a map from basis element to its
/// nonzero coefficient. Iteration follows the basis order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(c: Rational, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn support(&self) -> btree_map::Keys<'_, B, Rational> {
        self.terms.keys()
    }

    pub fn coefficient(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (b, d) in &other.terms {
            self.add_term(b.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, d)| (b.clone(), c * d)).collect(),
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord + Clone> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -self.clone()
    }
}

/// Writes `terms` as `c*b + c*b - b ...`, or `0` when empty.
pub(crate) fn write_terms<'a, B: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a B, &'a Rational)>,
    mut write_basis: impl FnMut(&mut fmt::Formatter<'_>, &B) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (b, c) in terms {
        let magnitude = c.abs();
        match (first, c.is_negative()) {
            (true, false) => {}
            (true, true) => f.write_str("-")?,
            (false, false) => f.write_str(" + ")?,
            (false, true) => f.write_str(" - ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        write_basis(f, b)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), |f, b| write!(f, "{b}"))
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

/// Parses `term (('+'|'-') term)*` with `term := [rational '*'] body`.
/// `parse_body` receives the trimmed body text and its absolute offset.
pub(crate) fn parse_terms<B: Ord + Clone>(
    text: &str,
    mut parse_body: impl FnMut(&str, usize) -> Result<B>,
) -> Result<LinComb<B>> {
    if text.trim() == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    let bytes = text.as_bytes();
    let mut segment_start = 0;
    let mut negative = false;
    let mut segments = Vec::new();
    for (i, &ch) in bytes.iter().enumerate() {
        if ch == b'+' || ch == b'-' {
            segments.push((segment_start, i, negative));
            segment_start = i + 1;
            negative = ch == b'-';
        }
    }
    segments.push((segment_start, bytes.len(), negative));

    for (idx, &(start, end, negative)) in segments.iter().enumerate() {
        let raw = &text[start..end];
        if raw.trim().is_empty() {
            // a leading sign leaves an empty first segment
            if idx == 0 && segments.len() > 1 {
                continue;
            }
            return Err(HochError::parse(start, "expected a term"));
        }
        let lead = raw.len() - raw.trim_start().len();
        let body_text = raw.trim();
        let body_offset = start + lead;
        let (coefficient, body, offset) = match body_text.find('*') {
            Some(star) => {
                let coeff = parse_rational(body_text[..star].trim(), body_offset)?;
                let rest = &body_text[star + 1..];
                let skip = rest.len() - rest.trim_start().len();
                (coeff, rest.trim(), body_offset + star + 1 + skip)
            }
            None => (Rational::one(), body_text, body_offset),
        };
        if body.is_empty() {
            return Err(HochError::parse(
                offset,
                "expected a basis element after '*'",
            ));
        }
        let b = parse_body(body, offset)?;
        out.add_term(b, if negative { -coefficient } else { coefficient });
    }
    Ok(out)
}

pub(crate) fn parse_rational(text: &str, offset: usize) -> Result<Rational> {
    let bad = || HochError::parse(offset, format!("invalid rational coefficient {text:?}"));
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    if !digits(num) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some(d) => {
            if !digits(d) {
                return Err(bad());
            }
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(HochError::parse(offset, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}
