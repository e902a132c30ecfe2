//! Exhaustive and randomized checks of the structure identities, grouped
//! into named suites.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{
    nary_bracket, pbw_basis_element, product, star, succ, tree_to_primitive, Element,
};
use crate::coalgebra::unital::UnitalElement;
use crate::coalgebra::{Coproduct, CrossTerm, Op, TensorElement};
use crate::error::{HochError, Result};
use crate::linalg::RatMatrix;
use crate::lincomb::{ratio, Rational};
use crate::series::{hoch_series, schroeder, tinf_series, PowerSeries, SchroederKind};
use crate::trees::{compositions, enumerate_forests, enumerate_trees, Alphabet, Forest};

/// Published tree counts for one to five leaves.
pub const PAPER_TREE_COUNTS: [u64; 5] = [1, 1, 3, 11, 45];
/// Published forest counts for one to five leaves.
pub const PAPER_FOREST_COUNTS: [u64; 5] = [1, 2, 6, 22, 90];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Dims,
    Cocycle,
    Coassoc,
    Compat,
    Connected,
    Primdims,
    Pbw,
    Brackets,
    Unital,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Dims,
        Suite::Cocycle,
        Suite::Coassoc,
        Suite::Compat,
        Suite::Connected,
        Suite::Primdims,
        Suite::Pbw,
        Suite::Brackets,
        Suite::Unital,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Cocycle => "cocycle",
            Suite::Coassoc => "coassoc",
            Suite::Compat => "compat",
            Suite::Connected => "connected",
            Suite::Primdims => "primdims",
            Suite::Pbw => "pbw",
            Suite::Brackets => "brackets",
            Suite::Unital => "unital",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = HochError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| HochError::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// Passes when every case passes; the detail names the case count or the first failure.
    fn all<T: Sync>(
        name: impl Into<String>,
        cases: &[T],
        describe: impl Fn(&T) -> String + Sync,
        holds: impl Fn(&T) -> bool + Sync,
    ) -> Self {
        let failure = cases.par_iter().find_first(|c| !holds(c));
        match failure {
            None => Check::new(name, true, format!("{} cases", cases.len())),
            Some(c) => Check::new(name, false, format!("fails on {}", describe(c))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs suites against one coproduct engine.
pub struct Verifier {
    delta: Coproduct,
    max_degree: usize,
    random_samples: usize,
    seed: u64,
}

impl Verifier {
    pub fn new(max_degree: usize) -> Self {
        Verifier::with_engine(Coproduct::new(), max_degree)
    }

    pub fn with_engine(delta: Coproduct, max_degree: usize) -> Self {
        Verifier {
            delta,
            max_degree,
            random_samples: 500,
            seed: 0x484f_4348,
        }
    }

    /// Engine whose `x ⊗ y` term has the wrong sign in both rules.
    pub fn negative_control(max_degree: usize) -> Self {
        Verifier::with_engine(Coproduct::with_cross_term(CrossTerm::FLIPPED), max_degree)
    }

    pub fn random_samples(mut self, n: usize) -> Self {
        self.random_samples = n;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn engine(&self) -> &Coproduct {
        &self.delta
    }

    pub fn run(&self, suite: Suite) -> Result<SuiteReport> {
        let start = Instant::now();
        let n = self.max_degree;
        let checks = match suite {
            Suite::Dims => self.dims(n)?,
            Suite::Cocycle => self.cocycle(n)?,
            Suite::Coassoc => self.coassociativity(n)?,
            Suite::Compat => self.compatibility(n)?,
            Suite::Connected => self.connectedness(n)?,
            Suite::Primdims => self.primitive_dimensions(n)?,
            Suite::Pbw => self.pbw(n)?,
            Suite::Brackets => self.brackets(n)?,
            Suite::Unital => self.unital(n)?,
        };
        Ok(SuiteReport {
            suite,
            checks,
            elapsed: start.elapsed(),
        })
    }

    /// Runs the suites concurrently; reports come back in the order given.
    pub fn run_all(&self, suites: &[Suite]) -> Result<Vec<SuiteReport>> {
        suites.par_iter().map(|&s| self.run(s)).collect()
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// Enumerated counts against the series and the published values, plus the
    /// generating-function identities.
    pub fn dims(&self, n: usize) -> Result<Vec<Check>> {
        let alphabet = Alphabet::default();
        let little = tinf_series(n.max(1))?.integer_coefficients()?;
        let large = hoch_series(n.max(1))?.integer_coefficients()?;
        let mut checks = Vec::new();
        for k in 1..=n {
            let trees = enumerate_trees(k, alphabet)?.len();
            let forests = enumerate_forests(k, alphabet)?.len();
            let mut ok =
                BigInt::from(trees) == little[k - 1] && BigInt::from(forests) == large[k - 1];
            if k <= PAPER_TREE_COUNTS.len() {
                ok &= trees as u64 == PAPER_TREE_COUNTS[k - 1]
                    && forests as u64 == PAPER_FOREST_COUNTS[k - 1];
            }
            checks.push(Check::new(
                format!("counts n={k}"),
                ok,
                format!(
                    "trees {trees} (series {}), forests {forests} (series {})",
                    little[k - 1],
                    large[k - 1]
                ),
            ));
        }
        let order = n.max(12);
        let composed = PowerSeries::geometric(order).compose(&tinf_series(order)?);
        checks.push(Check::new(
            format!("x/(1-x) o f_T = f_Hoch to order {order}"),
            composed == hoch_series(order)?,
            String::new(),
        ));
        let conv = n.max(9);
        let (ok, detail) = convolution_identity(conv)?;
        checks.push(Check::new(
            format!("composition convolution n<={conv}"),
            ok,
            detail,
        ));
        Ok(checks)
    }

    /// The two-cocycle relation on all basis triples and on random elements.
    pub fn cocycle(&self, n: usize) -> Result<Vec<Check>> {
        let triples = basis_tuples(n, 3)?;
        let exhaustive = Check::all(
            format!("basis triples, total degree <= {n}"),
            &triples,
            |t| format!("({}, {}, {})", t[0], t[1], t[2]),
            |t| {
                let [x, y, z] = [0, 1, 2].map(|i| Element::forest(t[i].clone()));
                cocycle_holds(&x, &y, &z)
            },
        );
        let random = self.random_elements(0, 3 * self.random_samples, 3)?;
        let triples: Vec<&[Element]> = random.chunks(3).collect();
        let sampled = Check::all(
            format!("{} random triples", triples.len()),
            &triples,
            |t| format!("({}, {}, {})", t[0], t[1], t[2]),
            |t| cocycle_holds(&t[0], &t[1], &t[2]),
        );
        Ok(vec![exhaustive, sampled])
    }

    pub fn coassociativity(&self, n: usize) -> Result<Vec<Check>> {
        let forests = forests_up_to(n)?;
        let delta = &self.delta;
        let holds = |x: &Element| {
            let d = delta.apply(x);
            delta.apply_to_slot(&d, 0) == delta.apply_to_slot(&d, 1)
        };
        let grading = Check::all(
            format!("coproduct grading, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| {
                delta.basis(f).iter().all(|(key, _)| {
                    key[0].degree() >= 1
                        && key[1].degree() >= 1
                        && key[0].degree() + key[1].degree() == f.degree()
                })
            },
        );
        let exhaustive = Check::all(
            format!("basis forests, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| holds(&Element::forest(f.clone())),
        );
        let random = self.random_elements(1, self.random_samples, 3)?;
        let sampled = Check::all(
            format!("{} random elements", random.len()),
            &random,
            |x| x.to_string(),
            holds,
        );
        Ok(vec![grading, exhaustive, sampled])
    }

    /// Both compatibility rules, left side by expansion and right side from the formula.
    pub fn compatibility(&self, n: usize) -> Result<Vec<Check>> {
        let pairs = basis_tuples(n, 2)?;
        Ok([Op::Star, Op::Succ]
            .into_iter()
            .map(|op| {
                Check::all(
                    format!("Delta(x {} y), pairs of total degree <= {n}", op.symbol()),
                    &pairs,
                    |p| format!("({}, {})", p[0], p[1]),
                    |p| {
                        self.delta.check_compatibility(
                            &Element::forest(p[0].clone()),
                            &Element::forest(p[1].clone()),
                            op,
                        )
                    },
                )
            })
            .collect())
    }

    pub fn connectedness(&self, n: usize) -> Result<Vec<Check>> {
        let forests = forests_up_to(n)?;
        let delta = &self.delta;
        let level = Check::all(
            format!("filtration level <= degree, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| matches!(delta.filtration_level(&Element::forest(f.clone())), Ok(Some(r)) if r <= f.degree()),
        );
        let vanishing = Check::all(
            format!("Delta^(deg f)(f) = 0, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| {
                delta
                    .iterated(&Element::forest(f.clone()), f.degree())
                    .is_ok_and(|t| t.is_zero())
            },
        );
        let random = self.random_elements(2, self.random_samples.min(100), 3)?;
        let nested = Check::all(
            format!("F_r inside F_(r+1), {} random elements", random.len()),
            &random,
            |x| x.to_string(),
            |x| {
                let top = x.max_degree().unwrap_or(0);
                let zeros: Vec<bool> = (1..=top + 1)
                    .map(|r| delta.iterated(x, r).is_ok_and(|t| t.is_zero()))
                    .collect();
                zeros.windows(2).all(|w| !w[0] || w[1])
            },
        );
        Ok(vec![level, vanishing, nested])
    }

    /// Primitive dimensions against the tree counts, and the trees' primitive
    /// images spanning the primitives.
    pub fn primitive_dimensions(&self, n: usize) -> Result<Vec<Check>> {
        let alphabet = Alphabet::default();
        let little = tinf_series(n.max(1))?.integer_coefficients()?;
        let mut checks = Vec::new();
        for k in 1..=n {
            let basis = self.delta.primitive_basis(k, alphabet)?;
            let mut ok = BigInt::from(basis.len()) == little[k - 1];
            if k <= PAPER_TREE_COUNTS.len() {
                ok &= basis.len() as u64 == PAPER_TREE_COUNTS[k - 1];
            }
            ok &= basis.iter().all(|p| self.delta.is_primitive(p));
            checks.push(Check::new(
                format!("dim Prim_{k}"),
                ok,
                format!("{} (expected {})", basis.len(), little[k - 1]),
            ));

            let trees = enumerate_trees(k, alphabet)?;
            let images: Vec<Element> = trees.iter().map(tree_to_primitive).collect();
            let all_primitive = images.iter().all(|p| self.delta.is_primitive(p));
            let forests = enumerate_forests(k, alphabet)?;
            let rank = coordinate_matrix(&forests, &images).rank();
            checks.push(Check::new(
                format!("tree images span Prim_{k}"),
                all_primitive && rank == basis.len() && rank == trees.len(),
                format!("{} primitive images of rank {rank}", images.len()),
            ));
        }
        Ok(checks)
    }

    /// PBW change of basis is unitriangular and carries deconcatenation to `Δ`.
    pub fn pbw(&self, n: usize) -> Result<Vec<Check>> {
        let alphabet = Alphabet::default();
        let mut checks = Vec::new();
        for k in 1..=n {
            let forests = enumerate_forests(k, alphabet)?;
            let images: Vec<Element> = forests.iter().map(pbw_basis_element).collect();
            let m = coordinate_matrix(&forests, &images);
            let invertible = m.is_invertible()?;
            let triangular = m.is_upper_unitriangular();
            checks.push(Check::new(
                format!("PBW matrix degree {k}"),
                invertible && triangular,
                format!(
                    "{0}x{0}, invertible={invertible}, unitriangular={triangular}",
                    forests.len()
                ),
            ));
        }
        let forests = forests_up_to(n)?;
        checks.push(Check::all(
            format!("Delta(PBW(f)) = deconcatenation, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| {
                let k = f.tree_count();
                let mut expected = TensorElement::zero(2);
                for i in 1..k {
                    let left = pbw_basis_element(&f.slice(0..i));
                    let right = pbw_basis_element(&f.slice(i..k));
                    expected = &expected + &TensorElement::outer(&left, &right);
                }
                self.delta.apply(&pbw_basis_element(f)) == expected
            },
        ));
        Ok(checks)
    }

    /// Brackets of primitives stay primitive, products of primitives deconcatenate.
    pub fn brackets(&self, n: usize) -> Result<Vec<Check>> {
        let alphabet = Alphabet::default();
        let mut prims: Vec<Vec<Element>> = vec![Vec::new()];
        for k in 1..=n {
            prims.push(self.delta.primitive_basis(k, alphabet)?);
        }
        let mut checks = Vec::new();
        for arity in 2..=4 {
            let tuples = primitive_tuples(&prims, arity, n);
            checks.push(Check::all(
                format!("{arity}-ary brackets of primitives, total degree <= {n}"),
                &tuples,
                |t| describe_tuple(t),
                |t| nary_bracket(t).is_ok_and(|b| self.delta.is_primitive(&b)),
            ));
        }
        let mut tuples = Vec::new();
        for k in 1..=4 {
            tuples.extend(primitive_tuples(&prims, k, n));
        }
        checks.push(Check::all(
            format!("Delta of products of <= 4 primitives, total degree <= {n}"),
            &tuples,
            |t| describe_tuple(t),
            |t| {
                let mut expected = TensorElement::zero(2);
                for i in 1..t.len() {
                    expected =
                        &expected + &TensorElement::outer(&product(&t[..i]), &product(&t[i..]));
                }
                self.delta.apply(&product(t)) == expected
            },
        ));
        Ok(checks)
    }

    pub fn unital(&self, n: usize) -> Result<Vec<Check>> {
        let delta = &self.delta;
        let mut checks = Vec::new();
        let one = UnitalElement::one();
        let leaf = UnitalElement::from(Element::leaf());
        checks.push(Check::new(
            "delta(1) = 1 (x) 1",
            delta.unital(&one).to_string() == "1 (x) 1",
            delta.unital(&one).to_string(),
        ));
        checks.push(Check::new(
            "delta(|) = 1 (x) | + | (x) 1",
            delta.unital(&leaf).to_string() == "1 (x) | + | (x) 1",
            delta.unital(&leaf).to_string(),
        ));

        let mut basis: Vec<(usize, UnitalElement)> = vec![(0, one)];
        for f in forests_up_to(n)? {
            basis.push((f.degree(), UnitalElement::forest(f)));
        }
        let pairs: Vec<(&UnitalElement, &UnitalElement)> = basis
            .iter()
            .flat_map(|(d, x)| {
                basis
                    .iter()
                    .filter(move |(e, _)| d + e <= n)
                    .map(move |(_, y)| (x, y))
            })
            .collect();
        for op in [Op::Star, Op::Succ] {
            checks.push(Check::all(
                format!("unital relation for {}, total degree <= {n}", op.symbol()),
                &pairs,
                |(x, y)| format!("({x}, {y})"),
                |(x, y)| delta.check_unital_relation(x, y, op),
            ));
        }
        let forests = forests_up_to(n)?;
        checks.push(Check::all(
            format!("delta - 1(x)id - id(x)1 = Delta, degree <= {n}"),
            &forests,
            |f| f.to_string(),
            |f| {
                let x = Element::forest(f.clone());
                delta
                    .reduced_unital(&x)
                    .is_some_and(|t| t == delta.apply(&x))
            },
        ));
        Ok(checks)
    }

    /// Random elements with one to three terms of degree at most `max_term_degree`.
    pub fn random_elements(
        &self,
        stream: u64,
        count: usize,
        max_term_degree: usize,
    ) -> Result<Vec<Element>> {
        let pool = forests_up_to(max_term_degree)?;
        let mut rng = self.rng(stream);
        Ok((0..count)
            .map(|_| {
                let terms = rng.gen_range(1..=3);
                (0..terms)
                    .map(|_| {
                        (
                            pool[rng.gen_range(0..pool.len())].clone(),
                            random_rational(&mut rng),
                        )
                    })
                    .collect()
            })
            .collect())
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = rng.gen_range(-6i64..=6);
    if num == 0 {
        num = 7;
    }
    ratio(num, rng.gen_range(1i64..=4))
}

fn cocycle_holds(x: &Element, y: &Element, z: &Element) -> bool {
    let lhs = star(&succ(x, y), z) + succ(&star(x, y), z);
    let rhs = succ(x, &star(y, z)) + star(x, &succ(y, z));
    lhs == rhs
}

/// `large(n) = Σ over compositions of n of Π little(nᵢ)` for every `n ≤ max`.
pub fn convolution_identity(max: usize) -> Result<(bool, String)> {
    let little: Vec<BigInt> = (1..=max)
        .map(|k| schroeder(SchroederKind::Little, k))
        .collect::<Result<_>>()?;
    for n in 1..=max {
        let sum: BigInt = compositions(n, 1)
            .iter()
            .map(|parts| {
                parts
                    .iter()
                    .map(|&p| little[p - 1].clone())
                    .product::<BigInt>()
            })
            .sum();
        let large = schroeder(SchroederKind::Large, n)?;
        if sum != large {
            return Ok((false, format!("n={n}: convolution {sum} vs large {large}")));
        }
    }
    Ok((true, format!("n=1..{max}")))
}

pub(crate) fn forests_up_to(n: usize) -> Result<Vec<Forest>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_forests(k, Alphabet::default())?);
    }
    Ok(out)
}

/// All `arity`-tuples of basis forests with total degree at most `n`.
fn basis_tuples(n: usize, arity: usize) -> Result<Vec<Vec<Forest>>> {
    let by_degree: Vec<Vec<Forest>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Ok(Vec::new())
            } else {
                enumerate_forests(k, Alphabet::default())
            }
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for total in arity..=n {
        for parts in compositions(total, arity)
            .into_iter()
            .filter(|p| p.len() == arity)
        {
            let mut acc: Vec<Vec<Forest>> = vec![Vec::new()];
            for &d in &parts {
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        by_degree[d].iter().map(move |f| {
                            let mut next = prefix.clone();
                            next.push(f.clone());
                            next
                        })
                    })
                    .collect();
            }
            out.extend(acc);
        }
    }
    Ok(out)
}

/// All tuples of primitive basis elements whose degrees sum to at most `n`.
fn primitive_tuples(prims: &[Vec<Element>], arity: usize, n: usize) -> Vec<Vec<Element>> {
    let mut out = Vec::new();
    for total in arity..=n {
        for parts in compositions(total, arity)
            .into_iter()
            .filter(|p| p.len() == arity)
        {
            let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
            for &d in &parts {
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        prims[d].iter().map(move |p| {
                            let mut next = prefix.clone();
                            next.push(p.clone());
                            next
                        })
                    })
                    .collect();
            }
            out.extend(acc);
        }
    }
    out
}

fn describe_tuple(t: &[Element]) -> String {
    let parts: Vec<String> = t.iter().map(|x| format!("({x})")).collect();
    parts.join(", ")
}

/// Column `j` holds the coordinates of `images[j]` over `forests`.
pub fn coordinate_matrix(forests: &[Forest], images: &[Element]) -> RatMatrix {
    let index: std::collections::HashMap<&Forest, usize> =
        forests.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = RatMatrix::zeros(forests.len(), images.len());
    for (j, x) in images.iter().enumerate() {
        for (f, c) in x {
            m.set(index[f], j, c.clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn tuple_counts() {
        // 1 + 3·2 + (3·6 + 3·4)
        assert_eq!(basis_tuples(5, 3).unwrap().len(), 1 + 6 + 30);
        assert_eq!(basis_tuples(2, 2).unwrap().len(), 1);
    }

    #[test]
    fn small_sweep_passes() {
        let v = Verifier::new(3).random_samples(20);
        for report in v.run_all(&Suite::ALL).unwrap() {
            assert!(report.passed(), "{:?}", report);
        }
    }
}
