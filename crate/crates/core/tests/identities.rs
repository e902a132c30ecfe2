//! Algebraic identities of the free Hoch-algebra and its coproduct, checked
//! on random elements and on small exhaustive sets.

use std::sync::OnceLock;

use hoch::{
    enumerate_forests, enumerate_trees, nary_bracket, pbw_basis_element, star, succ, succ_basis,
    tree_to_primitive, Alphabet, Coproduct, Element, Forest, Op, Rational,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn pool() -> &'static [Forest] {
    static POOL: OnceLock<Vec<Forest>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=3)
            .flat_map(|n| enumerate_forests(n, Alphabet::default()).unwrap())
            .collect()
    })
}

fn delta() -> &'static Coproduct {
    static DELTA: OnceLock<Coproduct> = OnceLock::new();
    DELTA.get_or_init(Coproduct::new)
}

fn arb_element() -> impl Strategy<Value = Element> {
    prop::collection::vec((0..pool().len(), -5i64..=5, 1i64..=3), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(i, n, d)| {
                (
                    pool()[i].clone(),
                    Rational::new(BigInt::from(n), BigInt::from(d)),
                )
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative(x in arb_element(), y in arb_element(), z in arb_element()) {
        prop_assert_eq!(star(&star(&x, &y), &z), star(&x, &star(&y, &z)));
    }

    #[test]
    fn two_cocycle_relation(x in arb_element(), y in arb_element(), z in arb_element()) {
        let lhs = star(&succ(&x, &y), &z) + succ(&star(&x, &y), &z);
        let rhs = succ(&x, &star(&y, &z)) + star(&x, &succ(&y, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coassociative(x in arb_element()) {
        let d = delta().apply(&x);
        prop_assert_eq!(delta().apply_to_slot(&d, 0), delta().apply_to_slot(&d, 1));
    }

    #[test]
    fn compatibility_rules(x in arb_element(), y in arb_element()) {
        prop_assert!(delta().check_compatibility(&x, &y, Op::Star));
        prop_assert!(delta().check_compatibility(&x, &y, Op::Succ));
    }

    #[test]
    fn products_are_degree_additive(i in 0..pool().len(), j in 0..pool().len()) {
        let (f, g) = (&pool()[i], &pool()[j]);
        let x = Element::forest(f.clone());
        let y = Element::forest(g.clone());
        prop_assert!(star(&x, &y).is_homogeneous(f.degree() + g.degree()));
        prop_assert!(succ(&x, &y).is_homogeneous(f.degree() + g.degree()));
    }
}

#[test]
fn succ_basis_term_count() {
    for f in pool() {
        for g in pool() {
            let s = succ_basis(f, g);
            assert_eq!(s.len(), f.tree_count() * g.tree_count(), "{f} > {g}");
            assert!(s
                .iter()
                .all(|(_, c)| *c == Rational::from_integer(1.into())));
        }
    }
}

/// `t = (t₁*(t₂…t_{n−1})) ≻ tₙ − t₁*((t₂…t_{n−1}) ≻ tₙ)` for `n ≥ 3`, `t = t₁ ≻ t₂` for `n = 2`.
#[test]
fn rewriting_identity_for_every_tree() {
    for n in 2..=6 {
        for t in enumerate_trees(n, Alphabet::default()).unwrap() {
            let c: Vec<Element> = t.children().iter().cloned().map(Element::tree).collect();
            let m = c.len();
            let rewritten = if m == 2 {
                succ(&c[0], &c[1])
            } else {
                let middle = hoch::algebra::product(&c[1..m - 1]);
                succ(&star(&c[0], &middle), &c[m - 1]) - star(&c[0], &succ(&middle, &c[m - 1]))
            };
            assert_eq!(rewritten, Element::tree(t.clone()), "{t}");
        }
    }
}

#[test]
fn primitive_images_are_triangular_and_primitive() {
    for n in 1..=5 {
        for t in enumerate_trees(n, Alphabet::default()).unwrap() {
            let p = tree_to_primitive(&t);
            assert!(p.is_homogeneous(n));
            assert!(delta().is_primitive(&p), "{t}");
            assert_eq!(
                p.coefficient(&Forest::from(t.clone())),
                Rational::from_integer(1.into())
            );
            let rest = p - Element::tree(t.clone());
            assert!(rest.support().all(|f| f < &Forest::from(t.clone())), "{t}");
        }
    }
}

#[test]
fn pbw_elements_are_triangular() {
    for n in 1..=5 {
        for f in enumerate_forests(n, Alphabet::default()).unwrap() {
            let rest = pbw_basis_element(&f) - Element::forest(f.clone());
            assert!(rest.support().all(|g| g < &f), "{f}");
        }
    }
}

#[test]
fn coproduct_grading() {
    for n in 1..=6 {
        for f in enumerate_forests(n, Alphabet::default()).unwrap() {
            for (key, _) in delta().basis(&f).iter() {
                assert!(key[0].degree() >= 1 && key[1].degree() >= 1);
                assert_eq!(key[0].degree() + key[1].degree(), n);
            }
        }
    }
}

#[test]
fn filtration_is_nested_and_bounded() {
    for n in 1..=5 {
        for f in enumerate_forests(n, Alphabet::default()).unwrap() {
            let x = Element::forest(f.clone());
            let r = delta().filtration_level(&x).unwrap().unwrap();
            assert!(r <= n, "{f}");
            for s in r..=n + 1 {
                assert!(delta().iterated(&x, s).unwrap().is_zero());
            }
            if r > 1 {
                assert!(!delta().iterated(&x, r - 1).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn every_degree_n_forest_is_killed_by_the_nth_iterate() {
    for n in 1..=5 {
        for f in enumerate_forests(n, Alphabet::default()).unwrap() {
            let t = delta().iterated(&Element::forest(f.clone()), n).unwrap();
            assert_eq!(t.arity(), n + 1);
            assert!(t.is_zero(), "{f}");
        }
    }
}

#[test]
fn brackets_with_distinct_generators_are_primitive() {
    let a = Alphabet::new(3).unwrap();
    let vars: Vec<Element> = ["|0", "|1", "|2"]
        .iter()
        .map(|s| Element::parse(s, a).unwrap())
        .collect();
    let b2 = nary_bracket(&[vars[0].clone(), vars[1].clone()]).unwrap();
    assert_eq!(b2, Element::parse("[|0,|1] - |0 |1", a).unwrap());
    let b3 = nary_bracket(&vars).unwrap();
    assert_eq!(b3, Element::parse("[|0,|1,|2]", a).unwrap());
    let nested = nary_bracket(&[b2.clone(), vars[2].clone(), b2]).unwrap();
    for x in [&b3, &nested] {
        assert!(delta().is_primitive(x));
    }
}

#[test]
fn multi_generator_primitive_dimensions() {
    // dim Prim_n over m generators = m^n · little(n)
    let a = Alphabet::new(2).unwrap();
    let dims: Vec<usize> = (1..=3)
        .map(|n| delta().primitive_basis(n, a).unwrap().len())
        .collect();
    assert_eq!(dims, [2, 4, 24]);
}
