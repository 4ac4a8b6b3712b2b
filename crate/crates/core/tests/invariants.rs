//! Property and exhaustive cross-checks that span modules: group axioms on
//! searched automorphism groups, agreement of the two distinguishing tests,
//! polynomial ring laws, and enumeration sanity over the bundled corpus.

use distpoly::closed_forms::factorial;
use distpoly::coloring::Coloring;
use distpoly::corpus;
use distpoly::graph::{complete_graph, cycle_graph, disjoint_union, path_graph, star_graph};
use distpoly::group::{
    automorphisms, has_color_preserving_automorphism, orbit_partition, DEFAULT_AUT_CAP,
};
use distpoly::oracle::{
    count_distinguishing, dist_poly_oracle, distinguishing_number, DistCount, DEFAULT_BUDGET,
};
use distpoly::poly::{falling_factorial, interpolate, IntPoly};
use distpoly::{BigInt, Graph};
use num::{One, Zero};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-bound..=bound, 0..=max_deg + 1)
        .prop_map(|coeffs| IntPoly::from_coeffs(coeffs.into_iter().map(BigInt::from).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn searched_groups_satisfy_group_axioms(g in arb_graph(6)) {
        let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        prop_assert!(group.is_closed_group());
        let nfact = factorial(g.n());
        prop_assert!((nfact % BigInt::from(group.order())).is_zero());
        for f in group.elements() {
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(f.apply(u), f.apply(v)));
                }
            }
        }
    }

    #[test]
    fn complement_has_the_same_group(g in arb_graph(7)) {
        let a = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        let b = automorphisms(&g.complement(), DEFAULT_AUT_CAP).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn orbit_blocks_are_invariant(g in arb_graph(6)) {
        let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        for block in group.orbits() {
            for f in group.elements() {
                let mut mapped: Vec<usize> = block.iter().map(|&v| f.apply(v)).collect();
                mapped.sort_unstable();
                prop_assert_eq!(&mapped, &block);
            }
        }
        prop_assert_eq!(orbit_partition(&g), group.orbits());
    }

    #[test]
    fn ring_laws_hold(a in arb_int_poly(6, 1_000_000),
                      b in arb_int_poly(6, 1_000_000),
                      c in arb_int_poly(6, 1_000_000)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn interpolation_inverts_evaluation(p in arb_int_poly(10, 1_000_000)) {
        let d = p.degree().unwrap_or(0);
        let points: Vec<(BigInt, BigInt)> = (0..=d as i64)
            .map(|x| (BigInt::from(x), p.eval(&BigInt::from(x))))
            .collect();
        prop_assert_eq!(interpolate(&points, d).unwrap(), p);
    }

    #[test]
    fn zero_multiplicity_is_additive(a in arb_int_poly(6, 1000), b in arb_int_poly(6, 1000)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(
            prod.zero_multiplicity().unwrap(),
            a.zero_multiplicity().unwrap() + b.zero_multiplicity().unwrap()
        );
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(70)) {
        let encoded = g.to_graph6();
        prop_assert_eq!(Graph::parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn falling_factorial_counts_injections(n in 0usize..7, k in 0i64..10) {
        // k_(n) at k counts injections of an n-set into a k-set
        let v = falling_factorial(n).eval(&BigInt::from(k));
        if (k as usize) < n {
            prop_assert_eq!(v, BigInt::zero());
        } else {
            let expected = factorial(k as usize) / factorial(k as usize - n);
            prop_assert_eq!(v, expected);
        }
    }
}

/// The two independent distinguishing tests agree on every coloring of
/// every graph with at most six vertices and at most three colors: the
/// color-constrained backtracker versus the enumerated stabilizer.
#[test]
fn backtracker_agrees_with_stabilizer_exhaustively() {
    for g in corpus::all_graphs_upto(6) {
        let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        for k in 1..=3u32 {
            let mut colors = vec![1u32; g.n()];
            loop {
                let c = Coloring::new(colors.clone(), k).unwrap();
                let via_search = has_color_preserving_automorphism(&g, &c);
                let via_stabilizer = group.stabilizer(&c).order() > 1;
                assert_eq!(
                    via_search,
                    via_stabilizer,
                    "{} colors {:?}",
                    g.to_graph6(),
                    c.colors()
                );
                // odometer step
                let mut pos = colors.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if colors[pos] < k {
                        colors[pos] += 1;
                        break;
                    }
                    colors[pos] = 1;
                }
                if colors.iter().all(|&c| c == 1) {
                    break;
                }
            }
        }
    }
}

/// Group-axiom spot checks on the structured graphs of order up to eight,
/// where the searched groups are largest.
#[test]
fn structured_groups_of_order_eight() {
    let cases: Vec<(Graph, usize)> = vec![
        (cycle_graph(8), 16),
        (path_graph(8), 2),
        (star_graph(7), factorial(7).try_into().unwrap()),
        (disjoint_union(&complete_graph(4), &complete_graph(4)), 1152),
        (complete_graph(8), 40320),
    ];
    for (g, want_order) in cases {
        let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        assert_eq!(group.order(), want_order);
        assert!((factorial(8) % BigInt::from(group.order())).is_zero());
        if group.order() <= 2000 {
            assert!(group.is_closed_group());
        } else {
            // sampled closure and inverses for the giant groups
            let elems = group.elements();
            let step = elems.len() / 97 + 1;
            for (i, f) in elems.iter().step_by(step).enumerate() {
                assert!(group.contains(&f.inverse()));
                let g2 = &elems[(i * 31) % elems.len()];
                assert!(group.contains(&f.compose(g2)));
            }
        }
    }
}

/// Counts over the small corpus obey the unconditional bounds: divisible by
/// the group order, monotone in k, zero below the distinguishing number and
/// at least the group order at it.
#[test]
fn count_bounds_over_corpus() {
    for g in corpus::all_graphs_upto(5) {
        let group = automorphisms(&g, DEFAULT_AUT_CAP).unwrap();
        let aut = BigInt::from(group.order());
        let poly = dist_poly_oracle(&g, DEFAULT_BUDGET).unwrap();
        let d = distinguishing_number(&g, DEFAULT_BUDGET).unwrap();
        let mut prev = BigInt::zero();
        for k in 0..=(g.n() as u32 + 1) {
            let count = count_distinguishing(&g, k, DEFAULT_BUDGET).unwrap();
            DistCount {
                k,
                count: count.clone(),
            }
            .validate(g.n(), &aut)
            .unwrap();
            assert!(count >= prev, "monotonicity at k = {k} on {}", g.to_graph6());
            assert_eq!(poly.eval(&BigInt::from(k)), count, "polynomial matches count");
            if k < d {
                assert!(count.is_zero());
            }
            if k == d {
                assert!(count >= aut);
            }
            prev = count;
        }
    }
}

/// Asymmetric graphs are exactly those with polynomial k^n.
#[test]
fn asymmetric_graphs_have_full_polynomial() {
    for g in corpus::all_graphs_upto(6) {
        if g.n() < 6 {
            continue; // no asymmetric graphs below six vertices
        }
        let trivial = automorphisms(&g, DEFAULT_AUT_CAP).unwrap().is_trivial();
        let poly = dist_poly_oracle(&g, DEFAULT_BUDGET).unwrap();
        let full = IntPoly::monomial(BigInt::one(), g.n());
        assert_eq!(poly == full, trivial, "{}", g.to_graph6());
    }
}

/// The n = 0 graph: trivial group, constant polynomial 1.
#[test]
fn zero_vertex_conventions() {
    let g = Graph::empty(0);
    assert_eq!(automorphisms(&g, 10).unwrap().order(), 1);
    assert_eq!(dist_poly_oracle(&g, DEFAULT_BUDGET).unwrap(), IntPoly::one());
    assert!(count_distinguishing(&g, 5, DEFAULT_BUDGET).unwrap().is_one());
}
