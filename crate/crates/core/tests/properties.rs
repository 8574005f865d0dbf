#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use proptest::prelude::*;

use kmorbits::fixtures::fixture;
use kmorbits::imaginary::{
    enumerate_hyperboloid, is_antidominant, is_real_by_negation, orbit_census, reduce_to_dominant,
    HyperboloidQuery, NegationVerdict,
};
use kmorbits::orbitgraph::build_orbit_graph;
use kmorbits::orbits::{
    connecting_word, generate_real_roots, orbit_bfs_oracle, orbit_partition, same_orbit,
};
use kmorbits::roots::{
    apply_word, pairing, real_root_test, reflect, BilinearForm, RealRootVerdict,
};
use kmorbits::{GeneralizedCartanMatrix, Rational, RootVector, WeylWord};

fn gcm() -> impl Strategy<Value = GeneralizedCartanMatrix> {
    (2usize..=4).prop_flat_map(|n| {
        let pair = prop_oneof![
            Just((0i64, 0i64)),
            (1i64..=4, 1i64..=4).prop_map(|(x, y)| (-x, -y))
        ];
        prop::collection::vec(pair, n * (n - 1) / 2).prop_map(move |pairs| {
            let mut rows = vec![vec![2i64; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    rows[i][j] = pairs[k].0;
                    rows[j][i] = pairs[k].1;
                    k += 1;
                }
            }
            GeneralizedCartanMatrix::new(rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn skeleton_partition_matches_bfs(a in gcm()) {
        let n = a.rank();
        let p = orbit_partition(&a);
        for i in 0..n {
            let orbit = orbit_bfs_oracle(&a, i, 4).unwrap();
            for j in 0..n {
                let together = p.class_of[i] == p.class_of[j];
                prop_assert_eq!(together, orbit.contains(&RootVector::simple(n, j)));
                prop_assert_eq!(together, same_orbit(&a, i, j).unwrap());
            }
        }
    }

    #[test]
    fn connecting_words_connect(a in gcm()) {
        let n = a.rank();
        for j in 0..n {
            for k in 0..n {
                match connecting_word(&a, j, k).unwrap() {
                    Some(w) => {
                        prop_assert!(same_orbit(&a, j, k).unwrap());
                        let image = apply_word(&a, &w, &RootVector::simple(n, j)).unwrap();
                        prop_assert_eq!(image, RootVector::simple(n, k));
                    }
                    None => prop_assert!(!same_orbit(&a, j, k).unwrap()),
                }
            }
        }
    }

    #[test]
    fn generated_roots_are_real_and_signed(a in gcm()) {
        let set = generate_real_roots(&a, 3).unwrap();
        for r in &set.roots {
            prop_assert!(r.has_uniform_sign());
            prop_assert!(set.contains(&r.neg()));
            let verdict = real_root_test(&a, r, 10_000).unwrap();
            match verdict {
                RealRootVerdict::Real { witness } => {
                    let image = apply_word(&a, &witness, r).unwrap();
                    prop_assert!(image.simple_index().is_some());
                }
                other => prop_assert!(false, "{} judged {:?}", r, other),
            }
        }
    }

    #[test]
    fn orbit_graph_invariants(a in gcm()) {
        let g = build_orbit_graph(&a, 3).unwrap();
        prop_assert!(g.degrees().iter().all(|&d| d == a.rank()));
        prop_assert_eq!(g.component_count(), orbit_partition(&a).classes.len());
        for &(u, i) in &g.loops {
            prop_assert_eq!(pairing(&a, &g.vertices[u], i), 0);
        }
        for &(u, v, i) in &g.edges {
            prop_assert!(u < v);
            prop_assert_eq!(reflect(&a, i, &g.vertices[u]).unwrap(), g.vertices[v].clone());
        }
    }

    #[test]
    fn words_apply_right_to_left(a in gcm(), letters in prop::collection::vec(0usize..4, 0..6), seed in prop::collection::vec(-5i64..=5, 4)) {
        let n = a.rank();
        let letters: Vec<usize> = letters.into_iter().map(|i| i % n).collect();
        let beta = RootVector::new(seed[..n].to_vec());
        let mut expected = beta.clone();
        for &i in letters.iter().rev() {
            expected = reflect(&a, i, &expected).unwrap();
        }
        prop_assert_eq!(apply_word(&a, &WeylWord::new(letters), &beta).unwrap(), expected);
    }

    #[test]
    fn reductions_are_sound(name in prop_oneof![Just("A1hat_aff"), Just("H2_3"), Just("Aprime"), Just("H1_4")],
                            coords in prop::collection::vec(0i64..=6, 4)) {
        let a = fixture(name).unwrap();
        let beta = RootVector::new(coords[..a.rank()].to_vec());
        prop_assume!(!beta.is_zero());
        let form = BilinearForm::new(&a).unwrap();
        let norm = form.norm(&beta).unwrap();
        prop_assume!(norm <= Rational::from_integer(0));
        let (rep, word) = reduce_to_dominant(&a, &beta).unwrap();
        prop_assert_eq!(apply_word(&a, &word, &beta).unwrap(), rep.clone());
        prop_assert_eq!(form.norm(&rep).unwrap(), norm);
        prop_assert!(is_antidominant(&a, &rep));
        prop_assert!(rep.is_positive().unwrap());
        prop_assert_eq!(is_real_by_negation(&a, &beta, 6).unwrap(), NegationVerdict::NotReal);
    }
}

#[test]
fn word_json_is_one_based() {
    let w = WeylWord::new(vec![0, 2, 1]);
    let text = serde_json::to_string(&w).unwrap();
    assert_eq!(text, "[1,3,2]");
    assert_eq!(serde_json::from_str::<WeylWord>(&text).unwrap(), w);
}

#[test]
fn real_roots_negate_and_imaginary_do_not() {
    for name in ["A1hat_aff", "H2_3", "Aprime", "H3", "B2", "A2"] {
        let a = fixture(name).unwrap();
        let set = generate_real_roots(&a, 4).unwrap();
        for r in set.positive() {
            assert_eq!(
                is_real_by_negation(&a, r, 4),
                Ok(NegationVerdict::Real),
                "{name} {r}"
            );
        }
    }
}

/// Counts of W-orbits on the hyperboloids of Â1⁽¹⁾ grow with the norm. The
/// counts are not monotone term by term (norm −18 has 3 orbits, −20 has 2),
/// so the trend is compared over consecutive blocks of four norms.
#[test]
fn orbit_counts_trend_upward_with_norm() {
    let a = fixture("A1hat_aff").unwrap();
    let counts = |bound: u64| -> Vec<usize> {
        (1..=12)
            .map(|k| {
                let q = HyperboloidQuery::new(Rational::from_integer(-2 * k), bound).unwrap();
                orbit_census(&a, &q).unwrap().orbit_count
            })
            .collect()
    };
    let c = counts(24);
    // The box is large enough: a bigger box finds nothing new.
    assert_eq!(c, counts(30));
    assert_eq!(c, vec![1, 1, 2, 2, 2, 2, 2, 3, 3, 2, 3, 4]);
    let blocks: Vec<usize> = c.chunks(4).map(|b| b.iter().sum()).collect();
    assert!(blocks.windows(2).all(|w| w[0] < w[1]), "{blocks:?}");
    assert!(c.last() > c.first());
}

#[test]
fn census_points_partition_into_orbits() {
    let a = fixture("H2_3").unwrap();
    for n in [-2i128, -4, -6] {
        let q = HyperboloidQuery::new(Rational::from_integer(n), 5).unwrap();
        let reps: BTreeSet<RootVector> = orbit_census(&a, &q)
            .unwrap()
            .representatives
            .into_iter()
            .collect();
        for p in enumerate_hyperboloid(&a, &q).unwrap() {
            assert!(reps.contains(&reduce_to_dominant(&a, &p).unwrap().0));
        }
    }
}
