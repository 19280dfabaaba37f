//! Maximum cut against brute force, the eigenvalue bounds, quadratic-form and
//! trace identities, and invariance of the analysis under relabeling and
//! scaling.

mod common;

use common::*;
use pmcut_core::cut::{cohesion, cut_weight, exact_max_cut, max_cut};
use pmcut_core::exactness::{certify_exactness, exclusivity_check};
use pmcut_core::matrix::build_matrix;
use pmcut_core::spectra::{graph_spectrum, multiset_distance, spreads, three_spectra, weyl_check};
use pmcut_core::wilf::wilf_solve;
use pmcut_core::{
    generate, Graph, Kind, MatrixKind, Options, Partition, SymmetricMatrix, Tolerances,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn max_cut_matches_brute_force() {
    let mut r = rng(1);
    for trial in 0..200 {
        let n = 1 + trial % 10;
        let g = match trial % 3 {
            0 => gnp(&mut r, n, 0.5),
            1 => int_weighted(&mut r, n, 0.5),
            _ => real_weighted(&mut r, n, 0.5),
        };
        let (best, witness) = brute_max_cut(&g);
        let ours = exact_max_cut(&g, &Options::default().with_threads(1 + trial % 4)).unwrap();
        assert!((ours.mcut - best).abs() < 1e-9, "trial {trial}");
        assert_eq!(ours.witness.members(), witness.as_slice(), "trial {trial}");
        assert!((ours.mcut + ours.mcoh - g.total_weight()).abs() < 1e-9);
    }
}

#[test]
fn every_bound_dominates_the_maximum_cut() {
    let mut r = rng(2);
    for trial in 0..300 {
        let n = 2 + trial % 11;
        let g = if trial % 2 == 0 {
            gnp(&mut r, n, 0.5)
        } else {
            int_weighted(&mut r, n, 0.5)
        };
        let result = max_cut(&g, &Options::default()).unwrap();
        let slack = Tolerances::default().cmp_for(n);
        assert!(
            result.bounds.violations(result.mcut, slack).is_empty(),
            "trial {trial}"
        );
    }
}

#[test]
fn maximum_cut_minimizes_cohesion() {
    let mut r = rng(3);
    for _ in 0..50 {
        let g = int_weighted(&mut r, 7, 0.6);
        let best = exact_max_cut(&g, &Options::default()).unwrap();
        let min_coh = (1..128u64)
            .filter(|m| m & 1 == 1)
            .map(|m| cohesion(&g, &Partition::from_mask(7, m)).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert_eq!(best.mcoh, min_coh);
        assert_eq!(cohesion(&g, &best.witness).unwrap(), min_coh);
    }
}

fn quadratic_form(g: &Graph, kind: MatrixKind, x: &[f64]) -> f64 {
    let m = build_matrix(g, kind);
    m.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
}

#[test]
fn partition_vector_quadratic_forms() {
    let mut r = rng(4);
    for _ in 0..100 {
        let n = r.gen_range(2..=8);
        let g = int_weighted(&mut r, n, 0.5);
        for mask in (1..1u64 << n).filter(|m| m & 1 == 1) {
            let p = Partition::from_mask(n, mask);
            let x: Vec<f64> = p.vector().iter().map(|&s| s as f64).collect();
            let pairs: f64 = g
                .edges()
                .iter()
                .map(|e| e.w * (x[e.u] + x[e.v]).powi(2))
                .sum();
            let q = quadratic_form(&g, MatrixKind::SignlessLaplacian, &x);
            let l = quadratic_form(&g, MatrixKind::Laplacian, &x);
            assert_eq!(q, pairs);
            assert_eq!(q, 4.0 * cohesion(&g, &p).unwrap());
            assert_eq!(l, 4.0 * cut_weight(&g, &p).unwrap());
        }
    }
}

#[test]
fn trace_and_extreme_eigenvalue_identities() {
    let mut r = rng(5);
    for trial in 0..100 {
        let n = r.gen_range(2..=10);
        let g = if trial % 2 == 0 {
            gnp(&mut r, n, 0.5)
        } else {
            real_weighted(&mut r, n, 0.5)
        };
        let [a, l, q] = three_spectra(&g).unwrap();
        let w = g.total_weight();
        let squares: f64 = g.edges().iter().map(|e| e.w * e.w).sum();
        let scale = 1e-8 * (1.0 + w);
        assert!(a.values.iter().sum::<f64>().abs() < scale);
        assert!((l.values.iter().sum::<f64>() - 2.0 * w).abs() < scale);
        assert!((q.values.iter().sum::<f64>() - 2.0 * w).abs() < scale);
        assert!(
            (a.values.iter().map(|v| v * v).sum::<f64>() - 2.0 * squares).abs()
                < 1e-8 * (1.0 + squares)
        );
        assert!(l.smallest().abs() < 1e-9 * (1.0 + w));
        if g.is_bipartite() {
            assert!(q.smallest().abs() < 1e-9 * (1.0 + w));
            assert!(multiset_distance(&l.values, &q.values).unwrap() < 1e-8 * (1.0 + w));
        }
    }
}

#[test]
fn regular_graph_spectra_are_shifts_of_each_other() {
    let graphs = [
        generate::petersen(),
        generate::cycle(7).unwrap(),
        generate::circulant(11, &[1, 3, 4]).unwrap(),
        generate::complete(6).unwrap(),
        generate::complete_bipartite(4, 4).unwrap(),
    ];
    for g in graphs {
        let r = g.degrees()[0];
        let [a, l, q] = three_spectra(&g).unwrap();
        let n = g.n();
        for i in 0..n {
            assert!((a.values[i] - (r - l.values[n - 1 - i])).abs() < 1e-9);
            assert!((a.values[i] - (q.values[i] - r)).abs() < 1e-9);
        }
    }
}

#[test]
fn weyl_inequalities_on_random_matrices() {
    let mut r = rng(6);
    let tol = Tolerances::default();
    for _ in 0..100 {
        let mut random = || SymmetricMatrix::from_fn(5, |_, _| r.gen_range(-3.0..3.0));
        let (a, b) = (random(), random());
        for i in 1..=5 {
            for j in 1..=5 {
                let check = weyl_check(&a, &b, i, j, &tol).unwrap();
                assert!(check.upper.is_none_or(|o| o.holds));
                assert!(check.lower.is_none_or(|o| o.holds));
                assert_eq!(check.upper.is_some(), i + j > 5);
                assert_eq!(check.lower.is_some(), i + j <= 6);
            }
        }
    }
}

#[test]
fn spread_relation_on_random_connected_graphs() {
    let mut r = rng(8);
    let tol = Tolerances::default();
    let mut checked = 0;
    while checked < 150 {
        let n = r.gen_range(3..=10);
        let g = gnp(&mut r, n, 0.5);
        if !g.is_connected() {
            continue;
        }
        let report = spreads(&g, &tol).unwrap();
        assert!(report.inequality_holds(tol.cmp_for(n)));
        assert!(report.regularity_relation_holds());
        checked += 1;
    }
}

#[test]
fn bipartite_regular_graphs_are_l_exact() {
    let graphs = [
        generate::complete_bipartite(3, 3).unwrap(),
        generate::cycle(6).unwrap(),
        generate::cycle(10).unwrap(),
        generate::circulant(10, &[1, 3]).unwrap(),
        generate::matching(4).unwrap(),
    ];
    for g in graphs {
        assert!(
            certify_exactness(&g, Kind::L, &Options::default())
                .unwrap()
                .is_exact
        );
    }
}

#[test]
fn tightness_coincides_with_exactness_and_exclusivity_holds() {
    let mut r = rng(9);
    let slack = |n: usize| Tolerances::default().cmp_for(n);
    for trial in 0..150 {
        let n = r.gen_range(2..=9);
        let g = if trial % 5 == 0 {
            generate::circulant(n + 4, &[1, 2]).unwrap()
        } else {
            gnp(&mut r, n, 0.5)
        };
        let report = exclusivity_check(&g, &Options::default()).unwrap();
        let bounds = max_cut(&g, &Options::default()).unwrap().bounds;
        let mcut = report.certificates[0].mcut;
        let tight = [
            bounds.adjacency,
            bounds.laplacian,
            bounds.signless_laplacian,
        ]
        .map(|b| (b - mcut).abs() <= slack(g.n()));
        for (kind, tight) in Kind::ALL.into_iter().zip(tight) {
            assert_eq!(
                report.certificate(kind).is_exact,
                tight,
                "{kind} trial {trial}"
            );
        }
        assert!(report.exclusivity_holds, "trial {trial}");
    }
}

#[test]
fn exact_witnesses_are_sign_eigenvectors() {
    let mut r = rng(10);
    for _ in 0..100 {
        let n = r.gen_range(3..=8);
        let g = gnp(&mut r, n, 0.5);
        let report = exclusivity_check(&g, &Options::default()).unwrap();
        for c in report
            .certificates
            .iter()
            .filter(|c| c.is_exact && !c.witness.is_constant())
        {
            let mask = c.witness.to_mask().unwrap();
            let value =
                sign_eigenvalue(&g, c.kind, mask, 1e-9).expect("exact witness is an eigenvector");
            assert!((value - c.eigenvalue_used).abs() < 1e-7);
            assert!(c.structural_check.as_ref().unwrap().satisfied);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeling_preserves_the_analysis(seed in any::<u64>(), n in 2usize..9) {
        let mut r = rng(seed);
        let g = int_weighted(&mut r, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let h = g.relabeled(&perm).unwrap();
        let opts = Options::default();
        prop_assert_eq!(exact_max_cut(&g, &opts).unwrap().mcut, exact_max_cut(&h, &opts).unwrap().mcut);
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let (x, y) = (graph_spectrum(&g, kind).unwrap(), graph_spectrum(&h, kind).unwrap());
            prop_assert!(multiset_distance(&x.values, &y.values).unwrap() < 1e-9);
        }
        let count = |g: &Graph| {
            let mut kinds: Vec<(Kind, i64)> = wilf_solve(g, &Kind::ALL, &opts)
                .unwrap()
                .iter()
                .map(|s| (s.kind, s.eigenvalue as i64))
                .collect();
            kinds.sort();
            kinds
        };
        prop_assert_eq!(count(&g), count(&h));
    }

    #[test]
    fn scaling_preserves_exactness(seed in any::<u64>(), n in 2usize..8, c in 0.25f64..4.0) {
        let mut r = rng(seed);
        let g = gnp(&mut r, n, 0.6);
        let h = g.scaled(c).unwrap();
        let opts = Options::default();
        let (x, y) = (exclusivity_check(&g, &opts).unwrap(), exclusivity_check(&h, &opts).unwrap());
        prop_assert!((y.certificates[0].mcut - c * x.certificates[0].mcut).abs() < 1e-9 * (1.0 + c * g.total_weight()));
        prop_assert_eq!(x.exact_kinds, y.exact_kinds);
    }
}
