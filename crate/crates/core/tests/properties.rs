mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use quiver_vgit::analysis::{analyze, AnalysisOptions, SemistableCnf};
use quiver_vgit::geometry::arrangement::{
    dedup_forms, enumerate_cells_incremental, enumerate_cells_scan, enumerate_chambers, Sign,
};
use quiver_vgit::geometry::feasibility::strict_feasible;
use quiver_vgit::geometry::fourier_motzkin::fm_feasible;
use quiver_vgit::geometry::lattice::kernel_basis;
use quiver_vgit::geometry::slice::{direction_on_slice, project_point, restrict_to_slice, SliceObject};
use quiver_vgit::quiver::{
    enumerate_subdimensions, king_semistability, slope_normal, Character, DimensionVector, Semistability,
    ThinRepPattern,
};
use quiver_vgit::rational::{add, dot, int, ints, scale, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn quiver_from_seed(seed: u64, max_vertices: usize, max_arrows: usize) -> quiver_vgit::Quiver {
    random_acyclic_quiver(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices, max_arrows)
}

/// A random character with Σθ = 0.
fn perp_character(rng: &mut ChaCha8Rng, n: usize) -> Character {
    let mut theta: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-6..=6)).collect();
    theta.push(-theta.iter().sum::<i64>());
    Character(theta)
}

fn forms(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| ints(r)).collect()
}

fn small_forms(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn king_is_invariant_under_positive_scaling(seed in any::<u64>(), k in 1i64..20, mask in any::<u64>()) {
        let q = quiver_from_seed(seed, 6, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let theta = perp_character(&mut rng, q.vertex_count());
        let p = ThinRepPattern::from_mask(q.arrows().len(), mask & ((1 << q.arrows().len()) - 1));
        prop_assert_eq!(king_semistability(&q, &p, &theta), king_semistability(&q, &p, &theta.scaled(k)));
    }

    #[test]
    fn complementary_classes_have_opposite_normals(n in 2usize..7, mask in any::<u64>()) {
        let full = (1u64 << n) - 1;
        let m = mask & full;
        prop_assume!(m != 0 && m != full);
        let d = vec![1i64; n];
        let e: Vec<i64> = (0..n).map(|i| (m >> i & 1) as i64).collect();
        let f: Vec<i64> = e.iter().map(|x| 1 - x).collect();
        let ne = slope_normal(&d, &e);
        let nf = slope_normal(&d, &f);
        prop_assert!(ne.iter().zip(&nf).all(|(a, b)| *a == -b));
    }

    #[test]
    fn class_occurs_iff_its_clause_vanishes(seed in any::<u64>(), mask in any::<u64>()) {
        let q = quiver_from_seed(seed, 6, 10);
        let n = q.vertex_count();
        let m = q.arrows().len();
        let p = ThinRepPattern::from_mask(m, mask & ((1 << m) - 1));
        for class in enumerate_subdimensions(&q, &DimensionVector::thin(n)).unwrap() {
            // A vertex subset is closed under the nonzero arrows iff no
            // nonzero arrow leaves it.
            let closed = q.arrows().iter().enumerate().all(|(k, a)| {
                !(p.nonzero[k] && class.support >> a.source & 1 == 1 && class.support >> a.target & 1 == 0)
            });
            prop_assert_eq!(class.occurs_in(&p), closed);
        }
    }

    #[test]
    fn cnf_is_subsumption_free_and_equivalent(
        clauses in prop::collection::vec(prop::collection::btree_set(0usize..6, 0..4), 0..8),
        mask in 0u64..64,
    ) {
        let raw: Vec<Vec<usize>> = clauses.iter().map(|c| c.iter().copied().collect()).collect();
        let cnf = SemistableCnf::from_clauses(raw.clone());
        let cs = cnf.clauses();
        for (i, a) in cs.iter().enumerate() {
            for (j, b) in cs.iter().enumerate() {
                if i != j {
                    prop_assert!(!a.iter().all(|x| b.contains(x)), "{:?} subsumes {:?}", a, b);
                }
            }
        }
        prop_assert!(cs.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        let p = ThinRepPattern::from_mask(6, mask);
        let direct = raw.iter().all(|c| c.iter().any(|&k| p.nonzero[k]));
        prop_assert_eq!(cnf.evaluate(&p), direct);
    }

    #[test]
    fn simplex_agrees_with_fourier_motzkin(
        dim in 1usize..5,
        strict in small_forms(4, 6),
        nonstrict in small_forms(4, 3),
    ) {
        let strict: Vec<Vec<i64>> = strict.into_iter().map(|r| r[..dim].to_vec()).collect();
        let nonstrict: Vec<Vec<i64>> = nonstrict.into_iter().map(|r| r[..dim].to_vec()).collect();
        let (a, b) = (forms(&strict), forms(&nonstrict));
        let simplex = strict_feasible(&a, &b, dim);
        let fm = fm_feasible(&a, &b, dim);
        prop_assert_eq!(simplex.is_feasible(), fm.is_some());
        if let Some(w) = fm {
            prop_assert!(a.iter().all(|f| dot(f, &w) > int(0)));
            prop_assert!(b.iter().all(|f| dot(f, &w) >= int(0)));
        }
    }

    #[test]
    fn scan_and_incremental_enumerations_agree(dim in 1usize..5, rows in small_forms(4, 8)) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..dim].to_vec()).collect();
        let arr = dedup_forms(&forms(&rows), dim);
        let scan = enumerate_cells_scan(&arr, &[]).unwrap();
        let incremental = enumerate_cells_incremental(&arr, &[]);
        prop_assert_eq!(&scan, &incremental);
        if !arr.hyperplanes.is_empty() {
            let fixed = [(0, Sign::Neg)];
            prop_assert_eq!(enumerate_cells_scan(&arr, &fixed).unwrap(), enumerate_cells_incremental(&arr, &fixed));
        }
        for c in &scan {
            prop_assert!(c.contains(&arr, &c.witness));
        }
    }

    #[test]
    fn slice_lines_lie_on_their_hyperplanes(seed in any::<u64>(), tau in -20i64..20) {
        let request = diamond_request();
        let slice = request.slice.as_ref().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let form: Vec<Rational> = (0..3).map(|_| int(rng.gen_range(-5..=5))).collect();
        prop_assume!(form.iter().any(|x| *x != int(0)));
        let restricted = slice.restrict_form(&form);
        if let SliceObject::Line { a, b } = restrict_to_slice(&form, slice) {
            let pt = [&a[0] + int(tau) * &b[0], &a[1] + int(tau) * &b[1]];
            prop_assert_eq!(restricted.eval(&pt), int(0));
            prop_assert_eq!(dot(&form, &slice.point(&pt[0], &pt[1])), int(0));
        }
    }

    #[test]
    fn direction_limit_matches_closed_form(s in -9i64..9, t in -9i64..9, arrow in 0usize..5) {
        let (request, analysis) = diamond();
        let slice = request.slice.as_ref().unwrap();
        let chi = Character::of_arrow(&analysis.quiver, arrow);
        let coords = analysis.coordinates_of(&chi).unwrap();
        let x = slice.point(&int(s), &int(t));
        let n = int(1_000_000);
        let traced = project_point(&add(&x, &scale(&coords, &n)), slice).unwrap();
        let (p, u1, u2) = (slice.point(&int(0), &int(0)), slice.u1().to_vec(), slice.u2().to_vec());
        // Coordinates of χ in the frame (p, u1, u2).
        let sol = solve3(&[p, u1, u2], &coords);
        let (cp, c1, c2) = (&sol[0], &sol[1], &sol[2]);
        let den = int(1) + &n * cp;
        prop_assert_eq!(&traced[0], &((int(s) + &n * c1) / &den));
        prop_assert_eq!(&traced[1], &((int(t) + &n * c2) / &den));
        if let SliceObject::Point(limit) = direction_on_slice(&coords, slice).unwrap() {
            prop_assert!(*cp > int(0));
            let bound = Rational::new(1.into(), 10.into());
            for k in 0..2 {
                let gap = &traced[k] - &limit[k];
                prop_assert!(gap.clone() < bound.clone() && -gap < bound.clone());
            }
        }
    }

    #[test]
    fn unstable_divisors_match_king(seed in any::<u64>()) {
        let q = quiver_from_seed(seed, 5, 7);
        let analysis = g_ample_analysis(&q);
        let m = q.arrows().len();
        for (i, c) in analysis.g_ample_chambers() {
            let theta = witness_character(&analysis, i);
            for k in 0..m {
                let king = king_semistability(&q, &ThinRepPattern::with_zero(m, k), &theta);
                prop_assert_eq!(c.unstable_divisors.contains(&k), king == Semistability::Unstable);
            }
        }
    }
}

/// Solves `Σ x_i rows_i = target` for three independent rows in Q³.
fn solve3(rows: &[Vec<Rational>; 3], target: &[Rational]) -> Vec<Rational> {
    let det = |m: [&[Rational]; 3]| -> Rational {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[1][0] * (&m[0][1] * &m[2][2] - &m[0][2] * &m[2][1])
            + &m[2][0] * (&m[0][1] * &m[1][2] - &m[0][2] * &m[1][1])
    };
    let base = det([&rows[0], &rows[1], &rows[2]]);
    (0..3)
        .map(|i| {
            let mut m: [&[Rational]; 3] = [&rows[0], &rows[1], &rows[2]];
            m[i] = target;
            det(m) / &base
        })
        .collect()
}

#[test]
fn infeasible_sign_vectors_are_never_sampled() {
    let (_, analysis) = diamond();
    let arr = &analysis.arrangement;
    let feasible: HashSet<Vec<Option<Sign>>> = enumerate_chambers(arr).unwrap().into_iter().map(|c| c.signs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut seen = HashSet::new();
    for _ in 0..10_000 {
        let x: Vec<Rational> = (0..arr.dim)
            .map(|_| Rational::new(rng.gen_range(-99..=99).into(), rng.gen_range(1..=20).into()))
            .collect();
        let signs = arr.sign_vector(&x);
        if signs.iter().all(Option::is_some) {
            assert!(feasible.contains(&signs), "sampled a sign vector declared infeasible: {signs:?}");
            seen.insert(signs);
        }
    }
    assert!(seen.len() > feasible.len() / 2, "sampling reached only {} cells", seen.len());
}

#[test]
fn random_points_fall_in_exactly_one_cell() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let dim = rng.gen_range(1..=4);
        let rows: Vec<Vec<i64>> = (0..rng.gen_range(0..=9))
            .map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let arr = dedup_forms(&forms(&rows), dim);
        let cells = enumerate_chambers(&arr).unwrap();
        for _ in 0..200 {
            let x: Vec<Rational> = (0..dim).map(|_| int(rng.gen_range(-40..=40))).collect();
            let signs = arr.sign_vector(&x);
            if signs.iter().any(Option::is_none) {
                continue;
            }
            assert_eq!(cells.iter().filter(|c| c.signs == signs).count(), 1);
        }
    }
}

#[test]
fn kernel_basis_spans_the_sum_zero_hyperplane() {
    for n in 1..7 {
        let d = DimensionVector::thin(n);
        let basis = kernel_basis(&d.as_i64());
        assert_eq!(basis.len(), n - 1);
        assert!(basis.iter().all(|v| v.iter().sum::<i64>() == 0));
    }
    let a = analyze(&kronecker(1), &DimensionVector::thin(2), &AnalysisOptions::default()).unwrap();
    assert_eq!(a.basis.len(), 1);
}
