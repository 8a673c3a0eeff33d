use mubkit::algebra::{flat_matrix_for, mols_from_field, FieldTable, HadamardMode};
use mubkit::apps::{maassen_uffink_bound, mub_sift_error, outcome_entropy};
use mubkit::designs::{intersection_profile, resolvable_transversal_design};
use mubkit::linalg::{overlap_table, random_basis, random_state, Basis, CVector};
use mubkit::measures::{
    bengtsson_table, frame_potential, gamma_squared_geometric, gamma_squared_table, magnitude_power_sum, sigma_table,
    sym_dim, tau_table, traceless_dot, traceless_dot_explicit,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pair(d: usize, seed: u64) -> (Basis<f64>, Basis<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (random_basis(d, &mut rng), random_basis(d, &mut rng))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn overlap_rows_and_columns_are_normalized(d in 2usize..12, seed: u64) {
        let (a, b) = pair(d, seed);
        let t = overlap_table(&a, &b).unwrap();
        for s in t.row_square_sums().into_iter().chain(t.column_square_sums()) {
            prop_assert!((s - 1.0).abs() < 1e-9);
        }
        let total: f64 = t.values().iter().map(|x| x * x).sum();
        prop_assert!((total - d as f64).abs() < 1e-9);
        let back = overlap_table(&b, &a).unwrap();
        prop_assert!(t.transpose().values().iter().zip(back.values()).all(|(x, y)| (x - y).abs() < 1e-12));
    }

    // exponents 2 + δ < 0 are unbounded as overlaps approach zero
    #[test]
    fn power_sums_stay_in_the_symmetric_interval(d in 2usize..12, seed: u64, delta in -2.0f64..3.0) {
        let (a, b) = pair(d, seed);
        let t = overlap_table(&a, &b).unwrap();
        let v = magnitude_power_sum(&t, 2.0 + delta);
        let df = d as f64;
        let (lo, hi) = (df.powf(1.0 - delta.abs() / 2.0), df.powf(1.0 + delta.abs() / 2.0));
        prop_assert!(v >= lo * (1.0 - 1e-9) && v <= hi * (1.0 + 1e-9), "{v} not in [{lo}, {hi}]");
    }

    #[test]
    fn distance_relations(d in 2usize..12, seed: u64) {
        let (a, b) = pair(d, seed);
        let t = overlap_table(&a, &b).unwrap();
        let (tau, sigma, d2) = (tau_table(&t), sigma_table(&t), bengtsson_table(&t));
        let df = d as f64;
        prop_assert!(sigma <= tau + 1e-12);
        prop_assert!((-1e-9..=1.0 + 1e-9).contains(&d2));
        let s2 = sigma * sigma;
        prop_assert!(d2 >= 1.0 - (df + df.sqrt()).powi(2) / (df - 1.0) * s2 - 1e-9);
        prop_assert!(d2 <= 1.0 - df / (df - 1.0) * s2 + 1e-9);
        let g = gamma_squared_table(&t);
        prop_assert!((g - gamma_squared_geometric(&a, &b).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn traceless_dot_forms_agree(d in 2usize..10, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u: CVector<f64> = random_state(d, &mut rng);
        let v: CVector<f64> = random_state(d, &mut rng);
        prop_assert!((traceless_dot(&u, &v).unwrap() - traceless_dot_explicit(&u, &v).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn frame_potential_respects_welch_bound(d in 2usize..6, n in 1usize..12, t in 1u32..4, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vs: Vec<CVector<f64>> = (0..n).map(|_| random_state(d, &mut rng)).collect();
        let phi = frame_potential(&vs, t).unwrap();
        prop_assert!(phi >= 1.0 / sym_dim(d, t as usize).unwrap() as f64 - 1e-9);
    }

    #[test]
    fn entropic_bound_holds(d in 2usize..10, seed: u64) {
        let (a, b) = pair(d, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let s: CVector<f64> = random_state(d, &mut rng);
        let avg = 0.5 * (outcome_entropy(&s, &a).unwrap() + outcome_entropy(&s, &b).unwrap());
        prop_assert!(avg >= maassen_uffink_bound(&a, &b).unwrap() - 1e-12);
    }

    #[test]
    fn flat_matrices_are_unitary_and_flat(n in 1usize..48) {
        let m = flat_matrix_for::<f64>(n, HadamardMode::PreferReal).unwrap();
        prop_assert_eq!(m.order(), n);
        prop_assert!(m.unitarity_residual() < 1e-9);
        prop_assert!(m.flatness_residual() < 1e-12);
    }

    #[test]
    fn field_arithmetic(q in prop::sample::select(vec![2usize, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49]), a: usize, b: usize, c: usize) {
        let f = FieldTable::new(q).unwrap();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn transversal_designs_have_unit_intersections(s in prop::sample::select(vec![3usize, 4, 5, 7, 8, 9]), k0: usize) {
        let k = 2 + k0 % (s - 1);
        let d = resolvable_transversal_design(k, s).unwrap();
        prop_assert_eq!(d.point_count(), k * s);
        prop_assert_eq!(d.block_size(), Some(k));
        prop_assert_eq!(intersection_profile(&d).mu, 1);
    }
}

#[test]
fn mols_are_pairwise_orthogonal() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let squares = mols_from_field(q).unwrap();
        assert_eq!(squares.len(), q - 1);
        for (i, a) in squares.iter().enumerate() {
            assert!(a.is_latin());
            for b in &squares[i + 1..] {
                assert!(a.is_orthogonal_to(b));
            }
        }
    }
}

#[test]
fn sift_error_increases_in_d_and_k() {
    for d in 2..=16 {
        for k in 2..=16 {
            let e = mub_sift_error(d, k).unwrap();
            assert!(mub_sift_error(d + 1, k).unwrap() > e);
            assert!(mub_sift_error(d, k + 1).unwrap() > e);
        }
    }
}
