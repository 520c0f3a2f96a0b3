mod support;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dissonance_core::matcore::{
    eig_hermitian, kron, partial_trace, rel_entropy, vn_entropy, ComplexMatrix, DensityMatrix,
    Party,
};
use support::oracle;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn gaussian_ish(rng: &mut ChaCha8Rng) -> f64 {
    // Sum of uniforms; only needs to be spread out, not exactly normal.
    (0..4).map(|_| rng.gen::<f64>() - 0.5).sum()
}

fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| c(gaussian_ish(rng), gaussian_ish(rng)));
    g.hermitian_part()
}

/// `G G^dagger / tr` plus a small multiple of the identity: full rank.
fn random_full_rank_state(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| c(gaussian_ish(rng), gaussian_ish(rng)));
    let gg = g.matmul(&g.adjoint());
    let shifted = &gg + &ComplexMatrix::identity(dim).scale(1e-3);
    let tr = shifted.trace().re;
    DensityMatrix::new(shifted.scale(1.0 / tr).hermitian_part(), (dim, 1)).unwrap()
}

fn bipartite(rho: DensityMatrix, dims: (usize, usize)) -> DensityMatrix {
    DensityMatrix::new(rho.into_matrix(), dims).unwrap()
}

fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    // Eigenvectors of a random Hermitian matrix form a unitary.
    eig_hermitian(&random_hermitian(rng, dim))
        .unwrap()
        .vectors()
        .clone()
}

#[test]
fn spectrum_reconstruction_and_orthonormality() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..1000 {
        let m = random_hermitian(&mut rng, 4);
        let s = eig_hermitian(&m).unwrap();
        assert!(s.reconstruct().max_abs_diff(&m) <= 1e-9);
        let v = s.vectors();
        assert!(
            v.adjoint()
                .matmul(v)
                .max_abs_diff(&ComplexMatrix::identity(4))
                <= 1e-9
        );
        assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn eigenvalues_agree_with_independent_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..200 {
        let m = random_hermitian(&mut rng, 4);
        let ours = eig_hermitian(&m).unwrap();
        let reference = oracle::hermitian4_eigenvalues(&oracle::raw_entries(&m));
        for (a, b) in ours.values().iter().zip(reference) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}

#[test]
fn larger_hermitian_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for dim in [3, 8, 16, 64] {
        let m = random_hermitian(&mut rng, dim);
        let s = eig_hermitian(&m).unwrap();
        assert!(s.reconstruct().max_abs_diff(&m) <= 1e-9, "dim {dim}");
    }
}

#[test]
fn klein_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..1000 {
        let rho = bipartite(random_full_rank_state(&mut rng, 4), (2, 2));
        let tau = bipartite(random_full_rank_state(&mut rng, 4), (2, 2));
        let s = rel_entropy(&rho, &tau).unwrap();
        assert!(s.is_finite() && s >= -1e-9, "{s}");
        assert!(rel_entropy(&rho, &rho).unwrap().abs() <= 1e-10);
    }
}

#[test]
fn relative_entropy_is_additive_over_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..1000 {
        let r1 = random_full_rank_state(&mut rng, 2);
        let r2 = random_full_rank_state(&mut rng, 2);
        let t1 = random_full_rank_state(&mut rng, 2);
        let t2 = random_full_rank_state(&mut rng, 2);
        let joint = rel_entropy(&r1.kron(&r2), &t1.kron(&t2)).unwrap();
        let sum = rel_entropy(&r1, &t1).unwrap() + rel_entropy(&r2, &t2).unwrap();
        assert!((joint - sum).abs() <= 1e-8, "{joint} vs {sum}");
    }
}

#[test]
fn entropy_is_unitarily_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..1000 {
        let rho = random_full_rank_state(&mut rng, 4);
        let u = random_unitary(&mut rng, 4);
        let rotated = rho.conjugate_by(&u);
        let (a, b) = (vn_entropy(&rho).unwrap(), vn_entropy(&rotated).unwrap());
        assert!((a - b).abs() <= 1e-9);
    }
}

#[test]
fn partial_trace_inverts_kron() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for _ in 0..1000 {
        let a = random_full_rank_state(&mut rng, 2);
        let b = random_full_rank_state(&mut rng, 2);
        let ab = a.kron(&b);
        assert!(
            partial_trace(&ab, Party::A)
                .matrix()
                .max_abs_diff(b.matrix())
                <= 1e-10
        );
        assert!(
            partial_trace(&ab, Party::B)
                .matrix()
                .max_abs_diff(a.matrix())
                <= 1e-10
        );
    }
}

#[test]
fn entropy_matches_independent_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..200 {
        let rho = random_full_rank_state(&mut rng, 4);
        let reference = oracle::entropy4(&oracle::raw_entries(rho.matrix()));
        assert!((vn_entropy(&rho).unwrap() - reference).abs() < 1e-12);
    }
}

#[test]
fn counterexample_relative_entropies() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let one_h = [c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0), c(s, 0.0)];
    let rho_m =
        &ComplexMatrix::diag(&[0.5, 0.0, 0.0, 0.0]) + &ComplexMatrix::outer(&one_h).scale(0.5);
    let rho = DensityMatrix::new(rho_m, (2, 2)).unwrap();
    let half = DensityMatrix::single(ComplexMatrix::identity(2).scale(0.5)).unwrap();
    let rho_b = DensityMatrix::single(ComplexMatrix::from_real_rows(&[
        &[0.75, 0.25],
        &[0.25, 0.25],
    ]))
    .unwrap();
    let chi_b = DensityMatrix::single(ComplexMatrix::diag(&[0.75, 0.25])).unwrap();
    let pi_sigma = half.kron(&rho_b);
    let pi_chi = half.kron(&chi_b);
    assert!((rel_entropy(&rho, &pi_sigma).unwrap() - 0.601).abs() < 1e-3);
    assert!((rel_entropy(&pi_sigma, &pi_chi).unwrap() - 0.210).abs() < 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kron_index_convention(a in prop::array::uniform4(-1.0f64..1.0), b in prop::array::uniform4(-1.0f64..1.0)) {
        let ma = ComplexMatrix::from_fn(2, |i, j| c(a[2 * i + j], 0.0));
        let mb = ComplexMatrix::from_fn(2, |i, j| c(0.0, b[2 * i + j]));
        let k = kron(&ma, &mb);
        for i in 0..2 { for j in 0..2 { for p in 0..2 { for q in 0..2 {
            prop_assert_eq!(k[(i * 2 + j, p * 2 + q)], ma[(i, p)] * mb[(j, q)]);
        }}}}
    }

    #[test]
    fn entropy_is_bounded_by_log_dimension(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_full_rank_state(&mut rng, 4);
        let s = vn_entropy(&rho).unwrap();
        prop_assert!((0.0..=2.0 + 1e-12).contains(&s));
    }
}
