use conekit::pfaffian::{
    deform_matrix, divisor_family, jacobian_rank_at, pfaffians_4x4, smoothness_sample, DeformMode,
    SmoothnessVerdict,
};
use conekit::{Field, Polynomial, PrimeField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn low_degree_h(
    ring: &conekit::WeightedPolyRing<PrimeField>,
    seed: u64,
    top: u64,
) -> Vec<Polynomial<PrimeField>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..3).map(|_| ring.random_poly_up_to(top, &mut rng)).collect()
}

#[test]
fn lambda_zero_stays_singular_at_origin() {
    for seed in 0..100 {
        let m = divisor_family(PrimeField::default(), 3, seed).unwrap();
        let ring = m.ring().clone();
        let h = low_degree_h(&ring, 1000 + seed, 3);
        let d = deform_matrix(&m, &0, [&h[0], &h[1], &h[2]], DeformMode::Projective).unwrap();
        let gens = pfaffians_4x4(&d).unwrap();
        let jr = jacobian_rank_at(&ring, &gens, &[0; 6]).unwrap();
        assert!(jr.on_variety, "seed {seed}");
        assert!(jr.rank <= 2, "seed {seed}: rank {}", jr.rank);
    }
}

#[test]
fn lambda_zero_sampler_reports_origin() {
    let m = divisor_family(PrimeField::default(), 3, 11).unwrap();
    let ring = m.ring().clone();
    let h = low_degree_h(&ring, 12, 3);
    let d = deform_matrix(&m, &0, [&h[0], &h[1], &h[2]], DeformMode::Projective).unwrap();
    let gens = pfaffians_4x4(&d).unwrap();
    let v = smoothness_sample(&ring, &gens, 3, 4, 1).unwrap();
    match v {
        SmoothnessVerdict::SingularWitness { point, trial, .. } => {
            assert_eq!(point, vec![0; 6]);
            assert_eq!(trial, None);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn lambda_one_samples_smooth() {
    let m = divisor_family(PrimeField::default(), 3, 21).unwrap();
    let ring = m.ring().clone();
    let h = low_degree_h(&ring, 22, 2);
    let one = ring.field().one();
    let d = deform_matrix(&m, &one, [&h[0], &h[1], &h[2]], DeformMode::Affine).unwrap();
    let gens = pfaffians_4x4(&d).unwrap();
    match smoothness_sample(&ring, &gens, 3, 150, 5).unwrap() {
        SmoothnessVerdict::SmoothSampled { points, .. } => assert!(points >= 50, "{points}"),
        other => panic!("{other:?}"),
    }
}
