use conekit::classify::chi_tangent_twist;
use conekit::corpus;
use conekit::poly::{parse_poly, parse_ring};
use conekit::t1::{
    check_t1_symmetry, t1, t1_complete_intersection, t1_graded, t1_hypersurface, MethodChoice,
    T1Method,
};
use conekit::{Error, Field, Ideal, PrimeField};

fn fp() -> PrimeField {
    PrimeField::default()
}

#[test]
fn quartic_dimensions() {
    let i = corpus::fermat_quartic(fp());
    let start = std::time::Instant::now();
    let rep = t1(&i, -4, 4, MethodChoice::Auto).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(rep.method, T1Method::JacobianRing);
    assert_eq!(rep.dims.values(), vec![1, 4, 10, 16, 19, 16, 10, 4, 1]);
    assert_eq!(rep.center, 0);
    assert!(check_t1_symmetry(&rep, 0).unwrap().symmetric);
    // the pieces in degrees -2 and -4 together
    assert_eq!(rep.dims.get(-2).unwrap() + rep.dims.get(-4).unwrap(), 11);
    assert_eq!(rep.dims.get(1).unwrap() as i64, chi_tangent_twist(3, 1).unwrap());
}

#[test]
fn quartic_vanishes_outside() {
    let i = corpus::fermat_quartic(fp());
    let rep = t1(&i, -7, 7, MethodChoice::Auto).unwrap();
    assert_eq!(rep.dims.support(), Some((-4, 4)));
}

#[test]
fn hypersurface_methods_agree() {
    let i = corpus::fermat_quartic(fp());
    let a = t1(&i, -5, 5, MethodChoice::Hypersurface).unwrap();
    let b = t1(&i, -5, 5, MethodChoice::CompleteIntersection).unwrap();
    let c = t1(&i, -5, 5, MethodChoice::NormalModule).unwrap();
    assert_eq!(a.dims, b.dims);
    assert_eq!(a.dims, c.dims);
}

#[test]
fn cubic_curve_cone() {
    let i = corpus::fermat_cubic(fp());
    let rep = t1_hypersurface(i.ring(), &i.gens()[0], -3, 1).unwrap();
    assert_eq!(rep.dims.values(), vec![1, 3, 3, 1, 0]);
}

#[test]
fn non_isolated_is_refused() {
    let r = parse_ring("ring x0 x1 x2 x3").unwrap();
    let f = parse_poly(&r, "x0^2*x1^2 + x2^4").unwrap();
    let err = t1_hypersurface(&r, &f, -2, 2).unwrap_err();
    assert!(matches!(err, Error::NonIsolatedSingularity(_)));
}

#[test]
fn truncated_report_is_asymmetric() {
    let i = corpus::fermat_quartic(fp());
    let rep = t1(&i, -4, 2, MethodChoice::Auto).unwrap();
    assert!(matches!(
        check_t1_symmetry(&rep, 0),
        Err(Error::AsymmetricRange { .. })
    ));
}

#[test]
fn genus4_complete_intersection_cross_validated() {
    for seed in 0..3 {
        let i = corpus::k3_genus4(fp(), seed);
        let ci = t1_complete_intersection(&i, -5, 5).unwrap();
        let nm = t1_graded(&i, -5, 5).unwrap();
        assert_eq!(ci.dims, nm.dims, "seed {seed}");
        assert_eq!(ci.dims.values(), vec![0, 0, 1, 6, 14, 19, 14, 6, 1, 0, 0]);
        assert_eq!(ci.dims.get(1).unwrap() as i64, chi_tangent_twist(4, 1).unwrap());
        assert!(check_t1_symmetry(&ci, 0).unwrap().symmetric);
    }
}

#[test]
fn genus5_complete_intersection() {
    let i = corpus::k3_genus5(fp(), 3);
    let rep = t1(&i, -3, 3, MethodChoice::Auto).unwrap();
    assert_eq!(rep.method, T1Method::CompleteIntersection);
    assert_eq!(rep.dims.values(), vec![0, 3, 12, 19, 12, 3, 0]);
    assert_eq!(rep.dims.get(1).unwrap() as i64, chi_tangent_twist(5, 1).unwrap());
    let nm = t1_graded(&i, -3, 3).unwrap();
    assert_eq!(rep.dims, nm.dims);
}

#[test]
fn genus6_over_five_seeds() {
    for seed in 1..=5 {
        let i = corpus::k3_genus6(fp(), seed);
        let rep = t1(&i, -3, 3, MethodChoice::Auto).unwrap();
        assert_eq!(rep.method, T1Method::NormalModule);
        assert_eq!(rep.dims.values(), vec![0, 1, 10, 19, 10, 1, 0], "seed {seed}");
        assert_eq!(rep.center, 0);
        assert!(check_t1_symmetry(&rep, 0).unwrap().symmetric);
        assert_eq!(rep.dims.get(1).unwrap() as i64, chi_tangent_twist(6, 1).unwrap());
    }
}

#[test]
fn segre_cone_is_rigid() {
    let i = corpus::segre_p1p2(fp());
    let rep = t1_graded(&i, -3, 3).unwrap();
    assert_eq!(rep.dims.total(), 0);
}

#[test]
fn plucker_cone_is_rigid() {
    let i = corpus::plucker_gr25(fp());
    let rep = t1_graded(&i, -3, 3).unwrap();
    assert_eq!(rep.center, -5);
    assert_eq!(rep.dims.total(), 0);
}

#[test]
fn veronese_reembedding_picks_even_degrees() {
    let x = corpus::fermat_quartic(fp());
    let tx = t1(&x, -6, 6, MethodChoice::Auto).unwrap();
    let y = corpus::veronese_quartic(fp()).unwrap();
    assert_eq!(y.gens().len(), 21);
    let ty = t1(&y, -3, 3, MethodChoice::Auto).unwrap();
    assert_eq!(ty.dims, tx.dims.multiples_of(2));
    assert_eq!(ty.dims.values(), vec![0, 1, 10, 19, 10, 1, 0]);
}

#[test]
fn rescaling_generators_changes_nothing() {
    let i = corpus::k3_genus4(fp(), 7);
    let f = i.ring().field();
    let scaled: Vec<_> = i
        .gens()
        .iter()
        .enumerate()
        .map(|(k, g)| g.scale(&f.from_i64(3 + k as i64), f))
        .collect();
    let j = Ideal::new(i.ring(), scaled).unwrap();
    assert_eq!(
        t1_graded(&i, -3, 3).unwrap().dims,
        t1_graded(&j, -3, 3).unwrap().dims
    );
}
