//! Seeded example models: K3 surfaces of small genus, curves, and a few
//! classical determinantal varieties.
//!
//! "General" coefficients are drawn from a ChaCha stream seeded by the
//! caller, so a model is a pure function of its name, field and seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GroebnerBasis, Ideal};
use crate::linalg::{kernel, SparseVec};
use crate::pfaffian::{pfaffians_4x4, SkewMatrix};
use crate::poly::{Monomial, Polynomial, WeightedPolyRing};

pub const MODEL_NAMES: &[&str] = &[
    "fermat-quartic",
    "fermat-cubic",
    "k3-genus4",
    "k3-genus5",
    "k3-genus6",
    "plucker-gr25",
    "segre-p1p2",
    "veronese-quartic",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sum_of_powers<F: Field>(ring: &WeightedPolyRing<F>, e: u32) -> Polynomial<F> {
    let field = ring.field();
    let one = ring.one();
    (0..ring.nvars()).fold(Polynomial::zero(), |acc, i| {
        acc.add(&ring.var(i).checked_pow(e, field, &one).unwrap(), field)
    })
}

/// `x0^4 + x1^4 + x2^4 + x3^4` in ℙ³.
pub fn fermat_quartic<F: Field>(field: F) -> Ideal<F> {
    let ring = WeightedPolyRing::indexed("x", 4, field);
    let f = sum_of_powers(&ring, 4);
    Ideal::new(&ring, vec![f]).unwrap()
}

/// `x0^3 + x1^3 + x2^3` in ℙ²: a plane cubic.
pub fn fermat_cubic<F: Field>(field: F) -> Ideal<F> {
    let ring = WeightedPolyRing::indexed("x", 3, field);
    let f = sum_of_powers(&ring, 3);
    Ideal::new(&ring, vec![f]).unwrap()
}

/// Genus 4: the Fermat cubic in ℙ⁴ intersected with a random quadric.
pub fn k3_genus4<F: Field>(field: F, seed: u64) -> Ideal<F> {
    let ring = WeightedPolyRing::indexed("x", 5, field);
    let mut r = rng(seed);
    let q = ring.random_form(2, &mut r);
    let c = sum_of_powers(&ring, 3);
    Ideal::new(&ring, vec![q, c]).unwrap()
}

/// Genus 5: three random quadrics in ℙ⁵.
pub fn k3_genus5<F: Field>(field: F, seed: u64) -> Ideal<F> {
    let ring = WeightedPolyRing::indexed("x", 6, field);
    let mut r = rng(seed);
    let gens = (0..3).map(|_| ring.random_form(2, &mut r)).collect();
    Ideal::new(&ring, gens).unwrap()
}

/// Random 5×5 skew matrix of linear forms.
pub fn random_linear_skew<F: Field>(ring: &WeightedPolyRing<F>, seed: u64) -> SkewMatrix<F> {
    let mut r = rng(seed);
    let entries = (0..10).map(|_| ring.random_form(1, &mut r)).collect();
    SkewMatrix::new(ring, 5, entries).unwrap()
}

/// Genus 6: the 4×4 Pfaffians of a random 5×5 skew matrix of linear forms
/// on ℙ⁶ (a linear section of Gr(2,5)) and one random quadric.
pub fn k3_genus6<F: Field>(field: F, seed: u64) -> Ideal<F> {
    let ring = WeightedPolyRing::indexed("x", 7, field);
    let m = random_linear_skew(&ring, seed);
    let mut gens = pfaffians_4x4(&m).unwrap();
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    gens.push(ring.random_form(2, &mut r));
    Ideal::new(&ring, gens).unwrap()
}

/// Plücker quadrics of Gr(2,5) in ℙ⁹ (coordinates `p01 … p34`).
pub fn plucker_gr25<F: Field>(field: F) -> Ideal<F> {
    let mut names = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            names.push(format!("p{i}{j}"));
        }
    }
    let ring = WeightedPolyRing::standard(&names, field).unwrap();
    let entries = (0..10).map(|i| ring.var(i)).collect();
    let m = SkewMatrix::new(&ring, 5, entries).unwrap();
    Ideal::new(&ring, pfaffians_4x4(&m).unwrap()).unwrap()
}

/// The 2×2 minors of `[[x1 x2 x3] [x4 x5 x6]]`: the Segre ℙ¹×ℙ² in ℙ⁵.
pub fn segre_p1p2<F: Field>(field: F) -> Ideal<F> {
    let ring = WeightedPolyRing::standard(&["x1", "x2", "x3", "x4", "x5", "x6"], field).unwrap();
    let v = |i: usize| ring.var(i);
    let f = ring.field();
    let minor = |a: usize, b: usize, c: usize, d: usize| v(a).mul(&v(b), f).sub(&v(c).mul(&v(d), f), f);
    let gens = vec![minor(0, 4, 1, 3), minor(0, 5, 2, 3), minor(1, 5, 2, 4)];
    Ideal::new(&ring, gens).unwrap()
}

/// The Fermat quartic surface re-embedded by twice its hyperplane class:
/// the quadrics in the 10 coordinates `y_m` (one per quadratic monomial
/// `m` in `x0..x3`) vanishing on the image.
pub fn veronese_quartic<F: Field>(field: F) -> Result<Ideal<F>> {
    let x = fermat_quartic(field.clone());
    let xr = x.ring().clone();
    let gb: &GroebnerBasis<F> = x.gb()?;
    let quads = xr.monomials_of_degree(2);
    let names: Vec<String> = quads
        .iter()
        .map(|m| {
            let e = m.exps();
            let mut s = String::from("y");
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    s.push_str(&i.to_string());
                }
            }
            s
        })
        .collect();
    let yr = WeightedPolyRing::standard(&names, field.clone())?;
    let ymons = yr.monomials_of_degree(2);
    let target = gb.standard_monomials(4);
    let index: std::collections::HashMap<Monomial, usize> =
        target.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let images: Vec<SparseVec<F::Elem>> = ymons
        .iter()
        .map(|ym| {
            let mut xm = xr.one_monomial();
            for (i, &e) in ym.exps().iter().enumerate() {
                for _ in 0..e {
                    xm = xm.mul(&quads[i]);
                }
            }
            let nf = gb
                .normal_form(&Polynomial::from_monomial(xm, field.one()))
                .unwrap();
            let mut v: SparseVec<F::Elem> = nf
                .terms()
                .iter()
                .map(|(m, c)| (index[m], c.clone()))
                .collect();
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect();
    let rels = kernel(&field, target.len(), &images);
    let gens = rels
        .into_iter()
        .map(|v| {
            let terms = v.into_iter().map(|(i, c)| (ymons[i].clone(), c)).collect();
            Polynomial::from_terms(&field, terms)
        })
        .collect();
    Ideal::new(&yr, gens)
}

/// Build a named model.
pub fn model<F: Field>(name: &str, field: F, seed: u64) -> Result<Ideal<F>> {
    Ok(match name {
        "fermat-quartic" => fermat_quartic(field),
        "fermat-cubic" => fermat_cubic(field),
        "k3-genus4" => k3_genus4(field, seed),
        "k3-genus5" => k3_genus5(field, seed),
        "k3-genus6" => k3_genus6(field, seed),
        "plucker-gr25" => plucker_gr25(field),
        "segre-p1p2" => segre_p1p2(field),
        "veronese-quartic" => veronese_quartic(field)?,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown model '{other}' (known: {})",
                MODEL_NAMES.join(", ")
            )))
        }
    })
}
