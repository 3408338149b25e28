//! Gröbner bases, normal forms, standard monomials and Hilbert functions.

mod buchberger;
pub mod hilbert;
mod quotient;

use std::sync::OnceLock;

pub use buchberger::{GbOptions, DEFAULT_PAIR_CAP};
pub use quotient::QuotientRing;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{GradedDims, Monomial, Polynomial, WeightedPolyRing};
use buchberger::{find_divisor, reduce_full, Lead};

/// Tag recorded in reports for the fixed monomial order.
pub const ORDER_NAME: &str = "weighted grevlex";

/// Reduced Gröbner basis under the weighted graded reverse lexicographic
/// order. Elements are monic and sorted by increasing leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: WeightedPolyRing<F>,
    polys: Vec<Polynomial<F>>,
    leads: Vec<Lead>,
    pairs_queued: usize,
}

impl<F: Field> GroebnerBasis<F> {
    /// Run Buchberger's algorithm on arbitrary (possibly inhomogeneous)
    /// generators.
    pub fn compute(
        ring: &WeightedPolyRing<F>,
        gens: &[Polynomial<F>],
        opts: GbOptions,
    ) -> Result<Self> {
        for g in gens {
            check_nvars(ring, g)?;
        }
        let (polys, pairs_queued) = buchberger::compute(ring, gens, opts)?;
        assert!(
            buchberger::verify(ring, &polys),
            "internal error: basis fails the S-polynomial check"
        );
        let leads = polys
            .iter()
            .map(|p| Lead::new(p.leading_monomial().unwrap().clone()))
            .collect();
        Ok(GroebnerBasis {
            ring: ring.clone(),
            polys,
            leads,
            pairs_queued,
        })
    }

    pub fn ring(&self) -> &WeightedPolyRing<F> {
        &self.ring
    }

    pub fn order(&self) -> &'static str {
        ORDER_NAME
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of critical pairs queued while computing the basis.
    pub fn pairs_queued(&self) -> usize {
        self.pairs_queued
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.leads.iter().map(|l| &l.mono).collect()
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|l| l.mono.is_one())
    }

    pub(crate) fn divisor_of(&self, m: &Monomial) -> Option<usize> {
        let all = vec![true; self.leads.len()];
        find_divisor(&self.leads, &all, m)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.divisor_of(m).is_none()
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        check_nvars(&self.ring, p)?;
        let all = vec![true; self.leads.len()];
        Ok(reduce_full(self.ring.field(), p, &self.polys, &self.leads, &all))
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Monomials of weighted degree `d` outside the initial ideal, largest
    /// first.
    pub fn standard_monomials(&self, d: u64) -> Vec<Monomial> {
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect()
    }

    /// Numerator of the Hilbert series of `S/I` over `Π (1 - t^{w_i})`.
    pub fn hilbert_numerator(&self) -> hilbert::TPoly {
        let gens: Vec<Vec<u16>> = self.leads.iter().map(|l| l.mono.exps().to_vec()).collect();
        hilbert::numerator(&gens, self.ring.weights())
    }

    /// Dimensions of `(S/I)_d` for `d_min <= d <= d_max`.
    pub fn hilbert_function(&self, d_min: u64, d_max: u64) -> Result<GradedDims> {
        if d_min > d_max {
            return Err(Error::InvalidArgument(format!(
                "empty degree range {d_min}..{d_max}"
            )));
        }
        let series = hilbert::expand(
            &self.hilbert_numerator(),
            self.ring.weights(),
            d_max as usize,
        );
        let values = series[d_min as usize..]
            .iter()
            .map(|&v| u64::try_from(v).expect("Hilbert function is non-negative"))
            .collect();
        Ok(GradedDims::from_values(d_min as i64, values))
    }

    /// Krull dimension of `S/I` (`-1` for the unit ideal).
    pub fn krull_dimension(&self) -> i64 {
        match hilbert::order_at_one(&self.hilbert_numerator()) {
            None => -1,
            Some(k) => self.ring.nvars() as i64 - k as i64,
        }
    }

    /// `S/I` is finite dimensional: every variable has a pure power among
    /// the leading monomials.
    pub fn is_artinian(&self) -> bool {
        (0..self.ring.nvars()).all(|i| {
            self.leads.iter().any(|l| {
                let e = l.mono.exps();
                e[i] > 0 && e.iter().enumerate().all(|(j, &x)| j == i || x == 0)
            })
        })
    }

    /// Largest weighted degree of the lcm of a pair of leading monomials
    /// that is not coprime and not redundant by the chain criterion (0 if
    /// there is none).
    ///
    /// Lifting the pair syzygies of the leading monomials generates the
    /// syzygies of the basis; coprime pairs lift to Koszul syzygies. So every
    /// syzygy of a generating set of `I` is, modulo Koszul syzygies of that
    /// set, generated in degrees up to the maximum of this bound and the
    /// generator degrees.
    pub fn essential_pair_degree(&self) -> u64 {
        let w = self.ring.weights();
        let n = self.leads.len();
        let mut best = 0;
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.leads[i].mono, &self.leads[j].mono);
                if a.is_coprime(b) {
                    continue;
                }
                let l = a.lcm(b, w);
                if l.weighted_degree() <= best {
                    continue;
                }
                let redundant = (0..n).any(|k| {
                    k != i
                        && k != j
                        && self.leads[k].mono.divides(&l)
                        && a.lcm(&self.leads[k].mono, w) != l
                        && b.lcm(&self.leads[k].mono, w) != l
                });
                if !redundant {
                    best = l.weighted_degree();
                }
            }
        }
        best
    }
}

fn check_nvars<F: Field>(ring: &WeightedPolyRing<F>, p: &Polynomial<F>) -> Result<()> {
    match p.nvars() {
        Some(n) if n != ring.nvars() => Err(Error::RingMismatch(format!(
            "polynomial has {n} variables, ring has {}",
            ring.nvars()
        ))),
        _ => Ok(()),
    }
}

/// Homogeneous ideal with its generators in the given order and a lazily
/// computed Gröbner basis.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: WeightedPolyRing<F>,
    gens: Vec<Polynomial<F>>,
    opts: GbOptions,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            opts: self.opts,
            gb,
        }
    }
}

impl<F: Field> Ideal<F> {
    /// Generators must be homogeneous for the ring's weights. Zero
    /// generators are kept (generator order matters to callers).
    pub fn new(ring: &WeightedPolyRing<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            check_nvars(ring, g)?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!(
                    "generator {} ({})",
                    i + 1,
                    ring.format_poly(g)
                )));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            opts: GbOptions::default(),
            gb: OnceLock::new(),
        })
    }

    pub fn with_options(mut self, opts: GbOptions) -> Self {
        self.opts = opts;
        self.gb = OnceLock::new();
        self
    }

    pub fn ring(&self) -> &WeightedPolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Nonzero generators with their weighted degrees.
    pub fn graded_gens(&self) -> Vec<(&Polynomial<F>, u64)> {
        self.gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| (g, g.weighted_degree().unwrap()))
            .collect()
    }

    pub fn gb(&self) -> Result<&GroebnerBasis<F>> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = GroebnerBasis::compute(&self.ring, &self.gens, self.opts)?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{parse_poly, parse_ring};

    fn ideal(ring: &str, gens: &[&str]) -> Ideal<PrimeField> {
        let r = parse_ring(ring).unwrap();
        let g = gens.iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        Ideal::new(&r, g).unwrap()
    }

    #[test]
    fn one_step_example() {
        let i = ideal("ring x y", &["x^2+y^2", "x*y"]);
        let gb = i.gb().unwrap();
        let r = i.ring();
        let printed: Vec<String> = gb.polys().iter().map(|p| r.format_poly(p)).collect();
        assert_eq!(printed, vec!["x*y", "x^2 + y^2", "y^3"]);
        let x2y = parse_poly(r, "x^2*y").unwrap();
        assert!(gb.normal_form(&x2y).unwrap().is_zero());
        assert_eq!(gb.normal_form(&r.one()).unwrap(), r.one());
    }

    #[test]
    fn principal_basis() {
        let i = ideal("ring x0 x1 x2 x3", &["x0^4+x1^4+x2^4+x3^4"]);
        let gb = i.gb().unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.polys()[0], i.gens()[0]);
        assert_eq!(gb.hilbert_function(4, 4).unwrap().get(4), Some(34));
        assert_eq!(gb.krull_dimension(), 3);
    }

    #[test]
    fn jacobian_of_quartic() {
        let i = ideal("ring x0 x1 x2 x3", &["x0^3", "x1^3", "x2^3", "x3^3"]);
        let gb = i.gb().unwrap();
        assert_eq!(gb.standard_monomials(4).len(), 19);
        assert_eq!(
            gb.hilbert_function(0, 8).unwrap().values(),
            vec![1, 4, 10, 16, 19, 16, 10, 4, 1]
        );
        assert!(gb.is_artinian());
        assert_eq!(gb.krull_dimension(), 0);
    }

    #[test]
    fn squares_in_three_variables() {
        let i = ideal("ring x y z", &["x^2", "y^2", "z^2"]);
        let hf = i.gb().unwrap().hilbert_function(0, 4).unwrap();
        assert_eq!(hf.values(), vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn colength_three() {
        let i = ideal("ring x y", &["x^2", "x*y", "y^2"]);
        let gb = i.gb().unwrap();
        assert_eq!(gb.standard_monomials(1).len(), 2);
        assert!(gb.standard_monomials(2).is_empty());
        assert_eq!(gb.standard_monomials(0).len(), 1);
    }

    #[test]
    fn segre_hilbert_function() {
        let i = ideal(
            "ring x1 x2 x3 x4 x5 x6",
            &["x1*x5-x2*x4", "x1*x6-x3*x4", "x2*x6-x3*x5"],
        );
        let gb = i.gb().unwrap();
        // P1 x P2 in the Segre embedding: h(d) = (d+1)(d+1)(d+2)/2
        let hf = gb.hilbert_function(0, 6).unwrap();
        for d in 0..=6u64 {
            assert_eq!(hf.get(d as i64), Some((d + 1) * (d + 1) * (d + 2) / 2));
        }
        assert_eq!(gb.krull_dimension(), 4);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = parse_ring("ring x y").unwrap();
        let f = parse_poly(&r, "x+y^2").unwrap();
        assert!(matches!(Ideal::new(&r, vec![f]), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn pair_cap_is_enforced() {
        let i = ideal("ring x y z", &["x^2+y*z", "y^2+x*z", "z^2+x*y", "x*y*z"])
            .with_options(GbOptions { pair_cap: 1 });
        assert!(matches!(i.gb(), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn inhomogeneous_basis() {
        let r = parse_ring("ring x y").unwrap();
        let gens = vec![
            parse_poly(&r, "x^2 - 1").unwrap(),
            parse_poly(&r, "y - x").unwrap(),
        ];
        let gb = GroebnerBasis::compute(&r, &gens, GbOptions::default()).unwrap();
        let p = parse_poly(&r, "y^2 - 1").unwrap();
        assert!(gb.contains(&p).unwrap());
        assert_eq!(gb.krull_dimension(), 0);
    }
}
