use std::collections::HashMap;

use crate::field::Field;
use crate::linalg::SparseVec;
use crate::poly::{Monomial, Polynomial};

use super::GroebnerBasis;

struct Degree<E> {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    nf: HashMap<Monomial, SparseVec<E>>,
}

/// Degreewise linear model of `S/I` for a homogeneous ideal: each graded
/// piece has the standard monomials as basis, and the normal form of every
/// monomial of that degree is tabulated on first use.
pub struct QuotientRing<'a, F: Field> {
    gb: &'a GroebnerBasis<F>,
    degrees: HashMap<u64, Degree<F::Elem>>,
}

impl<'a, F: Field> QuotientRing<'a, F> {
    pub fn new(gb: &'a GroebnerBasis<F>) -> Self {
        assert!(
            gb.polys().iter().all(|p| p.is_homogeneous()),
            "quotient tables need a homogeneous ideal"
        );
        QuotientRing {
            gb,
            degrees: HashMap::new(),
        }
    }

    pub fn gb(&self) -> &'a GroebnerBasis<F> {
        self.gb
    }

    fn field(&self) -> &'a F {
        self.gb.ring().field()
    }

    fn ensure(&mut self, d: u64) {
        if self.degrees.contains_key(&d) {
            return;
        }
        let gb = self.gb;
        let field = gb.ring().field();
        let all = gb.ring().monomials_of_degree(d);
        let basis: Vec<Monomial> = all.iter().filter(|m| gb.is_standard(m)).cloned().collect();
        let index: HashMap<Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut nf: HashMap<Monomial, SparseVec<F::Elem>> = HashMap::with_capacity(all.len());
        let mut dense = vec![field.zero(); basis.len()];
        // ascending order: every monomial needed on the right is smaller
        for m in all.iter().rev() {
            if let Some(&i) = index.get(m) {
                nf.insert(m.clone(), vec![(i, field.one())]);
                continue;
            }
            let g = &gb.polys()[gb.divisor_of(m).expect("non-standard monomial")];
            let u = g.leading_monomial().unwrap().quotient_of(m);
            for (t, c) in &g.terms()[1..] {
                let ut = t.mul(&u);
                for (j, a) in &nf[&ut] {
                    dense[*j] = field.sub(&dense[*j], &field.mul(c, a));
                }
            }
            let mut v = Vec::new();
            for (j, slot) in dense.iter_mut().enumerate() {
                if !field.is_zero(slot) {
                    v.push((j, std::mem::replace(slot, field.zero())));
                }
            }
            nf.insert(m.clone(), v);
        }
        self.degrees.insert(d, Degree { basis, index, nf });
    }

    pub fn dim(&mut self, d: u64) -> usize {
        self.ensure(d);
        self.degrees[&d].basis.len()
    }

    /// Standard monomials of degree `d`, largest first.
    pub fn basis(&mut self, d: u64) -> &[Monomial] {
        self.ensure(d);
        &self.degrees[&d].basis
    }

    pub fn index_of(&mut self, m: &Monomial) -> Option<usize> {
        let d = m.weighted_degree();
        self.ensure(d);
        self.degrees[&d].index.get(m).copied()
    }

    /// Coordinates of the residue of `m`.
    pub fn nf_monomial(&mut self, m: &Monomial) -> &SparseVec<F::Elem> {
        let d = m.weighted_degree();
        self.ensure(d);
        &self.degrees[&d].nf[m]
    }

    /// Coordinates of the residue of a homogeneous polynomial of degree `d`.
    pub fn reduce(&mut self, p: &Polynomial<F>, d: u64) -> SparseVec<F::Elem> {
        self.ensure(d);
        let field = self.field();
        let deg = &self.degrees[&d];
        let mut dense = vec![field.zero(); deg.basis.len()];
        for (m, c) in p.terms() {
            debug_assert_eq!(m.weighted_degree(), d);
            for (j, a) in &deg.nf[m] {
                dense[*j] = field.add(&dense[*j], &field.mul(c, a));
            }
        }
        crate::linalg::to_sparse(field, &dense)
    }

    /// Residue of `u · v` where `v` holds coordinates in degree `d`.
    pub fn mul_monomial(&mut self, v: &[(usize, F::Elem)], d: u64, u: &Monomial) -> SparseVec<F::Elem> {
        let e = d + u.weighted_degree();
        self.ensure(d);
        self.ensure(e);
        let field = self.field();
        let src = &self.degrees[&d];
        let dst = &self.degrees[&e];
        let mut dense = vec![field.zero(); dst.basis.len()];
        for (i, c) in v {
            let m = src.basis[*i].mul(u);
            for (j, a) in &dst.nf[&m] {
                dense[*j] = field.add(&dense[*j], &field.mul(c, a));
            }
        }
        crate::linalg::to_sparse(field, &dense)
    }

    /// Residue of `p · v` for a homogeneous `p` of degree `dp`.
    pub fn mul_poly(
        &mut self,
        v: &[(usize, F::Elem)],
        d: u64,
        p: &Polynomial<F>,
        dp: u64,
    ) -> SparseVec<F::Elem> {
        let e = d + dp;
        self.ensure(d);
        self.ensure(e);
        let field = self.field();
        let src = &self.degrees[&d];
        let dst = &self.degrees[&e];
        let mut dense = vec![field.zero(); dst.basis.len()];
        for (i, c) in v {
            for (t, b) in p.terms() {
                let m = src.basis[*i].mul(t);
                let cb = field.mul(c, b);
                for (j, a) in &dst.nf[&m] {
                    dense[*j] = field.add(&dense[*j], &field.mul(&cb, a));
                }
            }
        }
        crate::linalg::to_sparse(field, &dense)
    }

    /// The polynomial (in standard monomials) with coordinates `v` in degree `d`.
    pub fn to_poly(&mut self, v: &[(usize, F::Elem)], d: u64) -> Polynomial<F> {
        self.ensure(d);
        let basis = &self.degrees[&d].basis;
        let terms = v.iter().map(|(i, c)| (basis[*i].clone(), c.clone())).collect();
        Polynomial::from_terms(self.field(), terms)
    }
}
