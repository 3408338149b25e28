use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;
use crate::poly::Monomial;

/// Sparse polynomial: terms sorted strictly descending in the monomial
/// order, no zero coefficients.
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Clone for Polynomial<F> {
    fn clone(&self) -> Self {
        Polynomial {
            terms: self.terms.clone(),
        }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Default for Polynomial<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn from_monomial(m: Monomial, c: F::Elem) -> Self {
        Polynomial {
            terms: vec![(m, c)],
        }
    }

    /// Canonicalise an arbitrary term list: merge duplicates, drop zeros, sort.
    pub fn from_terms(field: &F, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(field, acc)
    }

    pub(crate) fn from_map(field: &F, acc: BTreeMap<Monomial, F::Elem>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Polynomial { terms }
    }

    /// Build from terms already sorted descending and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest weighted degree among the terms (`None` for zero).
    pub fn weighted_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.weighted_degree()).max()
    }

    /// Smallest standard degree among the terms.
    pub fn order(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self
                .terms
                .iter()
                .all(|(m, _)| m.weighted_degree() == m0.weighted_degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.nvars())
    }

    pub fn neg(&self, field: &F) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, field: &F) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem, field: &F) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, field: &F, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |c: &F::Elem| if negate_other { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Self, field: &F) -> Self {
        self.merge(other, field, false)
    }

    pub fn sub(&self, other: &Self, field: &F) -> Self {
        self.merge(other, field, true)
    }

    /// Product, or `None` on exponent overflow.
    pub fn checked_mul(&self, other: &Self, field: &F) -> Option<Self> {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Some(Self::from_map(field, acc))
    }

    pub fn mul(&self, other: &Self, field: &F) -> Self {
        self.checked_mul(other, field)
            .expect("monomial exponent exceeds the 16-bit limit")
    }

    pub fn checked_pow(&self, e: u32, field: &F, one: &Self) -> Option<Self> {
        let mut acc = one.clone();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base, field)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base, field)?;
            }
        }
        Some(acc)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, field: &F) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(c) if field.is_one(c) => self.clone(),
            Some(c) => {
                let ci = field.inv(c).expect("nonzero leading coefficient");
                self.scale(&ci, field)
            }
        }
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize, weights: &[u32], field: &F) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[var] > 0)
            .map(|(m, c)| {
                let e = m.exps()[var];
                let mut exps = m.exps().to_vec();
                exps[var] -= 1;
                (Monomial::new(exps, weights), field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Self::from_terms(field, terms)
    }

    pub fn evaluate(&self, point: &[F::Elem], field: &F) -> F::Elem {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = field.mul(&t, &field.pow(x, e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitute polynomial `images[i]` for variable `i`. The images live
    /// in the target ring whose constant one is `one`.
    pub fn substitute(&self, images: &[Polynomial<F>], one: &Polynomial<F>, field: &F) -> Self {
        let mut acc = Polynomial::zero();
        let mut powers: Vec<Vec<Polynomial<F>>> = images.iter().map(|_| vec![one.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = one.scale(c, field);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i], field);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize], field);
            }
            acc = acc.add(&t, field);
        }
        acc
    }

    /// Terms of weighted degree exactly `d`.
    pub fn homogeneous_part(&self, d: u64) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }
}
