use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, WeightedPolyRing};

/// Default limit on the number of critical pairs ever queued.
pub const DEFAULT_PAIR_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbOptions {
    pub pair_cap: usize,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

/// Leading monomial with a bitmask of its support for quick divisibility
/// rejection.
#[derive(Debug, Clone)]
pub(crate) struct Lead {
    pub mono: Monomial,
    mask: u64,
}

pub(crate) fn support_mask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

impl Lead {
    pub fn new(mono: Monomial) -> Self {
        let mask = support_mask(&mono);
        Lead { mono, mask }
    }

    #[inline]
    pub fn divides(&self, m: &Monomial, m_mask: u64) -> bool {
        self.mask & !m_mask == 0 && self.mono.divides(m)
    }
}

/// Index of the first lead dividing `m`, restricted to `active`.
pub(crate) fn find_divisor(leads: &[Lead], active: &[bool], m: &Monomial) -> Option<usize> {
    let mask = support_mask(m);
    leads
        .iter()
        .enumerate()
        .find(|(i, l)| active[*i] && l.divides(m, mask))
        .map(|(i, _)| i)
}

/// Full reduction of `p` by the monic polynomials `basis` (only those marked
/// active). The result has no term divisible by an active leading monomial.
pub(crate) fn reduce_full<F: Field>(
    field: &F,
    p: &Polynomial<F>,
    basis: &[Polynomial<F>],
    leads: &[Lead],
    active: &[bool],
) -> Polynomial<F> {
    let mut acc: BTreeMap<Monomial, F::Elem> = p.terms().iter().cloned().collect();
    let mut rem = Vec::new();
    while let Some((m, c)) = acc.pop_last() {
        match find_divisor(leads, active, &m) {
            Some(i) => {
                let g = &basis[i];
                let u = leads[i].mono.quotient_of(&m);
                for (t, a) in &g.terms()[1..] {
                    let key = t.mul(&u);
                    let delta = field.mul(&c, a);
                    match acc.get_mut(&key) {
                        Some(v) => {
                            *v = field.sub(v, &delta);
                            if field.is_zero(v) {
                                acc.remove(&key);
                            }
                        }
                        None => {
                            acc.insert(key, field.neg(&delta));
                        }
                    }
                }
            }
            None => rem.push((m, c)),
        }
    }
    Polynomial::from_sorted_unchecked(rem)
}

fn s_polynomial<F: Field>(
    field: &F,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    lcm: &Monomial,
) -> Polynomial<F> {
    let one = field.one();
    let uf = f.leading_monomial().unwrap().quotient_of(lcm);
    let ug = g.leading_monomial().unwrap().quotient_of(lcm);
    f.mul_term(&uf, &one, field).sub(&g.mul_term(&ug, &one, field), field)
}

struct State<'a, F: Field> {
    ring: &'a WeightedPolyRing<F>,
    polys: Vec<Polynomial<F>>,
    leads: Vec<Lead>,
    active: Vec<bool>,
    pairs: BTreeSet<(Monomial, usize, usize)>,
    pairs_queued: usize,
    cap: usize,
}

impl<F: Field> State<'_, F> {
    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.leads[i]
            .mono
            .lcm(&self.leads[j].mono, self.ring.weights())
    }

    /// Gebauer–Möller update for a new basis element `h` (already reduced
    /// and monic).
    fn add(&mut self, h: Polynomial<F>) -> Result<()> {
        let hi = self.polys.len();
        let hlead = Lead::new(h.leading_monomial().unwrap().clone());
        self.polys.push(h);
        self.leads.push(hlead.clone());
        self.active.push(true);

        let mut c: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, self.lcm(g, hi)))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while !c.is_empty() {
            let (g1, l1) = c.remove(0);
            let coprime = hlead.mono.is_coprime(&self.leads[g1].mono);
            let dominated = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                d.push((g1, l1));
            }
        }
        let new_pairs: Vec<(usize, Monomial)> = d
            .into_iter()
            .filter(|(g, _)| !hlead.mono.is_coprime(&self.leads[*g].mono))
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for (l, i, j) in old {
            let drop = hlead.mono.divides(&l) && self.lcm(i, hi) != l && self.lcm(j, hi) != l;
            if !drop {
                self.pairs.insert((l, i, j));
            }
        }
        for (g, l) in new_pairs {
            self.pairs.insert((l, g, hi));
            self.pairs_queued += 1;
        }
        if self.pairs_queued > self.cap {
            return Err(Error::ResourceCap(format!(
                "Buchberger queued more than {} critical pairs",
                self.cap
            )));
        }
        for g in 0..hi {
            if self.active[g] && hlead.mono.divides(&self.leads[g].mono) {
                self.active[g] = false;
            }
        }
        Ok(())
    }

    fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        reduce_full(self.ring.field(), p, &self.polys, &self.leads, &self.active)
    }
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial) of
/// the ideal generated by `gens` under the ring's monomial order.
///
/// Works for inhomogeneous input as well; the order is degree compatible.
pub(crate) fn compute<F: Field>(
    ring: &WeightedPolyRing<F>,
    gens: &[Polynomial<F>],
    opts: GbOptions,
) -> Result<(Vec<Polynomial<F>>, usize)> {
    let field = ring.field();
    let mut st = State {
        ring,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
        pairs: BTreeSet::new(),
        pairs_queued: 0,
        cap: opts.pair_cap,
    };
    let mut input: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(field))
        .collect();
    input.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in input {
        let h = st.reduce(&g);
        if !h.is_zero() {
            st.add(h.monic(field))?;
        }
    }
    while let Some((l, i, j)) = st.pairs.pop_first() {
        let s = s_polynomial(field, &st.polys[i], &st.polys[j], &l);
        let h = st.reduce(&s);
        if !h.is_zero() {
            st.add(h.monic(field))?;
        }
    }

    // interreduce the minimal basis
    let mut basis: Vec<Polynomial<F>> = st
        .polys
        .iter()
        .zip(&st.active)
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect();
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let leads: Vec<Lead> = basis
        .iter()
        .map(|p| Lead::new(p.leading_monomial().unwrap().clone()))
        .collect();
    let all = vec![true; basis.len()];
    let reduced: Vec<Polynomial<F>> = basis
        .iter()
        .map(|p| {
            let (m, c) = p.leading_term().unwrap();
            let head = Polynomial::from_monomial(m.clone(), c.clone());
            let tail = p.sub(&head, field);
            head.add(&reduce_full(field, &tail, &basis, &leads, &all), field)
        })
        .collect();
    Ok((reduced, st.pairs_queued))
}

/// Every S-polynomial of a pair with non-coprime leading monomials reduces
/// to zero. Coprime pairs reduce to zero automatically.
pub(crate) fn verify<F: Field>(ring: &WeightedPolyRing<F>, basis: &[Polynomial<F>]) -> bool {
    let field = ring.field();
    let leads: Vec<Lead> = basis
        .iter()
        .map(|p| Lead::new(p.leading_monomial().unwrap().clone()))
        .collect();
    let all = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].mono.is_coprime(&leads[j].mono) {
                continue;
            }
            let l = leads[i].mono.lcm(&leads[j].mono, ring.weights());
            let s = s_polynomial(field, &basis[i], &basis[j], &l);
            if !reduce_full(field, &s, basis, &leads, &all).is_zero() {
                return false;
            }
        }
    }
    true
}
