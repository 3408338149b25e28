use std::collections::HashMap;

use crate::error::Result;
use crate::field::Field;
use crate::groebner::Ideal;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::poly::{Monomial, Polynomial};

/// Syzygies `(s_1, …, s_r)` with `Σ s_i f_i = 0` of one weighted degree.
/// Component `s_i` is homogeneous of degree `degree - deg f_i` (or zero).
#[derive(Debug, Clone)]
pub struct SyzygyBlock<F: Field> {
    pub degree: u64,
    pub vectors: Vec<Vec<Polynomial<F>>>,
}

/// Coordinates of `⊕_i S_{e - d_i}`: one per (generator, monomial).
struct Coords {
    list: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

fn coords<F: Field>(ideal: &Ideal<F>, degs: &[Option<u64>], e: u64) -> Coords {
    let mut list = Vec::new();
    for (i, d) in degs.iter().enumerate() {
        if let Some(d) = d {
            if *d <= e {
                for m in ideal.ring().monomials_of_degree(e - d) {
                    list.push((i, m));
                }
            }
        }
    }
    let index = list.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    Coords { list, index }
}

fn to_vector<F: Field>(c: &Coords, comps: &[Polynomial<F>]) -> SparseVec<F::Elem> {
    let mut v: SparseVec<F::Elem> = Vec::new();
    for (i, p) in comps.iter().enumerate() {
        for (m, a) in p.terms() {
            v.push((c.index[&(i, m.clone())], a.clone()));
        }
    }
    v.sort_by_key(|(k, _)| *k);
    v
}

fn from_vector<F: Field>(
    field: &F,
    c: &Coords,
    r: usize,
    v: &[(usize, F::Elem)],
) -> Vec<Polynomial<F>> {
    let mut terms: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); r];
    for (k, a) in v {
        let (i, m) = &c.list[*k];
        terms[*i].push((m.clone(), a.clone()));
    }
    terms
        .into_iter()
        .map(|t| Polynomial::from_terms(field, t))
        .collect()
}

/// Generators of the syzygy module of the ideal's generators, degree by
/// degree up to `max_degree`. Each block holds the syzygies of its degree
/// that are independent of the multiples of lower-degree blocks.
pub fn syzygy_blocks<F: Field>(ideal: &Ideal<F>, max_degree: u64) -> Result<Vec<SyzygyBlock<F>>> {
    let ring = ideal.ring();
    let field = ring.field();
    let r = ideal.gens().len();
    let degs: Vec<Option<u64>> = ideal.gens().iter().map(|g| g.weighted_degree()).collect();
    let Some(d_min) = degs.iter().flatten().min().copied() else {
        return Ok(Vec::new());
    };
    let mut blocks: Vec<SyzygyBlock<F>> = Vec::new();
    for e in d_min..=max_degree {
        let cs = coords(ideal, &degs, e);
        if cs.list.is_empty() {
            continue;
        }
        // images m * f_i in S_e
        let target: HashMap<Monomial, usize> = ring
            .monomials_of_degree(e)
            .into_iter()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        let images: Vec<SparseVec<F::Elem>> = cs
            .list
            .iter()
            .map(|(i, m)| {
                let mut v: SparseVec<F::Elem> = ideal.gens()[*i]
                    .terms()
                    .iter()
                    .map(|(t, a)| (target[&t.mul(m)], a.clone()))
                    .collect();
                v.sort_by_key(|(k, _)| *k);
                v
            })
            .collect();
        let ker = kernel(field, target.len(), &images);
        if ker.is_empty() {
            continue;
        }
        let mut span = Echelon::new(field.clone(), cs.list.len());
        for b in &blocks {
            for (j, &w) in ring.weights().iter().enumerate() {
                if b.degree + w as u64 != e {
                    continue;
                }
                let xj = ring.var_monomial(j);
                for s in &b.vectors {
                    let shifted: Vec<Polynomial<F>> = s
                        .iter()
                        .map(|p| p.mul_term(&xj, &field.one(), field))
                        .collect();
                    span.insert(&to_vector(&cs, &shifted));
                }
            }
        }
        let mut fresh = Vec::new();
        for v in ker {
            if span.insert(&v) {
                fresh.push(from_vector(field, &cs, r, &v));
            }
        }
        if !fresh.is_empty() {
            blocks.push(SyzygyBlock {
                degree: e,
                vectors: fresh,
            });
        }
    }
    Ok(blocks)
}
