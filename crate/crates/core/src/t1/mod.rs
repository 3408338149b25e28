//! Graded pieces of T¹ for the affine cone `Spec S/I`.
//!
//! Three methods: the Jacobian ring of a hypersurface, the cokernel of the
//! Jacobian map for a complete intersection, and degreewise linear algebra
//! on `Hom(I/I², S/I)` modulo derivations for arbitrary ideals.

pub mod reference;
mod syzygy;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use syzygy::{syzygy_blocks, SyzygyBlock};

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Field};
use crate::groebner::{GroebnerBasis, Ideal, QuotientRing};
use crate::linalg::{rank, SparseVec};
use crate::poly::{GradedDims, Polynomial, WeightedPolyRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum T1Method {
    JacobianRing,
    CompleteIntersection,
    NormalModule,
}

impl fmt::Display for T1Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            T1Method::JacobianRing => "JacobianRing",
            T1Method::CompleteIntersection => "CompleteIntersection",
            T1Method::NormalModule => "NormalModule",
        };
        f.write_str(s)
    }
}

/// Method requested by a caller; `Auto` picks the cheapest applicable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Hypersurface,
    CompleteIntersection,
    NormalModule,
}

impl std::str::FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "hyp" | "hypersurface" => Ok(MethodChoice::Hypersurface),
            "ci" => Ok(MethodChoice::CompleteIntersection),
            "normal" => Ok(MethodChoice::NormalModule),
            other => Err(Error::InvalidArgument(format!(
                "unknown method '{other}' (expected auto, hyp, ci or normal)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Report {
    pub dims: GradedDims,
    pub method: T1Method,
    pub field: CoefficientField,
    pub seed: Option<u64>,
    /// The twist `c` with canonical module `O(c)` (the a-invariant of `S/I`).
    pub center: i64,
    /// Highest syzygy degree used by the normal-module method.
    pub syzygy_bound: Option<u64>,
}

impl T1Report {
    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }
}

/// Outcome of a symmetry check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryCheck {
    pub symmetric: bool,
    /// Smallest offset `j > 0` with `T¹(c-j) != T¹(c+j)`, reported as the
    /// degree `c+j`.
    pub first_violation: Option<i64>,
}

fn check_range(k_min: i64, k_max: i64) -> Result<()> {
    if k_min > k_max {
        return Err(Error::InvalidArgument(format!(
            "empty degree range {k_min}..{k_max}"
        )));
    }
    Ok(())
}

/// `deg N(t) - Σ w_i` for the Hilbert series numerator of `S/I`.
pub fn a_invariant<F: Field>(gb: &GroebnerBasis<F>) -> i64 {
    let n = gb.hilbert_numerator();
    let deg = n.iter().rposition(|&c| c != 0).unwrap_or(0) as i64;
    deg - gb.ring().weights().iter().map(|&w| w as i64).sum::<i64>()
}

/// Matrix of partial derivatives, one row per generator.
pub fn jacobian_matrix<F: Field>(
    ring: &WeightedPolyRing<F>,
    gens: &[Polynomial<F>],
) -> Vec<Vec<Polynomial<F>>> {
    gens.iter()
        .map(|f| {
            (0..ring.nvars())
                .map(|j| f.derivative(j, ring.weights(), ring.field()))
                .collect()
        })
        .collect()
}

/// All `r × r` minors of an `r × n` polynomial matrix (`r <= n`), in
/// lexicographic order of the column subsets.
pub fn maximal_minors<F: Field>(field: &F, m: &[Vec<Polynomial<F>>]) -> Vec<Polynomial<F>> {
    let r = m.len();
    if r == 0 {
        return Vec::new();
    }
    let n = m[0].len();
    // minors of the first t rows, keyed by column subset
    let mut level: HashMap<Vec<usize>, Polynomial<F>> = (0..n)
        .map(|j| (vec![j], m[0][j].clone()))
        .collect();
    for (t, row) in m.iter().enumerate().skip(1) {
        let mut next: HashMap<Vec<usize>, Polynomial<F>> = HashMap::new();
        for subset in subsets(n, t + 1) {
            let mut acc = Polynomial::zero();
            for (pos, &col) in subset.iter().enumerate() {
                if row[col].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = subset.iter().copied().filter(|&c| c != col).collect();
                let sub = &level[&rest];
                if sub.is_zero() {
                    continue;
                }
                let term = row[col].mul(sub, field);
                // expansion along the last row: sign (-1)^(t + pos)
                if (t + pos) % 2 == 0 {
                    acc = acc.add(&term, field);
                } else {
                    acc = acc.sub(&term, field);
                }
            }
            next.insert(subset, acc);
        }
        level = next;
    }
    subsets(n, r).into_iter().map(|s| level.remove(&s).unwrap()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The vertex is the only singular point of the cone: the ideal plus the
/// `c × c` minors of the Jacobian matrix (with `c` the codimension of
/// `V(I)`) is primary to the irrelevant ideal.
pub fn has_isolated_singularity<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let ring = ideal.ring();
    let gb = ideal.gb()?;
    let c = ring.nvars() as i64 - gb.krull_dimension();
    if c <= 0 {
        return Ok(true);
    }
    let gens: Vec<Polynomial<F>> = ideal.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    let jac = jacobian_matrix(ring, &gens);
    let mut all = gens.clone();
    for rows in subsets(gens.len(), c as usize) {
        let sub: Vec<Vec<Polynomial<F>>> = rows.iter().map(|&i| jac[i].clone()).collect();
        all.extend(maximal_minors(ring.field(), &sub));
    }
    let sing = GroebnerBasis::compute(ring, &all, Default::default())?;
    Ok(sing.is_artinian())
}

fn dim_at(q: &mut QuotientRing<'_, impl Field>, d: i64) -> usize {
    if d < 0 {
        0
    } else {
        q.dim(d as u64)
    }
}

/// Nonzero generators with degrees; errors on zero generators.
fn generator_degrees<F: Field>(ideal: &Ideal<F>) -> Result<Vec<i64>> {
    ideal
        .gens()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.weighted_degree().map(|d| d as i64).ok_or_else(|| {
                Error::InvalidArgument(format!("generator {} is zero", i + 1))
            })
        })
        .collect()
}

/// Images of the derivations `h ∂_j` of degree `k` in `⊕_i (S/I)_{d_i+k}`.
fn derivation_image<F: Field>(
    q: &mut QuotientRing<'_, F>,
    partials: &[Vec<Polynomial<F>>],
    degs: &[i64],
    offsets: &[usize],
    k: i64,
) -> Vec<SparseVec<F::Elem>> {
    let ring = q.gb().ring().clone();
    let field = ring.field();
    let mut out = Vec::new();
    for (j, &w) in ring.weights().iter().enumerate() {
        let hd = w as i64 + k;
        if hd < 0 {
            continue;
        }
        let hbasis = q.dim(hd as u64);
        for h in 0..hbasis {
            let mut v: SparseVec<F::Elem> = Vec::new();
            for (i, &d) in degs.iter().enumerate() {
                let p = &partials[i][j];
                if p.is_zero() || d + k < 0 {
                    continue;
                }
                let img = q.mul_poly(&[(h, field.one())], hd as u64, p, (d - w as i64) as u64);
                v.extend(img.into_iter().map(|(c, a)| (c + offsets[i], a)));
            }
            if !v.is_empty() {
                out.push(v);
            }
        }
    }
    out
}

fn block_offsets(q: &mut QuotientRing<'_, impl Field>, degs: &[i64], k: i64) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(degs.len());
    let mut total = 0;
    for &d in degs {
        offsets.push(total);
        total += dim_at(q, d + k);
    }
    (offsets, total)
}

/// T¹ of a hypersurface cone from its Jacobian ring.
pub fn t1_hypersurface<F: Field>(
    ring: &WeightedPolyRing<F>,
    f: &Polynomial<F>,
    k_min: i64,
    k_max: i64,
) -> Result<T1Report> {
    check_range(k_min, k_max)?;
    let ideal = Ideal::new(ring, vec![f.clone()])?;
    let d = match f.weighted_degree() {
        Some(d) if d > 0 => d as i64,
        _ => {
            return Err(Error::InvalidArgument(
                "hypersurface equation must be nonconstant".into(),
            ))
        }
    };
    let mut gens = vec![f.clone()];
    gens.extend(jacobian_matrix(ring, std::slice::from_ref(f)).remove(0));
    let jac = GroebnerBasis::compute(ring, &gens, Default::default())?;
    if !jac.is_artinian() {
        return Err(Error::NonIsolatedSingularity(
            "the Jacobian ideal has infinite colength".into(),
        ));
    }
    let top = (k_max + d).max(0) as u64;
    let hf = jac.hilbert_function(0, top)?;
    let values = (k_min..=k_max)
        .map(|k| if k + d < 0 { 0 } else { hf.get(k + d).unwrap() })
        .collect();
    Ok(T1Report {
        dims: GradedDims::from_values(k_min, values),
        method: T1Method::JacobianRing,
        field: ring.field().descriptor(),
        seed: None,
        center: a_invariant(ideal.gb()?),
        syzygy_bound: None,
    })
}

/// True when the generators form a regular sequence (codimension equals
/// the number of generators).
pub fn is_regular_sequence<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let gb = ideal.gb()?;
    if gb.is_unit() || ideal.gens().iter().any(|g| g.is_zero()) {
        return Ok(false);
    }
    let codim = ideal.ring().nvars() as i64 - gb.krull_dimension();
    Ok(codim == ideal.gens().len() as i64)
}

/// T¹ of a complete intersection cone as the cokernel of the Jacobian map
/// `⊕_j (S/I)_{w_j+k} → ⊕_i (S/I)_{d_i+k}`.
pub fn t1_complete_intersection<F: Field>(ideal: &Ideal<F>, k_min: i64, k_max: i64) -> Result<T1Report> {
    check_range(k_min, k_max)?;
    let degs = generator_degrees(ideal)?;
    if !is_regular_sequence(ideal)? {
        return Err(Error::NotRegularSequence(format!(
            "{} generators but codimension {}",
            degs.len(),
            ideal.ring().nvars() as i64 - ideal.gb()?.krull_dimension()
        )));
    }
    if !has_isolated_singularity(ideal)? {
        return Err(Error::NonIsolatedSingularity(
            "the singular locus of the cone is more than the vertex".into(),
        ));
    }
    let ring = ideal.ring();
    let gb = ideal.gb()?;
    let partials = jacobian_matrix(ring, ideal.gens());
    let mut q = QuotientRing::new(gb);
    let mut values = Vec::new();
    for k in k_min..=k_max {
        let (offsets, n) = block_offsets(&mut q, &degs, k);
        let d = derivation_image(&mut q, &partials, &degs, &offsets, k);
        values.push((n - rank(ring.field(), n, &d)) as u64);
    }
    Ok(T1Report {
        dims: GradedDims::from_values(k_min, values),
        method: T1Method::CompleteIntersection,
        field: ring.field().descriptor(),
        seed: None,
        center: a_invariant(gb),
        syzygy_bound: None,
    })
}

/// Degree up to which syzygies are generated (modulo Koszul syzygies).
pub fn syzygy_degree_bound<F: Field>(ideal: &Ideal<F>) -> Result<u64> {
    let gb = ideal.gb()?;
    let dmax = ideal.gens().iter().filter_map(|g| g.weighted_degree()).max().unwrap_or(0);
    Ok(dmax.max(gb.essential_pair_degree()))
}

/// T¹ for an arbitrary homogeneous ideal: degree-`k` homomorphisms
/// `I/I² → S/I` modulo the image of the derivations.
pub fn t1_graded<F: Field>(ideal: &Ideal<F>, k_min: i64, k_max: i64) -> Result<T1Report> {
    check_range(k_min, k_max)?;
    let degs = generator_degrees(ideal)?;
    let ring = ideal.ring();
    let field = ring.field();
    let bound = syzygy_degree_bound(ideal)?;
    let blocks = syzygy_blocks(ideal, bound)?;
    let gb = ideal.gb()?;
    let partials = jacobian_matrix(ring, ideal.gens());
    let mut q = QuotientRing::new(gb);
    let mut values = Vec::new();
    for k in k_min..=k_max {
        let (offsets, n) = block_offsets(&mut q, &degs, k);
        if n == 0 {
            values.push(0);
            continue;
        }
        // condition space: one copy of (S/I)_{e+k} per syzygy of degree e
        let mut syz_offsets = Vec::new();
        let mut len = 0usize;
        for b in &blocks {
            for _ in &b.vectors {
                syz_offsets.push(len);
                len += dim_at(&mut q, b.degree as i64 + k);
            }
        }
        let mut cond: Vec<SparseVec<F::Elem>> = Vec::with_capacity(n);
        for (i, &d) in degs.iter().enumerate() {
            if d + k < 0 {
                continue;
            }
            let dim = q.dim((d + k) as u64);
            for b in 0..dim {
                let mut v: SparseVec<F::Elem> = Vec::new();
                let mut s_idx = 0;
                for blk in &blocks {
                    for s in &blk.vectors {
                        let off = syz_offsets[s_idx];
                        s_idx += 1;
                        let si = &s[i];
                        if si.is_zero() || blk.degree as i64 + k < 0 {
                            continue;
                        }
                        let img = q.mul_poly(
                            &[(b, field.one())],
                            (d + k) as u64,
                            si,
                            blk.degree - d as u64,
                        );
                        v.extend(img.into_iter().map(|(c, a)| (c + off, a)));
                    }
                }
                cond.push(v);
            }
        }
        let rank_c = rank(field, len, &cond);
        let der = derivation_image(&mut q, &partials, &degs, &offsets, k);
        let rank_d = rank(field, n, &der);
        values.push((n - rank_c - rank_d) as u64);
    }
    Ok(T1Report {
        dims: GradedDims::from_values(k_min, values),
        method: T1Method::NormalModule,
        field: field.descriptor(),
        seed: None,
        center: a_invariant(gb),
        syzygy_bound: Some(bound),
    })
}

/// Dispatch on the requested method. `Auto` uses the Jacobian ring for a
/// single equation with isolated singularity, the complete-intersection
/// formula when it applies, and the normal module otherwise.
pub fn t1<F: Field>(ideal: &Ideal<F>, k_min: i64, k_max: i64, method: MethodChoice) -> Result<T1Report> {
    let nonzero = ideal.gens().iter().filter(|g| !g.is_zero()).count();
    match method {
        MethodChoice::Hypersurface => {
            if nonzero != 1 || ideal.gens().len() != 1 {
                return Err(Error::InvalidArgument(
                    "the hypersurface method needs exactly one equation".into(),
                ));
            }
            t1_hypersurface(ideal.ring(), &ideal.gens()[0], k_min, k_max)
        }
        MethodChoice::CompleteIntersection => t1_complete_intersection(ideal, k_min, k_max),
        MethodChoice::NormalModule => t1_graded(ideal, k_min, k_max),
        MethodChoice::Auto => {
            if ideal.gens().len() == 1 && nonzero == 1 {
                match t1_hypersurface(ideal.ring(), &ideal.gens()[0], k_min, k_max) {
                    Err(Error::NonIsolatedSingularity(_)) => {}
                    other => return other,
                }
            } else if nonzero == ideal.gens().len()
                && is_regular_sequence(ideal)?
                && has_isolated_singularity(ideal)?
            {
                return t1_complete_intersection(ideal, k_min, k_max);
            }
            t1_graded(ideal, k_min, k_max)
        }
    }
}

/// Compare `T¹(c-j)` with `T¹(c+j)` over a range symmetric about `c`.
pub fn check_t1_symmetry(report: &T1Report, c: i64) -> Result<SymmetryCheck> {
    let (lo, hi) = (report.dims.k_min(), report.dims.k_max());
    if lo + hi != 2 * c {
        return Err(Error::AsymmetricRange {
            center: c,
            k_min: lo,
            k_max: hi,
        });
    }
    for j in 1..=(hi - c) {
        if report.dims.get(c - j) != report.dims.get(c + j) {
            return Ok(SymmetryCheck {
                symmetric: false,
                first_violation: Some(c + j),
            });
        }
    }
    Ok(SymmetryCheck {
        symmetric: true,
        first_violation: None,
    })
}
