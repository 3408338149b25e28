//! Brute-force `T¹` for small Artinian ideals over GF(32003).
//!
//! The oracle needs no Gröbner basis. Degree by degree it writes `I_e` as a
//! span inside `S_e`. It imposes `Σ s_i v_i = 0` in `(S/I)_{e+k}` for every
//! relation `Σ s_i f_i = 0` of every degree `e`, not only a generating set.
//! It then subtracts the image of the derivations. All linear algebra is
//! dense and local to this file, so it shares nothing with the main path.

use std::collections::HashMap;

use rand::Rng;

use crate::field::{Field, PrimeField};
use crate::poly::{Monomial, Polynomial, WeightedPolyRing};

const P: u64 = 32003;

fn inv(a: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, P - 2, a % P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let iv = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * iv % P;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of `{c : Σ c_j cols[j] = 0}`.
fn kernel(cols: &[Vec<u64>], len: usize) -> Vec<Vec<u64>> {
    // rows of the matrix whose columns are `cols`
    let mut m: Vec<Vec<u64>> = (0..len).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let n = cols.len();
    if len == 0 {
        return (0..n).map(|j| unit(n, j)).collect();
    }
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = (P - row[f]) % P;
            }
            v
        })
        .collect()
}

fn unit(n: usize, j: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}

/// One graded piece of `S` together with `I` in that degree.
struct Piece {
    mons: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal_rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Piece {
    fn dim(&self) -> usize {
        self.free.len()
    }

    fn dense(&self, p: &Polynomial<PrimeField>) -> Vec<u64> {
        let mut v = vec![0u64; self.mons.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = *c as u64;
        }
        v
    }

    /// Coordinates in `S_d / I_d` on the non-pivot monomials.
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &pc) in self.ideal_rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for j in 0..v.len() {
                    v[j] = (v[j] + P - f * row[j] % P) % P;
                }
            }
        }
        self.free.iter().map(|&c| v[c]).collect()
    }
}

pub struct BruteForceT1 {
    ring: WeightedPolyRing<PrimeField>,
    gens: Vec<(Polynomial<PrimeField>, u64)>,
    pieces: Vec<Piece>,
    top: i64,
}

impl BruteForceT1 {
    /// `None` unless the field is GF(32003), the generators are nonzero and
    /// `S/I` vanishes below degree 40.
    pub fn new(ring: &WeightedPolyRing<PrimeField>, gens: &[Polynomial<PrimeField>]) -> Option<Self> {
        if ring.field().modulus() != P || gens.iter().any(|g| g.is_zero()) {
            return None;
        }
        let gens: Vec<_> = gens.iter().map(|g| (g.clone(), g.weighted_degree().unwrap())).collect();
        let dmax = gens.iter().map(|g| g.1).max()?;
        let mut pieces = Vec::new();
        let mut top = None;
        for d in 0..40u64 {
            let mons = ring.monomials_of_degree(d);
            let index: HashMap<Monomial, usize> =
                mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut piece = Piece { mons, index, ideal_rows: Vec::new(), pivots: Vec::new(), free: Vec::new() };
            let mut rows = Vec::new();
            for (g, dg) in &gens {
                if *dg > d {
                    continue;
                }
                for m in ring.monomials_of_degree(d - dg) {
                    let p = g.mul_term(&m, &ring.field().one(), ring.field());
                    rows.push(piece.dense(&p));
                }
            }
            if !rows.is_empty() {
                piece.pivots = rref(&mut rows);
            }
            piece.ideal_rows = rows;
            piece.free = (0..piece.mons.len()).filter(|c| !piece.pivots.contains(c)).collect();
            if piece.dim() == 0 && top.is_none() {
                top = Some(d);
            }
            pieces.push(piece);
            if top.is_some_and(|t| d >= t + dmax + 2) {
                return Some(BruteForceT1 { ring: ring.clone(), gens, pieces, top: top? as i64 });
            }
        }
        None
    }

    /// First degree where the quotient vanishes.
    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn colength(&self) -> usize {
        self.pieces.iter().map(|p| p.dim()).sum()
    }

    fn quotient_dim(&self, d: i64) -> usize {
        if d < 0 || d >= self.top() {
            0
        } else {
            self.pieces[d as usize].dim()
        }
    }

    /// Reduce a form of degree `d` into `(S/I)_d`.
    fn reduce(&self, p: &Polynomial<PrimeField>, d: i64) -> Vec<u64> {
        let piece = &self.pieces[d as usize];
        piece.reduce(piece.dense(p))
    }

    /// `dim T¹(k)`.
    pub fn t1(&self, k: i64) -> u64 {
        let field = *self.ring.field();
        let one = field.one();
        // unknowns: v_i ∈ (S/I)_{d_i+k}, basis = free monomials
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for (i, (_, d)) in self.gens.iter().enumerate() {
            let t = *d as i64 + k;
            if self.quotient_dim(t) > 0 {
                let piece = &self.pieces[t as usize];
                for &c in &piece.free {
                    unknowns.push((i, piece.mons[c].clone()));
                }
            }
        }
        if unknowns.is_empty() {
            return 0;
        }
        let mut columns: Vec<Vec<u64>> = vec![Vec::new(); unknowns.len()];
        let d_min = self.gens.iter().map(|g| g.1).min().unwrap();
        for e in d_min..self.pieces.len() as u64 {
            let target = e as i64 + k;
            if target >= self.top() {
                break;
            }
            if target < 0 {
                continue;
            }
            // all relations Σ s_i f_i = 0 with s_i of degree e - d_i
            let mut slots: Vec<(usize, Monomial)> = Vec::new();
            let mut images: Vec<Vec<u64>> = Vec::new();
            let piece_e = &self.pieces[e as usize];
            for (i, (g, dg)) in self.gens.iter().enumerate() {
                if *dg > e {
                    continue;
                }
                for m in self.ring.monomials_of_degree(e - dg) {
                    images.push(piece_e.dense(&g.mul_term(&m, &one, &field)));
                    slots.push((i, m));
                }
            }
            for rel in kernel(&images, piece_e.mons.len()) {
                for (u, (i, basis_mon)) in unknowns.iter().enumerate() {
                    let mut acc = Polynomial::zero();
                    for (s, c) in slots.iter().zip(&rel) {
                        if s.0 == *i && *c != 0 {
                            let term = Polynomial::from_monomial(s.1.mul(basis_mon), *c as u32);
                            acc = acc.add(&term, &field);
                        }
                    }
                    let v = if acc.is_zero() {
                        vec![0; self.quotient_dim(target)]
                    } else {
                        self.reduce(&acc, target)
                    };
                    columns[u].extend(v);
                }
            }
        }
        let hom = unknowns.len() - rank(columns);
        let mut der = Vec::new();
        if k >= -1 {
            let n = self.ring.nvars();
            for j in 0..n {
                for h in self.ring.monomials_of_degree((k + 1) as u64) {
                    let mut row = Vec::new();
                    for (g, d) in &self.gens {
                        let t = *d as i64 + k;
                        if self.quotient_dim(t) == 0 {
                            continue;
                        }
                        let dg = g.derivative(j, self.ring.weights(), &field);
                        let img = dg.mul_term(&h, &one, &field);
                        row.extend(if img.is_zero() {
                            vec![0; self.quotient_dim(t)]
                        } else {
                            self.reduce(&img, t)
                        });
                    }
                    der.push(row);
                }
            }
        }
        (hom - rank(der)) as u64
    }
}

fn random_sparse_form<R: Rng + ?Sized>(
    ring: &WeightedPolyRing<PrimeField>,
    d: u64,
    rng: &mut R,
) -> Polynomial<PrimeField> {
    let field = ring.field();
    let mons = ring.monomials_of_degree(d);
    let nterms = rng.random_range(2..=3usize.min(mons.len()));
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let m = mons[rng.random_range(0..mons.len())].clone();
        let c = rng.random_range(-3i64..=3);
        if c != 0 {
            terms.push((m, field.from_i64(c)));
        }
    }
    Polynomial::from_terms(field, terms)
}

/// Pure powers plus a sparse form or two, or a complete intersection of
/// general quadrics and cubics, in two or three variables. Always Artinian.
pub fn random_small_artinian<R: Rng + ?Sized>(rng: &mut R) -> (WeightedPolyRing<PrimeField>, Vec<Polynomial<PrimeField>>) {
    let n = rng.random_range(2..=3usize);
    let ring = WeightedPolyRing::indexed("x", n, PrimeField::default());
    let mut gens = Vec::new();
    if rng.random_bool(0.3) {
        // complete intersection of general forms
        for _ in 0..n {
            gens.push(ring.random_form(rng.random_range(2..=3), rng));
        }
    } else {
        for i in 0..n {
            let mut e = vec![0u16; n];
            e[i] = rng.random_range(2..=4);
            gens.push(Polynomial::from_monomial(ring.monomial(e), 1));
        }
        for _ in 0..rng.random_range(1..=2) {
            let f = random_sparse_form(&ring, rng.random_range(2..=3), rng);
            if !f.is_zero() {
                gens.push(f);
            }
        }
    }
    (ring, gens)
}
