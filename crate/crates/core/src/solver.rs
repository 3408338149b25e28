//! Rational points of zero-dimensional systems over a prime field.
//!
//! The system is brought to a Gröbner basis, the minimal polynomial of the
//! last variable is found from the normal forms of its powers, its roots in
//! the prime field are split off by Cantor–Zassenhaus, and each root is
//! substituted before recursing on the remaining variables.

use std::collections::HashMap;

use rand::Rng;

use crate::error::Result;
use crate::field::{Field, PrimeField};
use crate::groebner::{GbOptions, GroebnerBasis};
use crate::linalg::{kernel, SparseVec};
use crate::poly::{Monomial, Polynomial, WeightedPolyRing};

/// Dense univariate polynomial over `GF(p)`, lowest coefficient first, no
/// trailing zeros (the zero polynomial is empty).
type UPoly = Vec<u64>;

fn norm(mut a: UPoly) -> UPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    PrimeField::new(p)
        .map(|f| f.inv(&(a as u32)).unwrap() as u64)
        .expect("prime modulus")
}

fn rem(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let mut r = norm(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, bc) in b.iter().enumerate() {
            let t = c * bc % p;
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        r = norm(r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> UPoly {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn monic(a: UPoly, p: u64) -> UPoly {
    let a = norm(a);
    match a.last() {
        None => a,
        Some(&l) => {
            let li = inv_mod(l, p);
            a.into_iter().map(|c| c * li % p).collect()
        }
    }
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let mut a = norm(a.to_vec());
    let mut b = norm(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

fn sub_x(a: &[u64], p: u64) -> UPoly {
    let mut r = a.to_vec();
    if r.len() < 2 {
        r.resize(2, 0);
    }
    r[1] = (r[1] + p - 1) % p;
    norm(r)
}

/// Distinct roots of `f` in `GF(p)`, sorted.
pub fn roots_mod_p<R: Rng + ?Sized>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
    let f = monic(f.to_vec(), p);
    if f.len() <= 1 {
        return Vec::new();
    }
    if p < 1000 {
        let mut out: Vec<u64> = (0..p)
            .filter(|&x| f.iter().rev().fold(0u64, |acc, c| (acc * x + c) % p) == 0)
            .collect();
        out.sort_unstable();
        return out;
    }
    let xp = pow_mod(&[0, 1], p, &f, p);
    let g = gcd(&f, &sub_x(&xp, p), p);
    let mut out = Vec::new();
    split(&g, p, rng, &mut out);
    out.sort_unstable();
    out
}

/// `g` is monic, squarefree and splits into linear factors.
fn split<R: Rng + ?Sized>(g: &[u64], p: u64, rng: &mut R, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push((p - g[0]) % p),
        _ => loop {
            let a = rng.random_range(0..p);
            let h = pow_mod(&[a, 1], (p - 1) / 2, g, p);
            let mut hm1 = h.clone();
            if hm1.is_empty() {
                hm1.push(0);
            }
            hm1[0] = (hm1[0] + p - 1) % p;
            let d = gcd(g, &norm(hm1), p);
            if d.len() > 1 && d.len() < g.len() {
                let q = div_exact(g, &d, p);
                split(&d, p, rng, out);
                split(&q, p, rng, out);
                return;
            }
        },
    }
}

fn div_exact(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; a.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        q[shift] = c;
        for (i, bc) in b.iter().enumerate() {
            let t = c * bc % p;
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        r.pop();
        r = norm(r);
    }
    norm(q)
}

/// Minimal polynomial of variable `var` modulo a zero-dimensional basis.
fn minimal_polynomial(gb: &GroebnerBasis<PrimeField>, var: usize) -> Option<UPoly> {
    let ring = gb.ring();
    let field = ring.field();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut vecs: Vec<SparseVec<u32>> = Vec::new();
    let x = ring.var(var);
    let mut power = ring.one();
    let bound = 10_000;
    for k in 0..bound {
        let nf = gb.normal_form(&power).ok()?;
        let mut v: SparseVec<u32> = nf
            .terms()
            .iter()
            .map(|(m, c)| {
                let n = index.len();
                (*index.entry(m.clone()).or_insert(n), *c)
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        vecs.push(v);
        let ker = kernel(field, index.len(), &vecs);
        if let Some(rel) = ker.into_iter().next() {
            let mut out = vec![0u64; k + 1];
            for (i, c) in rel {
                out[i] = c as u64;
            }
            return Some(norm(out));
        }
        power = nf.mul(&x, field);
    }
    None
}

fn is_zero_dimensional(gb: &GroebnerBasis<PrimeField>) -> bool {
    gb.is_artinian() && !gb.is_unit()
}

/// All points of `V(gens)` with coordinates in the prime field, when the
/// system is zero-dimensional. `None` if it is not.
pub fn rational_points<R: Rng + ?Sized>(
    ring: &WeightedPolyRing<PrimeField>,
    gens: &[Polynomial<PrimeField>],
    rng: &mut R,
) -> Result<Option<Vec<Vec<u32>>>> {
    let gb = GroebnerBasis::compute(ring, gens, GbOptions::default())?;
    if gb.is_unit() {
        return Ok(Some(Vec::new()));
    }
    if !is_zero_dimensional(&gb) {
        return Ok(None);
    }
    let mut out = Vec::new();
    solve_rec(ring, gb, ring.nvars(), rng, &mut Vec::new(), &mut out)?;
    out.sort();
    Ok(Some(out))
}

fn solve_rec<R: Rng + ?Sized>(
    ring: &WeightedPolyRing<PrimeField>,
    gb: GroebnerBasis<PrimeField>,
    remaining: usize,
    rng: &mut R,
    fixed: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) -> Result<()> {
    if remaining == 0 {
        let mut pt = fixed.clone();
        pt.reverse();
        out.push(pt);
        return Ok(());
    }
    let var = remaining - 1;
    let p = ring.field().modulus();
    let Some(mp) = minimal_polynomial(&gb, var) else {
        return Ok(());
    };
    for r in roots_mod_p(&mp, p, rng) {
        let lin = ring
            .var(var)
            .sub(&ring.constant(r as u32), ring.field());
        let mut gens = gb.polys().to_vec();
        gens.push(lin);
        let sub = GroebnerBasis::compute(ring, &gens, GbOptions::default())?;
        if sub.is_unit() {
            continue;
        }
        fixed.push(r as u32);
        solve_rec(ring, sub, remaining - 1, rng, fixed, out)?;
        fixed.pop();
    }
    Ok(())
}
