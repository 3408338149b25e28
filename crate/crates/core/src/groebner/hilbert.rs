//! Hilbert series of monomial ideals by pivot recursion.
//!
//! For a monomial ideal `J` in a weighted ring the Hilbert series of `S/J`
//! is `N(t) / Π (1 - t^{w_i})`. The numerator satisfies
//! `N(J) = N(J + (p)) + t^{deg p} N(J : p)` for any monomial `p`.

/// Integer polynomial in `t`, coefficient of `t^i` at index `i`.
pub type TPoly = Vec<i64>;

fn trim(mut p: TPoly) -> TPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn add_shifted(a: &mut TPoly, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> TPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn wdeg(m: &[u16], weights: &[u32]) -> usize {
    m.iter()
        .zip(weights)
        .map(|(&e, &w)| e as usize * w as usize)
        .sum()
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Drop generators divisible by others (and duplicates).
fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u32).sum::<u32>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn single_var(g: &[u16]) -> Option<usize> {
    let mut it = g.iter().enumerate().filter(|(_, &e)| e > 0);
    let (i, _) = it.next()?;
    it.next().is_none().then_some(i)
}

/// Numerator `N(t)` for the monomial ideal generated by `gens`.
pub fn numerator(gens: &[Vec<u16>], weights: &[u32]) -> TPoly {
    trim(rec(minimalize(gens.to_vec()), weights))
}

fn rec(gens: Vec<Vec<u16>>, weights: &[u32]) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    // pure powers in distinct variables: a complete intersection
    if gens.iter().all(|g| single_var(g).is_some()) {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = wdeg(g, weights);
            let mut f = vec![0i64; d + 1];
            f[0] = 1;
            f[d] -= 1;
            acc = mul(&acc, &f);
        }
        return acc;
    }
    let n = weights.len();
    // pivot on the variable occurring in the most non-pure generators
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| single_var(g).is_none()) {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let e = gens
        .iter()
        .filter(|g| single_var(g).is_none() && g[x] > 0)
        .map(|g| g[x])
        .min()
        .unwrap();

    let mut pivot = vec![0u16; n];
    pivot[x] = e;
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(e);
            h
        })
        .collect();

    let mut out = rec(minimalize(with_pivot), weights);
    let shift = e as usize * weights[x] as usize;
    let colon = minimalize(colon);
    if colon.iter().any(|g| g.iter().all(|&v| v == 0)) {
        return out;
    }
    add_shifted(&mut out, &rec(colon, weights), shift);
    out
}

/// Coefficients `0..=d_max` of `N(t) / Π (1 - t^{w_i})`.
pub fn expand(numer: &[i64], weights: &[u32], d_max: usize) -> Vec<i64> {
    let mut series = vec![0i64; d_max + 1];
    for (i, c) in numer.iter().enumerate().take(d_max + 1) {
        series[i] = *c;
    }
    for &w in weights {
        let w = w as usize;
        for d in w..=d_max {
            series[d] += series[d - w];
        }
    }
    series
}

/// Multiplicity of `t = 1` as a root of `p` (`None` for the zero
/// polynomial).
pub fn order_at_one(p: &[i64]) -> Option<usize> {
    if p.iter().all(|&c| c == 0) {
        return None;
    }
    let mut cur = p.to_vec();
    let mut k = 0;
    loop {
        if cur.iter().sum::<i64>() != 0 {
            return Some(k);
        }
        // synthetic division by (t - 1)
        let m = cur.len();
        let mut q = vec![0i64; m - 1];
        let mut carry = 0i64;
        for i in (1..m).rev() {
            carry += cur[i];
            q[i - 1] = carry;
        }
        cur = q;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_powers() {
        let g = vec![vec![3, 0, 0, 0], vec![0, 3, 0, 0], vec![0, 0, 3, 0], vec![0, 0, 0, 3]];
        let n = numerator(&g, &[1, 1, 1, 1]);
        let hf = expand(&n, &[1, 1, 1, 1], 10);
        assert_eq!(hf, vec![1, 4, 10, 16, 19, 16, 10, 4, 1, 0, 0]);
    }

    #[test]
    fn mixed_monomials() {
        // (x^2, xy, y^2) in x, y has HF 1, 2, 0, ...
        let g = vec![vec![2, 0], vec![1, 1], vec![0, 2]];
        let n = numerator(&g, &[1, 1]);
        assert_eq!(expand(&n, &[1, 1], 4), vec![1, 2, 0, 0, 0]);
    }

    #[test]
    fn principal_dimension() {
        let g = vec![vec![2, 1, 0]];
        let n = numerator(&g, &[1, 1, 1]);
        assert_eq!(order_at_one(&n), Some(1));
    }
}
