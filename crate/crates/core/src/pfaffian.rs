//! Skew-symmetric matrices of polynomials, their Pfaffians, entry
//! perturbations, and Jacobian-criterion smoothness sampling.
//!
//! Sign convention: `Pf` expands along row 0 with sign `(-1)^(j+1)` on
//! `m_{0j}`, and the `i`-th 4×4 Pfaffian of a 5×5 matrix is the Pfaffian of
//! the matrix with row and column `i` removed, times `(-1)^(i+1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_negative, Field, PrimeField};
use crate::linalg::dense_rank;
use crate::poly::{Polynomial, WeightedPolyRing};
use crate::solver::rational_points;

/// How a matrix may be perturbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeformMode {
    /// Perturbations live on the affine cone; any degree allowed.
    Affine,
    /// Perturbations must extend to the projective cone: a term may not
    /// exceed the degree of the slot it is added to.
    Projective,
}

impl FromStr for DeformMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "affine" => Ok(DeformMode::Affine),
            "projective" => Ok(DeformMode::Projective),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode '{other}' (expected affine or projective)"
            ))),
        }
    }
}

impl fmt::Display for DeformMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeformMode::Affine => "affine",
            DeformMode::Projective => "projective",
        })
    }
}

/// An `n×n` skew-symmetric matrix; only the strict upper triangle is
/// stored, row by row.
#[derive(Debug, Clone)]
pub struct SkewMatrix<F: Field> {
    ring: WeightedPolyRing<F>,
    n: usize,
    entries: Vec<Polynomial<F>>,
    degrees: Vec<Option<i64>>,
    mode: Option<DeformMode>,
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Fill in unknown slot degrees from `d_ij + d_kl = d_ik + d_jl`.
fn infer_degrees(n: usize, known: &mut [Option<i64>]) {
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if known[upper_index(n, i, j)].is_some() {
                    continue;
                }
                'search: for k in 0..n {
                    for l in 0..n {
                        if [i, j].contains(&k) || [i, j].contains(&l) || k == l {
                            continue;
                        }
                        let d = |a: usize, b: usize| {
                            known[upper_index(n, a.min(b), a.max(b))]
                        };
                        if let (Some(a), Some(b), Some(c)) = (d(i, k), d(j, l), d(k, l)) {
                            known[upper_index(n, i, j)] = Some(a + b - c);
                            changed = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
}

impl<F: Field> SkewMatrix<F> {
    /// Build from the upper triangle `m_01, m_02, …, m_{n-2,n-1}`. Every
    /// nonzero entry must be homogeneous; degrees of zero slots are
    /// inferred where the others determine them.
    pub fn new(ring: &WeightedPolyRing<F>, n: usize, entries: Vec<Polynomial<F>>) -> Result<Self> {
        let count = n * n.saturating_sub(1) / 2;
        if entries.len() != count {
            return Err(Error::InvalidArgument(format!(
                "a {n}×{n} skew matrix has {count} upper entries, got {}",
                entries.len()
            )));
        }
        let mut degrees = Vec::with_capacity(count);
        for e in &entries {
            if let Some(nv) = e.nvars() {
                if nv != ring.nvars() {
                    return Err(Error::RingMismatch(format!(
                        "entry has {nv} variables, ring has {}",
                        ring.nvars()
                    )));
                }
            }
            if !e.is_homogeneous() {
                return Err(Error::NotHomogeneous(ring.format_poly(e)));
            }
            degrees.push(e.weighted_degree().map(|d| d as i64));
        }
        infer_degrees(n, &mut degrees);
        let m = SkewMatrix {
            ring: ring.clone(),
            n,
            entries,
            degrees,
            mode: None,
        };
        m.check_degrees()?;
        Ok(m)
    }

    fn check_degrees(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let d = |a, b| self.degrees[upper_index(n, a, b)];
                        let sums = [
                            d(i, j).zip(d(k, l)).map(|(a, b)| a + b),
                            d(i, k).zip(d(j, l)).map(|(a, b)| a + b),
                            d(i, l).zip(d(j, k)).map(|(a, b)| a + b),
                        ];
                        let known: Vec<i64> = sums.iter().flatten().copied().collect();
                        if known.windows(2).any(|w| w[0] != w[1]) {
                            return Err(Error::DegreeViolation(format!(
                                "entries of rows {i},{j},{k},{l} do not admit a grading \
                                 making the Pfaffians homogeneous"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &WeightedPolyRing<F> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The perturbation mode if this matrix came out of [`deform_matrix`].
    pub fn mode(&self) -> Option<DeformMode> {
        self.mode
    }

    /// `m_ij` with `m_ji = -m_ij` and zero diagonal.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial<F> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Polynomial::zero(),
            std::cmp::Ordering::Less => self.entries[upper_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.entries[upper_index(self.n, j, i)].neg(self.ring.field()),
        }
    }

    pub fn upper_entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    /// Expected degree of slot `(i, j)`, `i < j`; `None` if undetermined.
    pub fn degree(&self, i: usize, j: usize) -> Option<i64> {
        self.degrees[upper_index(self.n, i.min(j), i.max(j))]
    }

    /// Rows of the upper triangle of the degree matrix.
    pub fn degree_matrix(&self) -> Vec<Vec<Option<i64>>> {
        (0..self.n)
            .map(|i| (i + 1..self.n).map(|j| self.degree(i, j)).collect())
            .filter(|r: &Vec<_>| !r.is_empty())
            .collect()
    }

    /// `(-1 1 1 1; 1 1 1; 3 3; 3)`, with `?` for undetermined slots.
    pub fn format_degree_matrix(&self) -> String {
        let rows: Vec<String> = self
            .degree_matrix()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|d| d.map_or("?".to_string(), |d| d.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("({})", rows.join("; "))
    }

    /// Submatrix on the given sorted index set.
    fn pf_indices(&self, idx: &[usize], memo: &mut HashMap<u64, Polynomial<F>>) -> Polynomial<F> {
        let field = self.ring.field();
        if idx.is_empty() {
            return self.ring.one();
        }
        let key = idx.iter().fold(0u64, |k, &i| k | (1 << i));
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let first = idx[0];
        let mut acc = Polynomial::zero();
        for j in 1..idx.len() {
            let e = self.entry(first, idx[j]);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..]
                .iter()
                .copied()
                .filter(|&k| k != idx[j])
                .collect();
            let sub = self.pf_indices(&rest, memo);
            let term = e.mul(&sub, field);
            acc = if j % 2 == 1 { acc.add(&term, field) } else { acc.sub(&term, field) };
        }
        memo.insert(key, acc.clone());
        acc
    }
}

/// The Pfaffian of an even-size skew matrix.
pub fn pfaffian<F: Field>(m: &SkewMatrix<F>) -> Result<Polynomial<F>> {
    if m.n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "Pfaffian needs an even size, got {}",
            m.n
        )));
    }
    if m.n > 64 {
        return Err(Error::Unsupported("matrices larger than 64×64".into()));
    }
    let idx: Vec<usize> = (0..m.n).collect();
    Ok(m.pf_indices(&idx, &mut HashMap::new()))
}

/// The five signed 4×4 Pfaffians of a 5×5 skew matrix, in index order.
pub fn pfaffians_4x4<F: Field>(m: &SkewMatrix<F>) -> Result<Vec<Polynomial<F>>> {
    if m.n != 5 {
        return Err(Error::InvalidArgument(format!(
            "expected a 5×5 matrix, got {}×{}",
            m.n, m.n
        )));
    }
    let field = m.ring.field();
    let mut memo = HashMap::new();
    Ok((0..5)
        .map(|i| {
            let idx: Vec<usize> = (0..5).filter(|&k| k != i).collect();
            let p = m.pf_indices(&idx, &mut memo);
            if i % 2 == 0 {
                p.neg(field)
            } else {
                p
            }
        })
        .collect())
}

/// The 4×4 Pfaffians listed from the last deleted index to the first, each
/// scaled so that its lex-leading coefficient prints positive. This is the
/// customary display order; the ideal is the same as [`pfaffians_4x4`].
pub fn pfaffians_display<F: Field>(m: &SkewMatrix<F>) -> Result<Vec<Polynomial<F>>> {
    let field = m.ring.field();
    let mut out = pfaffians_4x4(m)?;
    out.reverse();
    Ok(out
        .into_iter()
        .map(|p| {
            let lead = p
                .terms()
                .iter()
                .max_by(|a, b| a.0.lex_cmp(&b.0))
                .map(|(_, c)| c.clone());
            match lead {
                Some(c) if is_negative(field, &c) => p.neg(field),
                _ => p,
            }
        })
        .collect())
}

/// Perturb the Pfaffian format `M` of a surface in ℙ¹×ℙ²-type position:
/// `λ` goes into slot (0,1) and `h1, h2, h3` are added to slots (2,3),
/// (2,4), (3,4).
///
/// In projective mode a term may not exceed the degree of its slot; in
/// particular a nonzero `λ` is rejected when slot (0,1) has negative degree.
pub fn deform_matrix<F: Field>(
    m: &SkewMatrix<F>,
    lambda: &F::Elem,
    h: [&Polynomial<F>; 3],
    mode: DeformMode,
) -> Result<SkewMatrix<F>> {
    if m.n != 5 {
        return Err(Error::InvalidArgument(format!(
            "deformation is defined for 5×5 matrices, got {}×{}",
            m.n, m.n
        )));
    }
    let field = m.ring.field();
    let lambda_poly = m.ring.constant(lambda.clone());
    let slots = [(0, 1), (2, 3), (2, 4), (3, 4)];
    let adds = [&lambda_poly, h[0], h[1], h[2]];
    if mode == DeformMode::Projective {
        for (&(i, j), add) in slots.iter().zip(adds) {
            let Some(top) = add.weighted_degree() else {
                continue;
            };
            match m.degree(i, j) {
                Some(d) if top as i64 <= d => {}
                Some(d) => {
                    return Err(Error::DegreeViolation(format!(
                        "slot ({i},{j}) has degree {d} but the perturbation has a term \
                         of degree {top}; it does not extend to the projective cone"
                    )))
                }
                None => {
                    return Err(Error::DegreeViolation(format!(
                        "slot ({i},{j}) has no determined degree"
                    )))
                }
            }
        }
    }
    let mut entries = m.entries.clone();
    for (&(i, j), add) in slots.iter().zip(adds) {
        let k = upper_index(5, i, j);
        entries[k] = entries[k].add(add, field);
    }
    Ok(SkewMatrix {
        ring: m.ring.clone(),
        n: 5,
        entries,
        degrees: m.degrees.clone(),
        mode: Some(mode),
    })
}

/// The matrix with `0, x1, x2, x3 / x4, x5, x6 / f1, f2 / f3` above the
/// diagonal, the `f_i` being symbolic variables of weight `k`.
pub fn symbolic_divisor_matrix<F: Field>(field: F, k: u32) -> Result<SkewMatrix<F>> {
    let names: Vec<String> = ["x1", "x2", "x3", "x4", "x5", "x6", "f1", "f2", "f3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let ring = WeightedPolyRing::new(names, vec![1, 1, 1, 1, 1, 1, k, k, k], field)?;
    let v = |i: usize| ring.var(i);
    let entries = vec![
        Polynomial::zero(),
        v(0),
        v(1),
        v(2),
        v(3),
        v(4),
        v(5),
        v(6),
        v(7),
        v(8),
    ];
    SkewMatrix::new(&ring, 5, entries)
}

/// The same format over `x1..x6` with the `f_i` seeded random forms of
/// degree `k`. The Pfaffians cut a divisor of bidegree `(k, k+1)` out of
/// the Segre cone; `k = 3` is the classical example.
pub fn divisor_family<F: Field>(field: F, k: u32, seed: u64) -> Result<SkewMatrix<F>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let ring = WeightedPolyRing::standard(&["x1", "x2", "x3", "x4", "x5", "x6"], field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = |i: usize| ring.var(i);
    let f: Vec<Polynomial<F>> = (0..3).map(|_| ring.random_form(k as u64, &mut rng)).collect();
    let entries = vec![
        Polynomial::zero(),
        v(0),
        v(1),
        v(2),
        v(3),
        v(4),
        v(5),
        f[0].clone(),
        f[1].clone(),
        f[2].clone(),
    ];
    SkewMatrix::new(&ring, 5, entries)
}

/// Rank of the Jacobian of `gens` at a point, and whether the point lies
/// on their zero set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JacobianRank {
    pub rank: usize,
    pub on_variety: bool,
}

pub fn jacobian_rank_at<F: Field>(
    ring: &WeightedPolyRing<F>,
    gens: &[Polynomial<F>],
    point: &[F::Elem],
) -> Result<JacobianRank> {
    if point.len() != ring.nvars() {
        return Err(Error::InvalidArgument(format!(
            "point has {} coordinates, ring has {} variables",
            point.len(),
            ring.nvars()
        )));
    }
    let field = ring.field();
    let on_variety = gens.iter().all(|g| field.is_zero(&g.evaluate(point, field)));
    let rows: Vec<Vec<F::Elem>> = gens
        .iter()
        .map(|g| {
            (0..ring.nvars())
                .map(|j| g.derivative(j, ring.weights(), field).evaluate(point, field))
                .collect()
        })
        .collect();
    Ok(JacobianRank {
        rank: dense_rank(field, &rows),
        on_variety,
    })
}

/// Outcome of sampling points on `V(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SmoothnessVerdict {
    /// Every sampled point had full Jacobian rank. Evidence, not proof.
    SmoothSampled { points: usize, trials: usize },
    /// A point where the Jacobian rank drops below the codimension.
    /// `trial` is `None` for the origin probe.
    SingularWitness {
        point: Vec<u32>,
        trial: Option<usize>,
        rank: usize,
    },
    /// No rational point was found in any trial.
    NoPoints { attempts: usize },
}

/// Sample rational points of `V(gens) ⊂ 𝔸ⁿ` over the prime field by
/// intersecting with random affine subspaces of complementary dimension
/// and test the Jacobian criterion at each.
///
/// The origin is probed first when it lies on the variety. Trials run in
/// order and the first singular witness wins.
pub fn smoothness_sample(
    ring: &WeightedPolyRing<PrimeField>,
    gens: &[Polynomial<PrimeField>],
    expected_dim: usize,
    trials: usize,
    seed: u64,
) -> Result<SmoothnessVerdict> {
    let n = ring.nvars();
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if expected_dim > n {
        return Err(Error::InvalidArgument(format!(
            "expected dimension {expected_dim} exceeds ambient dimension {n}"
        )));
    }
    let codim = n - expected_dim;
    let field = ring.field();
    let origin = vec![0u32; n];
    let at_origin = jacobian_rank_at(ring, gens, &origin)?;
    if at_origin.on_variety && at_origin.rank < codim {
        return Ok(SmoothnessVerdict::SingularWitness {
            point: origin,
            trial: None,
            rank: at_origin.rank,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = usize::from(at_origin.on_variety);
    let c = codim;
    let ynames: Vec<String> = (0..c).map(|i| format!("y{i}")).collect();
    let yring = WeightedPolyRing::standard(&ynames, *field)?;
    let one = yring.one();
    for trial in 0..trials {
        // x = a + B y
        let a: Vec<u32> = (0..n).map(|_| field.random(&mut rng)).collect();
        let b: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..c).map(|_| field.random(&mut rng)).collect())
            .collect();
        let images: Vec<Polynomial<PrimeField>> = (0..n)
            .map(|i| {
                let mut p = yring.constant(a[i]);
                for (j, bij) in b[i].iter().enumerate() {
                    p = p.add(&yring.var(j).scale(bij, field), field);
                }
                p
            })
            .collect();
        let sliced: Vec<Polynomial<PrimeField>> = gens
            .iter()
            .map(|g| g.substitute(&images, &one, field))
            .filter(|p| !p.is_zero())
            .collect();
        let Some(ys) = rational_points(&yring, &sliced, &mut rng)? else {
            continue;
        };
        for y in ys {
            let x: Vec<u32> = (0..n)
                .map(|i| {
                    b[i].iter().zip(&y).fold(a[i], |acc, (bij, yj)| {
                        field.add(&acc, &field.mul(bij, yj))
                    })
                })
                .collect();
            let jr = jacobian_rank_at(ring, gens, &x)?;
            debug_assert!(jr.on_variety);
            points += 1;
            if jr.rank < codim {
                return Ok(SmoothnessVerdict::SingularWitness {
                    point: x,
                    trial: Some(trial),
                    rank: jr.rank,
                });
            }
        }
    }
    if points == 0 {
        return Ok(SmoothnessVerdict::NoPoints { attempts: trials });
    }
    Ok(SmoothnessVerdict::SmoothSampled { points, trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::parse_poly;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    fn strings<F: Field>(m: &SkewMatrix<F>, ps: &[Polynomial<F>]) -> Vec<String> {
        ps.iter().map(|p| m.ring().format_poly(p)).collect()
    }

    /// Σ over perfect matchings, sign of the matching permutation.
    fn matching_sum(m: &SkewMatrix<PrimeField>) -> Polynomial<PrimeField> {
        fn go(
            m: &SkewMatrix<PrimeField>,
            left: Vec<usize>,
            sign: bool,
            acc: Polynomial<PrimeField>,
            out: &mut Polynomial<PrimeField>,
        ) {
            let f = m.ring().field();
            if left.is_empty() {
                *out = if sign { out.sub(&acc, f) } else { out.add(&acc, f) };
                return;
            }
            let i = left[0];
            for k in 1..left.len() {
                let j = left[k];
                let rest: Vec<usize> = left[1..].iter().copied().filter(|&x| x != j).collect();
                // moving j next to i crosses k-1 elements
                let s = sign ^ ((k - 1) % 2 == 1);
                go(m, rest, s, acc.mul(&m.entry(i, j), f), out);
            }
        }
        let mut out = Polynomial::zero();
        go(m, (0..m.size()).collect(), false, m.ring().one(), &mut out);
        out
    }

    fn det(f: &PrimeField, mut a: Vec<Vec<u32>>) -> u32 {
        let n = a.len();
        let mut d = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                d = f.neg(&d);
            }
            d = f.mul(&d, &a[c][c]);
            let inv = f.inv(&a[c][c]).unwrap();
            for r in c + 1..n {
                let t = f.mul(&a[r][c], &inv);
                let pivot = a[c].clone();
                for (x, y) in a[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x = f.sub(x, &f.mul(&t, y));
                }
            }
        }
        d
    }

    #[test]
    fn small_pfaffians() {
        let ring = WeightedPolyRing::indexed("m", 6, fp());
        let m2 = SkewMatrix::new(&ring, 2, vec![ring.var(0)]).unwrap();
        assert_eq!(pfaffian(&m2).unwrap(), ring.var(0));
        let m4 = SkewMatrix::new(&ring, 4, (0..6).map(|i| ring.var(i)).collect()).unwrap();
        let p = pfaffian(&m4).unwrap();
        assert_eq!(ring.format_poly(&p), "m0*m5 - m1*m4 + m2*m3");
        assert_eq!(p, matching_sum(&m4));
        let m3 = SkewMatrix::new(&ring, 3, (0..3).map(|i| ring.var(i)).collect()).unwrap();
        assert!(pfaffian(&m3).is_err());
    }

    #[test]
    fn square_is_determinant() {
        let f = fp();
        let ring = WeightedPolyRing::indexed("x", 1, f);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..100 {
            for n in [2usize, 4, 6] {
                let vals: Vec<u32> = (0..n * (n - 1) / 2).map(|_| f.random(&mut rng)).collect();
                let m = SkewMatrix::new(&ring, n, vals.iter().map(|&c| ring.constant(c)).collect())
                    .unwrap();
                let pf = pfaffian(&m).unwrap();
                let pf_val = pf.evaluate(&[0], &f);
                let dense: Vec<Vec<u32>> = (0..n)
                    .map(|i| (0..n).map(|j| m.entry(i, j).evaluate(&[0], &f)).collect())
                    .collect();
                assert_eq!(f.mul(&pf_val, &pf_val), det(&f, dense), "seed {seed} n {n}");
                assert_eq!(pf, matching_sum(&m));
            }
        }
    }

    #[test]
    fn six_by_six_expansion_matches_matchings() {
        let ring = WeightedPolyRing::indexed("m", 15, fp());
        let m = SkewMatrix::new(&ring, 6, (0..15).map(|i| ring.var(i)).collect()).unwrap();
        let p = pfaffian(&m).unwrap();
        assert_eq!(p.len(), 15);
        assert_eq!(p, matching_sum(&m));
    }

    #[test]
    fn symbolic_example_list() {
        let m = symbolic_divisor_matrix(fp(), 3).unwrap();
        assert_eq!(m.format_degree_matrix(), "(-1 1 1 1; 1 1 1; 3 3; 3)");
        let shown = strings(&m, &pfaffians_display(&m).unwrap());
        assert_eq!(
            shown,
            vec![
                "x1*x5 - x2*x4",
                "x1*x6 - x3*x4",
                "x2*x6 - x3*x5",
                "x1*f3 - x2*f2 + x3*f1",
                "x4*f3 - x5*f2 + x6*f1",
            ]
        );
        let signed = strings(&m, &pfaffians_4x4(&m).unwrap());
        assert_eq!(signed[4], "x1*x5 - x2*x4");
        assert_eq!(signed[3], "-x1*x6 + x3*x4");
        assert_eq!(signed[0], "-x4*f3 + x5*f2 - x6*f1");
    }

    #[test]
    fn vanishing_f_leaves_segre() {
        let m = symbolic_divisor_matrix(fp(), 3).unwrap();
        let ring = m.ring().clone();
        let f = ring.field();
        let mut entries = m.upper_entries().to_vec();
        for e in entries.iter_mut().skip(7) {
            *e = Polynomial::zero();
        }
        let m0 = SkewMatrix::new(&ring, 5, entries).unwrap();
        let p = pfaffians_4x4(&m0).unwrap();
        assert!(p[0].is_zero() && p[1].is_zero());
        let segre = ["x1*x5-x2*x4", "x1*x6-x3*x4", "x2*x6-x3*x5"];
        for (q, s) in p[2..].iter().rev().zip(segre) {
            let t = parse_poly(&ring, s).unwrap();
            assert!(q == &t || q == &t.neg(f));
        }
    }

    #[test]
    fn single_entry_gives_single_pfaffian() {
        let ring = WeightedPolyRing::indexed("x", 1, fp());
        let mut entries = vec![Polynomial::zero(); 10];
        entries[0] = ring.var(0);
        let m = SkewMatrix::new(&ring, 5, entries).unwrap();
        let nonzero = pfaffians_4x4(&m).unwrap().iter().filter(|p| !p.is_zero()).count();
        assert_eq!(nonzero, 0);
        // m01 needs a partner: add m23 and exactly Pf_4 survives
        let mut entries = vec![Polynomial::zero(); 10];
        entries[0] = ring.var(0);
        entries[7] = ring.var(0);
        let m = SkewMatrix::new(&ring, 5, entries).unwrap();
        let p = pfaffians_4x4(&m).unwrap();
        assert_eq!(p.iter().filter(|p| !p.is_zero()).count(), 1);
        assert!(!p[4].is_zero());
    }

    #[test]
    fn pfaffian_ideal_contains_segre() {
        let m = symbolic_divisor_matrix(fp(), 3).unwrap();
        let ring = m.ring().clone();
        let ideal = Ideal::new(&ring, pfaffians_4x4(&m).unwrap()).unwrap();
        let gb = ideal.gb().unwrap();
        for s in ["x1*x5-x2*x4", "x1*x6-x3*x4", "x2*x6-x3*x5"] {
            assert!(gb.contains(&parse_poly(&ring, s).unwrap()).unwrap());
        }
    }

    #[test]
    fn trivial_deformation_is_identity() {
        let m = divisor_family(fp(), 3, 1).unwrap();
        let z = Polynomial::zero();
        let d = deform_matrix(&m, &0, [&z, &z, &z], DeformMode::Projective).unwrap();
        assert_eq!(d.upper_entries(), m.upper_entries());
        assert_eq!(d.mode(), Some(DeformMode::Projective));
    }

    #[test]
    fn projective_mode_rejects_lambda() {
        let m = divisor_family(fp(), 3, 1).unwrap();
        let z = Polynomial::zero();
        let err = deform_matrix(&m, &1, [&z, &z, &z], DeformMode::Projective).unwrap_err();
        assert!(matches!(err, Error::DegreeViolation(_)));
        assert!(deform_matrix(&m, &1, [&z, &z, &z], DeformMode::Affine).is_ok());
        let ring = m.ring();
        let quartic = ring.random_form(4, &mut ChaCha8Rng::seed_from_u64(0));
        let err = deform_matrix(&m, &0, [&quartic, &z, &z], DeformMode::Projective).unwrap_err();
        assert!(matches!(err, Error::DegreeViolation(_)));
    }

    #[test]
    fn lambda_one_is_three_equations() {
        let m = divisor_family(fp(), 3, 5).unwrap();
        let ring = m.ring().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let h: Vec<_> = (0..3).map(|_| ring.random_poly_up_to(2, &mut rng)).collect();
        let d = deform_matrix(&m, &1, [&h[0], &h[1], &h[2]], DeformMode::Affine).unwrap();
        let p = pfaffians_4x4(&d).unwrap();
        // Pf_2, Pf_3, Pf_4 carry λ f'_i; the other two lie in their ideal
        let gb = crate::groebner::GroebnerBasis::compute(
            &ring,
            &p[2..],
            crate::groebner::GbOptions::default(),
        )
        .unwrap();
        assert!(gb.normal_form(&p[0]).unwrap().is_zero());
        assert!(gb.normal_form(&p[1]).unwrap().is_zero());
        assert_eq!(gb.krull_dimension(), 3);
    }

    #[test]
    fn jacobian_at_origin() {
        let m = divisor_family(fp(), 3, 2).unwrap();
        let ring = m.ring().clone();
        let f = ring.field();
        let p = pfaffians_4x4(&m).unwrap();
        let o = vec![0u32; 6];
        assert_eq!(jacobian_rank_at(&ring, &p, &o).unwrap(), JacobianRank { rank: 0, on_variety: true });
        let c = |v: u32| ring.constant(v);
        let d = deform_matrix(&m, &0, [&c(2), &c(3), &c(5)], DeformMode::Projective).unwrap();
        let p = pfaffians_4x4(&d).unwrap();
        // the rows of Pf_1 and Pf_0 at the origin: (5,-3,2,0,0,0) and its shift
        let row = |g: &Polynomial<PrimeField>| -> Vec<u32> {
            (0..6).map(|j| g.derivative(j, ring.weights(), f).evaluate(&o, f)).collect()
        };
        let p_ = 32003u32;
        assert_eq!(row(&p[1]), vec![5, p_ - 3, 2, 0, 0, 0]);
        assert_eq!(row(&p[0]), vec![0, 0, 0, p_ - 5, 3, p_ - 2]);
        assert_eq!(jacobian_rank_at(&ring, &p, &o).unwrap().rank, 2);
        assert!(jacobian_rank_at(&ring, &p, &[0; 5]).is_err());
    }

    #[test]
    fn fermat_quartic_vertex_is_singular() {
        let ring = WeightedPolyRing::indexed("x", 4, fp());
        let f = parse_poly(&ring, "x0^4+x1^4+x2^4+x3^4").unwrap();
        let v = smoothness_sample(&ring, &[f], 3, 5, 1).unwrap();
        assert!(matches!(v, SmoothnessVerdict::SingularWitness { trial: None, .. }));
    }

    #[test]
    fn smooth_hypersurface_samples_smooth() {
        let ring = WeightedPolyRing::indexed("x", 3, fp());
        let f = parse_poly(&ring, "x0^2 + x1^2 + x2^2 - 1").unwrap();
        match smoothness_sample(&ring, &[f], 2, 10, 4).unwrap() {
            SmoothnessVerdict::SmoothSampled { points, trials } => {
                assert!(points > 0);
                assert_eq!(trials, 10);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sampling_is_not_a_proof() {
        // two lines crossing at (1,1); random lines through the plane miss
        // the crossing, so sampling cannot see it
        let ring = WeightedPolyRing::indexed("x", 2, fp());
        let f = parse_poly(&ring, "(x0-1)*(x1-1)").unwrap();
        let v = smoothness_sample(&ring, &[f], 1, 5, 4).unwrap();
        assert!(matches!(v, SmoothnessVerdict::SmoothSampled { .. }));
    }
}
