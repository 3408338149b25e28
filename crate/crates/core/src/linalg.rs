//! Sparse exact linear algebra: incremental row echelon forms, ranks and
//! kernels over any [`Field`].

use crate::field::Field;

/// Sparse vector: `(column, value)` pairs with strictly increasing columns
/// and no zero values.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Incrementally built row echelon form.
///
/// Every stored row is monic with its pivot as the first entry, and pivots
/// are distinct. Inserting a vector reduces it against the stored rows in
/// increasing column order using a dense scratch accumulator.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<usize>,
    acc: Vec<F::Elem>,
}

const NO_PIVOT: usize = usize::MAX;

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        let zero = field.zero();
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
            acc: vec![zero; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Reduce `v` against the stored rows whose pivot column is below
    /// `pivot_limit`. Returns the remainder.
    fn reduce_from(&mut self, v: &[(usize, F::Elem)], pivot_limit: usize) -> SparseVec<F::Elem> {
        let f = &self.field;
        let Some(&(lo, _)) = v.first() else {
            return Vec::new();
        };
        let mut hi = lo;
        for (c, a) in v {
            debug_assert!(*c < self.ncols);
            self.acc[*c] = a.clone();
            hi = hi.max(*c);
        }
        let mut out = Vec::new();
        let mut c = lo;
        while c <= hi {
            if !f.is_zero(&self.acc[c]) {
                let r = self.pivot_row[c];
                if r != NO_PIVOT && c < pivot_limit {
                    let coef = std::mem::replace(&mut self.acc[c], f.zero());
                    let row = &self.rows[r];
                    for (j, a) in &row[1..] {
                        let t = f.mul(&coef, a);
                        self.acc[*j] = f.sub(&self.acc[*j], &t);
                        if *j > hi {
                            hi = *j;
                        }
                    }
                } else {
                    out.push((c, std::mem::replace(&mut self.acc[c], f.zero())));
                }
            }
            c += 1;
        }
        out
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&mut self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        self.reduce_from(v, self.ncols)
    }

    /// True if `v` lies in the row space.
    pub fn contains(&mut self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    fn push_reduced(&mut self, mut r: SparseVec<F::Elem>) {
        let lead = r[0].1.clone();
        if !self.field.is_one(&lead) {
            let inv = self.field.inv(&lead).expect("nonzero pivot");
            for (_, a) in r.iter_mut() {
                *a = self.field.mul(a, &inv);
            }
        }
        self.pivot_row[r[0].0] = self.rows.len();
        self.rows.push(r);
    }

    /// Add `v` to the row space. Returns true when the rank grows.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        if self.rows.len() == self.ncols {
            return false;
        }
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        self.push_reduced(r);
        true
    }
}

/// Rank of the span of `vectors` in a space with `ncols` coordinates.
pub fn rank<F: Field>(field: &F, ncols: usize, vectors: &[SparseVec<F::Elem>]) -> usize {
    let mut e = Echelon::new(field.clone(), ncols);
    for v in vectors {
        e.insert(v);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Basis of the linear relations among `vectors`: each returned vector
/// `c` (indexed by position in `vectors`) satisfies `Σ c_i v_i = 0`.
pub fn kernel<F: Field>(
    field: &F,
    ncols: usize,
    vectors: &[SparseVec<F::Elem>],
) -> Vec<SparseVec<F::Elem>> {
    let m = vectors.len();
    let mut e = Echelon::new(field.clone(), ncols + m);
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut aug = v.clone();
        aug.push((ncols + i, field.one()));
        let r = e.reduce_from(&aug, ncols);
        if r[0].0 >= ncols {
            out.push(r.into_iter().map(|(c, a)| (c - ncols, a)).collect());
        } else {
            e.push_reduced(r);
        }
    }
    out
}

/// Rank of a dense matrix given by rows.
pub fn dense_rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let sparse: Vec<SparseVec<F::Elem>> = rows.iter().map(|r| to_sparse(field, r)).collect();
    rank(field, ncols, &sparse)
}

pub fn to_sparse<F: Field>(field: &F, dense: &[F::Elem]) -> SparseVec<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, a)| !field.is_zero(a))
        .map(|(i, a)| (i, a.clone()))
        .collect()
}

/// `Σ c · v` accumulated into a sorted sparse vector.
pub fn axpy<F: Field>(
    field: &F,
    target: &SparseVec<F::Elem>,
    c: &F::Elem,
    v: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(target.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < v.len() {
        if j == v.len() || (i < target.len() && target[i].0 < v[j].0) {
            out.push(target[i].clone());
            i += 1;
        } else if i == target.len() || v[j].0 < target[i].0 {
            let t = field.mul(c, &v[j].1);
            if !field.is_zero(&t) {
                out.push((v[j].0, t));
            }
            j += 1;
        } else {
            let t = field.add(&target[i].1, &field.mul(c, &v[j].1));
            if !field.is_zero(&t) {
                out.push((v[j].0, t));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_of_dependent_rows() {
        let f = PrimeField::default();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(dense_rank(&f, &rows), 2);
    }

    #[test]
    fn kernel_relations_vanish() {
        let f = PrimeField::default();
        let vs: Vec<SparseVec<u32>> = vec![
            vec![(0, 1), (1, 1)],
            vec![(1, 1), (2, 1)],
            vec![(0, 1), (2, f.neg(&1))],
            vec![(0, 5)],
        ];
        let k = kernel(&f, 3, &vs);
        assert_eq!(k.len(), 1);
        let mut total: SparseVec<u32> = Vec::new();
        for (i, c) in &k[0] {
            total = axpy(&f, &total, c, &vs[*i]);
        }
        assert!(total.is_empty());
    }

    #[test]
    fn rationals_rank() {
        let q = Rationals;
        let rows = vec![
            vec![q.from_i64(1), q.from_i64(2)],
            vec![q.from_i64(3), q.from_i64(6)],
        ];
        assert_eq!(dense_rank(&q, &rows), 1);
    }
}
