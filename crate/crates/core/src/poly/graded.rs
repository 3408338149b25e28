use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Dimensions of graded pieces over a declared range of degrees.
///
/// Degrees outside `[k_min, k_max]` are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    k_min: i64,
    k_max: i64,
    dims: BTreeMap<i64, u64>,
}

impl GradedDims {
    /// Build from a dense list of dimensions starting at `k_min`.
    pub fn from_values(k_min: i64, values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "graded range must be nonempty");
        let k_max = k_min + values.len() as i64 - 1;
        let dims = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| (k_min + i as i64, v))
            .collect();
        GradedDims { k_min, k_max, dims }
    }

    pub fn k_min(&self) -> i64 {
        self.k_min
    }

    pub fn k_max(&self) -> i64 {
        self.k_max
    }

    pub fn get(&self, k: i64) -> Option<u64> {
        self.dims.get(&k).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    pub fn values(&self) -> Vec<u64> {
        self.dims.values().copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Smallest and largest degree with a nonzero dimension.
    pub fn support(&self) -> Option<(i64, i64)> {
        let mut nz = self.iter().filter(|(_, v)| *v > 0).map(|(k, _)| k);
        let first = nz.next()?;
        let last = nz.last().unwrap_or(first);
        Some((first, last))
    }

    /// Dimensions in the degrees that are multiples of `step`, reindexed by
    /// the quotient: entry `k` of the result is entry `k * step` here.
    pub fn multiples_of(&self, step: i64) -> GradedDims {
        assert!(step > 0);
        let lo = self.k_min.div_euclid(step) + i64::from(self.k_min.rem_euclid(step) != 0);
        let hi = self.k_max.div_euclid(step);
        let values = (lo..=hi).map(|k| self.dims[&(k * step)]).collect();
        GradedDims::from_values(lo, values)
    }

    /// Restrict to a sub-range (must lie inside the declared range).
    pub fn slice(&self, k_min: i64, k_max: i64) -> Option<GradedDims> {
        if k_min < self.k_min || k_max > self.k_max || k_min > k_max {
            return None;
        }
        Some(GradedDims::from_values(
            k_min,
            (k_min..=k_max).map(|k| self.dims[&k]).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_outside_range() {
        let g = GradedDims::from_values(-2, vec![1, 2, 3]);
        assert_eq!(g.get(-2), Some(1));
        assert_eq!(g.get(0), Some(3));
        assert_eq!(g.get(1), None);
        assert_eq!(g.get(-3), None);
    }

    #[test]
    fn multiples() {
        let g = GradedDims::from_values(-4, vec![1, 4, 10, 16, 19, 16, 10, 4, 1]);
        let m = g.multiples_of(2);
        assert_eq!(m.k_min(), -2);
        assert_eq!(m.values(), vec![1, 10, 19, 10, 1]);
        let m4 = g.multiples_of(4);
        assert_eq!(m4.values(), vec![1, 19, 1]);
        let odd = GradedDims::from_values(-3, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(odd.multiples_of(2).values(), vec![2, 4, 6]);
    }

    #[test]
    fn support() {
        let g = GradedDims::from_values(-3, vec![0, 1, 5, 0, 2, 0]);
        assert_eq!(g.support(), Some((-2, 1)));
        assert_eq!(GradedDims::from_values(0, vec![0]).support(), None);
    }
}
