use std::cmp::Ordering;
use std::fmt;

/// Exponent vector with its cached weighted degree.
///
/// `Ord` is the weighted graded reverse lexicographic order refined by the
/// standard degree: weighted degree first, then total degree, then the
/// monomial with the smaller exponent in the last differing variable is
/// larger. Monomials from different rings must not be compared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    wdeg: u64,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>, weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let wdeg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum();
        Monomial {
            wdeg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            wdeg: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn weighted_degree(&self) -> u64 {
        self.wdeg
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product, or `None` on 16-bit exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b)?);
        }
        Some(Monomial {
            wdeg: self.wdeg + other.wdeg,
            exps: exps.into_boxed_slice(),
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other)
            .expect("monomial exponent exceeds the 16-bit limit")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.wdeg <= other.wdeg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            wdeg: other.wdeg - self.wdeg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiply by a single variable.
    pub fn times_var(&self, var: usize, weight: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[var] = exps[var]
            .checked_add(1)
            .expect("monomial exponent exceeds the 16-bit limit");
        Monomial {
            wdeg: self.wdeg + weight as u64,
            exps: exps.into_boxed_slice(),
        }
    }

    /// Pure lexicographic comparison (first variable most significant).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wdeg
            .cmp(&other.wdeg)
            .then_with(|| self.total_degree().cmp(&other.total_degree()))
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}
