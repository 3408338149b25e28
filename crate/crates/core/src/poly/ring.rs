use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::poly::{Monomial, Polynomial};

/// Polynomial ring over `F` with one positive integer weight per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPolyRing<F: Field> {
    vars: Vec<String>,
    weights: Vec<u32>,
    field: F,
}

impl WeightedPolyRing<PrimeField> {
    /// Standard-graded ring over the default prime field.
    pub fn standard_default<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        Self::standard(vars, PrimeField::default())
    }
}

impl<F: Field> WeightedPolyRing<F> {
    pub fn new(vars: Vec<String>, weights: Vec<u32>, field: F) -> Result<Self> {
        if vars.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} variables but {} weights",
                vars.len(),
                weights.len()
            )));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable '{v}'")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidArgument(format!(
                "weight of '{}' must be positive",
                vars[i]
            )));
        }
        Ok(WeightedPolyRing {
            vars,
            weights,
            field,
        })
    }

    pub fn standard<S: AsRef<str>>(vars: &[S], field: F) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        Self::new(names, vec![1; n], field)
    }

    /// Standard-graded ring with variables `prefix0 .. prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize, field: F) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(names, vec![1; n], field).expect("indexed names are distinct")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and weights over another field.
    pub fn with_field<G: Field>(&self, field: G) -> WeightedPolyRing<G> {
        WeightedPolyRing {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            field,
        }
    }

    /// True when variables and weights agree (fields are compared by type).
    pub fn same_shape(&self, other: &Self) -> bool {
        self.vars == other.vars && self.weights == other.weights && self.field == other.field
    }

    pub fn monomial(&self, exps: Vec<u16>) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e)
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        Polynomial::from_monomial(self.var_monomial(i), self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial::from_monomial(self.one_monomial(), c)
        }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    /// All monomials of weighted degree `d`, largest first in the ring order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u16; n];
        fn rec(
            i: usize,
            remaining: u64,
            weights: &[u32],
            exps: &mut Vec<u16>,
            out: &mut Vec<Vec<u16>>,
        ) {
            if i == weights.len() {
                if remaining == 0 {
                    out.push(exps.clone());
                }
                return;
            }
            let w = weights[i] as u64;
            let max = (remaining / w).min(u16::MAX as u64);
            for e in (0..=max).rev() {
                exps[i] = e as u16;
                rec(i + 1, remaining - e * w, weights, exps, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        rec(0, d, &self.weights, &mut exps, &mut out);
        let mut mons: Vec<Monomial> = out.into_iter().map(|e| self.monomial(e)).collect();
        mons.sort_by(|a, b| b.cmp(a));
        mons
    }

    /// Number of monomials of each weighted degree `0..=d_max`, by expanding
    /// the product of `1/(1 - t^w)`.
    pub fn monomial_counts(&self, d_max: usize) -> Vec<u64> {
        let mut series = vec![0u64; d_max + 1];
        series[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            for d in w..=d_max {
                series[d] += series[d - w];
            }
        }
        series
    }

    /// Random homogeneous polynomial of weighted degree `d` with every
    /// coefficient drawn from the field.
    pub fn random_form<R: rand::Rng + ?Sized>(&self, d: u64, rng: &mut R) -> Polynomial<F> {
        let terms = self
            .monomials_of_degree(d)
            .into_iter()
            .map(|m| (m, self.field.random(rng)))
            .collect();
        Polynomial::from_terms(&self.field, terms)
    }

    /// Random polynomial with all weighted degrees `0..=d` present.
    pub fn random_poly_up_to<R: rand::Rng + ?Sized>(&self, d: u64, rng: &mut R) -> Polynomial<F> {
        let mut p = Polynomial::zero();
        for e in 0..=d {
            p = p.add(&self.random_form(e, rng), &self.field);
        }
        p
    }

    /// Render a polynomial in the input language.
    pub fn format_poly(&self, p: &Polynomial<F>) -> String {
        super::format::format_poly(self, p)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        super::format::format_monomial(self, m)
    }
}
