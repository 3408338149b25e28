//! Serializable reports for the command line and the Python bindings.
//!
//! Each entry point takes its input as text (or a named model), a run-time
//! [`CoefficientField`], and returns a plain struct with a versioned
//! `schema` tag. Nothing here depends on wall-clock time, so equal inputs
//! give equal reports.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{self, FanoTable, Verdict};
use crate::corpus;
use crate::error::{Error, Result};
use crate::field::{CoefficientField, Field, PrimeField, Rationals};
use crate::groebner::{GbOptions, GroebnerBasis, Ideal, ORDER_NAME};
use crate::homology::{self, BettiTable, WahlOutcome};
use crate::pfaffian::{self, DeformMode, JacobianRank, SkewMatrix, SmoothnessVerdict};
use crate::poly::parse::format_ring;
use crate::poly::{parse_document, parse_poly, GradedDims, Polynomial, WeightedPolyRing};
use crate::t1::{self, MethodChoice, SymmetryCheck, T1Method};

/// Where an ideal comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// An input document; the first `ideal` block is used.
    Text(String),
    /// A corpus model; `seed` drives its random coefficients.
    Model { name: String, seed: u64 },
}

macro_rules! dispatch {
    ($cf:expr, |$f:ident| $body:expr) => {
        match $cf {
            CoefficientField::PrimeField(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
            CoefficientField::Rationals => {
                let $f = Rationals;
                $body
            }
        }
    };
}

fn load_ideal<F: Field>(src: &Source, field: F, opts: GbOptions) -> Result<Ideal<F>> {
    let ideal = match src {
        Source::Text(text) => {
            let doc = parse_document(text, field)?;
            let Some(gens) = doc.ideals.into_iter().next() else {
                return Err(Error::InvalidArgument("input has no ideal block".into()));
            };
            Ideal::new(&doc.ring, gens)?
        }
        Source::Model { name, seed } => corpus::model(name, field, *seed)?,
    };
    Ok(ideal.with_options(opts))
}

fn dims_map(d: &GradedDims) -> BTreeMap<i64, u64> {
    d.iter().collect()
}

fn strings<F: Field>(ring: &WeightedPolyRing<F>, ps: &[Polynomial<F>]) -> Vec<String> {
    ps.iter().map(|p| ring.format_poly(p)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GbOutput {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub order: &'static str,
    pub basis: Vec<String>,
    pub pairs_queued: usize,
}

pub fn gb(src: &Source, cf: CoefficientField, opts: GbOptions) -> Result<GbOutput> {
    dispatch!(cf, |f| {
        let ideal = load_ideal(src, f, opts)?;
        let gb = ideal.gb()?;
        Ok(GbOutput {
            schema: "conekit.gb.v1",
            ring: format_ring(ideal.ring()),
            field: cf,
            order: ORDER_NAME,
            basis: strings(ideal.ring(), gb.polys()),
            pairs_queued: gb.pairs_queued(),
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertOutput {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub dims: BTreeMap<i64, u64>,
    /// Coefficients of the numerator over `Π (1 - t^{w_i})`, lowest first.
    pub numerator: Vec<i64>,
    pub krull_dimension: i64,
    pub a_invariant: i64,
}

pub fn hilbert(
    src: &Source,
    cf: CoefficientField,
    d_min: u64,
    d_max: u64,
    opts: GbOptions,
) -> Result<HilbertOutput> {
    dispatch!(cf, |f| {
        let ideal = load_ideal(src, f, opts)?;
        let gb: &GroebnerBasis<_> = ideal.gb()?;
        Ok(HilbertOutput {
            schema: "conekit.hilbert.v1",
            ring: format_ring(ideal.ring()),
            field: cf,
            dims: dims_map(&gb.hilbert_function(d_min, d_max)?),
            numerator: gb.hilbert_numerator(),
            krull_dimension: gb.krull_dimension(),
            a_invariant: t1::a_invariant(gb),
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct T1Output {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub method: T1Method,
    pub center: i64,
    pub k_min: i64,
    pub k_max: i64,
    pub dims: BTreeMap<i64, u64>,
    pub seed: Option<u64>,
    pub syzygy_bound: Option<u64>,
    /// Present when the range is symmetric about the center.
    pub symmetry: Option<SymmetryCheck>,
}

pub fn t1(
    src: &Source,
    cf: CoefficientField,
    k_min: i64,
    k_max: i64,
    method: MethodChoice,
    opts: GbOptions,
) -> Result<T1Output> {
    dispatch!(cf, |f| {
        let ideal = load_ideal(src, f, opts)?;
        let seed = match src {
            Source::Model { seed, .. } => Some(*seed),
            Source::Text(_) => None,
        };
        let rep = t1::t1(&ideal, k_min, k_max, method)?.with_seed(seed);
        let symmetry = t1::check_t1_symmetry(&rep, rep.center).ok();
        Ok(T1Output {
            schema: "conekit.t1.v1",
            ring: format_ring(ideal.ring()),
            field: cf,
            method: rep.method,
            center: rep.center,
            k_min,
            k_max,
            dims: dims_map(&rep.dims),
            seed: rep.seed,
            syzygy_bound: rep.syzygy_bound,
            symmetry,
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiOutput {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub table: BettiTable,
    /// Total degrees at which the Euler characteristic identity was checked.
    pub euler_degrees: Vec<usize>,
}

pub fn betti(
    src: &Source,
    cf: CoefficientField,
    p_max: usize,
    q_max: usize,
    strand_cap: usize,
    opts: GbOptions,
) -> Result<BettiOutput> {
    dispatch!(cf, |f| {
        let ideal = load_ideal(src, f, opts)?;
        let table = homology::betti_table_capped(&ideal, p_max, q_max, strand_cap)?;
        let euler = homology::euler_check(&ideal, &table)?;
        Ok(BettiOutput {
            schema: "conekit.betti.v1",
            ring: format_ring(ideal.ring()),
            field: cf,
            table,
            euler_degrees: euler.iter().map(|e| e.degree).collect(),
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WahlOutput {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub beta_1_1: u64,
    pub beta_1_2: u64,
    pub beta_2_2: u64,
    pub wahl: WahlOutcome,
}

pub fn wahl(src: &Source, cf: CoefficientField, opts: GbOptions) -> Result<WahlOutput> {
    dispatch!(cf, |f| {
        let ideal = load_ideal(src, f, opts)?;
        let table = homology::betti_table(&ideal, 2, 2)?;
        let wahl = homology::wahl_criterion(&table)?;
        let cell = |p, q| table.get(p, q).expect("inside the window");
        Ok(WahlOutput {
            schema: "conekit.wahl.v1",
            ring: format_ring(ideal.ring()),
            field: cf,
            beta_1_1: cell(1, 1),
            beta_1_2: cell(1, 2),
            beta_2_2: cell(2, 2),
            wahl,
        })
    })
}

/// A requested perturbation, with polynomials in the input's ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformSpec {
    pub lambda: String,
    pub h: [String; 3],
    pub mode: DeformMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    pub trials: usize,
    pub seed: u64,
    /// Dimension of `V(I)` in affine space; defaults to `n - 3`.
    pub expected_dim: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PfaffOutput {
    pub schema: &'static str,
    pub ring: String,
    pub field: CoefficientField,
    pub size: usize,
    pub degree_matrix: String,
    /// Display order: last deleted index first, lex-leading coefficient
    /// positive.
    pub pfaffians: Vec<String>,
    /// Index order with the `(-1)^(i+1)` signs.
    pub signed_pfaffians: Vec<String>,
    pub mode: Option<DeformMode>,
    pub entries: Vec<String>,
    pub origin: Option<JacobianRank>,
    pub sample: Option<SmoothnessVerdict>,
}

fn pfaff_generic<F: Field>(
    text: &str,
    field: F,
    cf: CoefficientField,
    deform: Option<&DeformSpec>,
    sample: Option<SampleSpec>,
    sampler: impl Fn(&WeightedPolyRing<F>, &[Polynomial<F>], usize, SampleSpec) -> Result<SmoothnessVerdict>,
) -> Result<PfaffOutput> {
    let doc = parse_document(text, field)?;
    let Some(block) = doc.matrices.into_iter().next() else {
        return Err(Error::InvalidArgument("input has no skewmatrix block".into()));
    };
    let ring = doc.ring;
    let mut m = SkewMatrix::new(&ring, block.size, block.entries)?;
    if let Some(d) = deform {
        let lambda = parse_poly(&ring, &d.lambda)?;
        if !lambda.is_constant() {
            return Err(Error::InvalidArgument("lambda must be a constant".into()));
        }
        let lambda = lambda
            .terms()
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| ring.field().zero());
        let h: Vec<Polynomial<F>> = d
            .h
            .iter()
            .map(|s| parse_poly(&ring, s))
            .collect::<Result<_>>()?;
        m = pfaffian::deform_matrix(&m, &lambda, [&h[0], &h[1], &h[2]], d.mode)?;
    }
    let signed = pfaffian::pfaffians_4x4(&m)?;
    let shown = pfaffian::pfaffians_display(&m)?;
    let origin = if deform.is_some() {
        let zero = vec![ring.field().zero(); ring.nvars()];
        Some(pfaffian::jacobian_rank_at(&ring, &signed, &zero)?)
    } else {
        None
    };
    let sample = match sample {
        None => None,
        Some(s) => {
            let n = ring.nvars();
            let dim = s.expected_dim.unwrap_or(n.saturating_sub(3));
            Some(sampler(&ring, &signed, dim, s)?)
        }
    };
    Ok(PfaffOutput {
        schema: "conekit.pfaff.v1",
        ring: format_ring(&ring),
        field: cf,
        size: m.size(),
        degree_matrix: m.format_degree_matrix(),
        pfaffians: strings(&ring, &shown),
        signed_pfaffians: strings(&ring, &signed),
        mode: m.mode(),
        entries: strings(&ring, m.upper_entries()),
        origin,
        sample,
    })
}

pub fn pfaff(
    text: &str,
    cf: CoefficientField,
    deform: Option<&DeformSpec>,
    sample: Option<SampleSpec>,
) -> Result<PfaffOutput> {
    match cf {
        CoefficientField::PrimeField(p) => {
            let f = PrimeField::new(p)?;
            pfaff_generic(text, f, cf, deform, sample, |ring, gens, dim, s| {
                pfaffian::smoothness_sample(ring, gens, dim, s.trials, s.seed)
            })
        }
        CoefficientField::Rationals => {
            pfaff_generic(text, Rationals, cf, deform, sample, |_, _, _, _| {
                Err(Error::Unsupported(
                    "point sampling needs a prime field".into(),
                ))
            })
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictOutput {
    pub schema: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

fn verdict(v: Verdict) -> VerdictOutput {
    VerdictOutput {
        schema: "conekit.verdict.v1",
        verdict: v,
    }
}

pub fn classify_k3(genus: u32) -> Result<VerdictOutput> {
    classify::classify_k3_cone(genus).map(verdict)
}

pub fn classify_elliptic(degree: u32) -> Result<VerdictOutput> {
    classify::classify_elliptic_cone(degree).map(verdict)
}

pub fn classify_abelian(dim: u32) -> Result<VerdictOutput> {
    classify::classify_abelian_cone(dim).map(verdict)
}

#[derive(Debug, Clone, Serialize)]
pub struct FanoOutput {
    pub schema: &'static str,
    #[serde(flatten)]
    pub table: FanoTable,
    pub generic_clifford_index: u32,
    pub wahl_vanishing_predicted: bool,
    pub chi_tangent_twist_1: i64,
}

pub fn fano_table(genus: u32) -> Result<FanoOutput> {
    Ok(FanoOutput {
        schema: "conekit.fano.v1",
        table: classify::higher_index_table(genus),
        generic_clifford_index: classify::generic_clifford_index(genus)?,
        wahl_vanishing_predicted: classify::wahl_vanishing_predicted(genus)?,
        chi_tangent_twist_1: classify::chi_tangent_twist(genus, 1)?,
    })
}
