//! Graded Betti numbers of `R = S/I` as Koszul cohomology, plus the
//! resolution-shape tests built on them.
//!
//! `β_{p,q}` is the cohomology at the middle of
//! `Λ^{p+1}V ⊗ R_{q-1} → Λ^pV ⊗ R_q → Λ^{p-1}V ⊗ R_{q+1}` where `V` is
//! the space of linear forms; it counts degree `p+q` summands in position
//! `p` of the minimal resolution.

use std::collections::HashMap;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::linalg::{rank, SparseVec};

/// Columns allowed in one strand map before a cell is left uncomputed.
pub const DEFAULT_STRAND_CAP: usize = 20_000;

/// Betti numbers over a window `0 ≤ p ≤ p_max`, `0 ≤ q ≤ q_max`; `None`
/// marks a cell that was not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub nvars: usize,
    pub p_max: usize,
    pub q_max: usize,
    cells: Vec<Vec<Option<u64>>>,
}

impl BettiTable {
    /// `β_{p,q}`; zero outside `0 ≤ p ≤ nvars`, `None` if not computed.
    pub fn get(&self, p: i64, q: i64) -> Option<u64> {
        if p < 0 || q < 0 || p as usize > self.nvars {
            return Some(0);
        }
        let (p, q) = (p as usize, q as usize);
        if p > self.p_max || q > self.q_max {
            return None;
        }
        self.cells[q][p]
    }

    /// True if every cell is known.
    pub fn is_complete(&self) -> bool {
        self.cells.iter().flatten().all(Option::is_some)
    }

    /// Row `q` of the table (`β_{0,q}, β_{1,q}, …`).
    pub fn row(&self, q: usize) -> &[Option<u64>] {
        &self.cells[q]
    }

    /// Macaulay-style text rendering, `?` for unknown cells.
    pub fn render(&self) -> String {
        let w = self
            .cells
            .iter()
            .flatten()
            .map(|c| c.map_or(1, |v| v.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(self.p_max.to_string().len());
        let mut out = format!("{:>4}", "");
        for p in 0..=self.p_max {
            out.push_str(&format!(" {p:>w$}"));
        }
        out.push('\n');
        for (q, row) in self.cells.iter().enumerate() {
            out.push_str(&format!("{:>3}:", q));
            for c in row {
                let s = match c {
                    None => "?".to_string(),
                    Some(0) => "-".to_string(),
                    Some(v) => v.to_string(),
                };
                out.push_str(&format!(" {s:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

struct Row<'a>(&'a [Option<u64>]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in self.0 {
            match c {
                Some(v) => seq.serialize_element(v)?,
                None => seq.serialize_element("unknown")?,
            }
        }
        seq.end()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row> = self.cells.iter().map(|r| Row(r)).collect();
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("nvars", &self.nvars)?;
        m.serialize_entry("p_max", &self.p_max)?;
        m.serialize_entry("q_max", &self.q_max)?;
        m.serialize_entry("rows", &rows)?;
        m.end()
    }
}

/// Lexicographically ordered `p`-subsets of `0..n`.
fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    go(0, n, p, &mut cur, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Koszul strands of one quotient ring, with ranks memoised.
struct Strands<'a, F: Field> {
    q: QuotientRing<'a, F>,
    n: usize,
    cap: usize,
    ranks: HashMap<(usize, usize), Option<usize>>,
}

impl<'a, F: Field> Strands<'a, F> {
    fn width(&mut self, p: usize, q: usize) -> usize {
        binomial(self.n, p) * self.q.dim(q as u64)
    }

    /// Rank of `Λ^pV ⊗ R_q → Λ^{p-1}V ⊗ R_{q+1}`; `None` over the cap.
    fn rank(&mut self, p: usize, q: usize) -> Option<usize> {
        if p == 0 || p > self.n {
            return Some(0);
        }
        if let Some(r) = self.ranks.get(&(p, q)) {
            return *r;
        }
        let r = self.compute_rank(p, q);
        self.ranks.insert((p, q), r);
        r
    }

    #[allow(clippy::needless_range_loop)]
    fn compute_rank(&mut self, p: usize, q: usize) -> Option<usize> {
        let n = self.n;
        let src_dim = self.q.dim(q as u64);
        let dst_dim = self.q.dim(q as u64 + 1);
        if src_dim == 0 || dst_dim == 0 {
            return Some(0);
        }
        if binomial(n, p) * src_dim > self.cap || binomial(n, p - 1) * dst_dim > self.cap {
            return None;
        }
        let field = self.q.gb().ring().field().clone();
        let ring = self.q.gb().ring().clone();
        let lower: HashMap<Vec<usize>, usize> = subsets(n, p - 1)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        // x_i · (basis element j of R_q), as a vector in R_{q+1}
        let mut mult: Vec<Vec<SparseVec<F::Elem>>> = Vec::with_capacity(n);
        for i in 0..n {
            let xi = ring.var_monomial(i);
            mult.push(
                (0..src_dim)
                    .map(|j| self.q.mul_monomial(&[(j, field.one())], q as u64, &xi))
                    .collect(),
            );
        }
        let mut rows: Vec<SparseVec<F::Elem>> = Vec::new();
        for s in subsets(n, p) {
            for j in 0..src_dim {
                let mut v: SparseVec<F::Elem> = Vec::new();
                for (k, &i) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(k);
                    let base = lower[&rest] * dst_dim;
                    for (t, c) in &mult[i][j] {
                        let c = if k % 2 == 0 { c.clone() } else { field.neg(c) };
                        v.push((base + t, c));
                    }
                }
                v.sort_by_key(|(k, _)| *k);
                rows.push(v);
            }
        }
        Some(rank(&field, binomial(n, p - 1) * dst_dim, &rows))
    }

    fn betti(&mut self, p: usize, q: usize) -> Option<u64> {
        if p > self.n {
            return Some(0);
        }
        let w = self.width(p, q);
        if w > self.cap {
            return None;
        }
        let out = self.rank(p, q)?;
        let inc = if q == 0 { 0 } else { self.rank(p + 1, q - 1)? };
        Some((w - out - inc) as u64)
    }
}

fn strands<F: Field>(ideal: &Ideal<F>, cap: usize) -> Result<Strands<'_, F>> {
    let ring = ideal.ring();
    if !ring.is_standard_graded() {
        return Err(Error::Unsupported(
            "Betti numbers are computed for standard-graded rings only".into(),
        ));
    }
    let gb = ideal.gb()?;
    Ok(Strands {
        q: QuotientRing::new(gb),
        n: ring.nvars(),
        cap,
        ranks: HashMap::new(),
    })
}

/// A single Betti number `β_{p,q}` of `S/I`.
pub fn koszul_betti<F: Field>(ideal: &Ideal<F>, p: usize, q: usize) -> Result<u64> {
    let mut st = strands(ideal, DEFAULT_STRAND_CAP)?;
    st.betti(p, q).ok_or_else(|| {
        Error::ResourceCap(format!(
            "Koszul strand at ({p},{q}) exceeds {DEFAULT_STRAND_CAP} columns"
        ))
    })
}

/// Betti numbers over the window `p ≤ p_max`, `q ≤ q_max`. Cells whose
/// strand exceeds `cap` columns are left unknown.
pub fn betti_table_capped<F: Field>(
    ideal: &Ideal<F>,
    p_max: usize,
    q_max: usize,
    cap: usize,
) -> Result<BettiTable> {
    let mut st = strands(ideal, cap)?;
    let cells = (0..=q_max)
        .map(|q| (0..=p_max).map(|p| st.betti(p, q)).collect())
        .collect();
    Ok(BettiTable {
        nvars: st.n,
        p_max,
        q_max,
        cells,
    })
}

pub fn betti_table<F: Field>(ideal: &Ideal<F>, p_max: usize, q_max: usize) -> Result<BettiTable> {
    betti_table_capped(ideal, p_max, q_max, DEFAULT_STRAND_CAP)
}

/// Wahl's resolution-shape test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WahlOutcome {
    pub holds: bool,
    pub reason: String,
}

/// Holds when the ideal has quadric generators and the resolution has no
/// cubic generators and no quadratic second syzygies: `β_{1,1} > 0`,
/// `β_{1,2} = β_{2,2} = 0`. An ideal without quadrics does not have the
/// required shape and fails with reason "no quadric strand".
pub fn wahl_criterion(table: &BettiTable) -> Result<WahlOutcome> {
    let cell = |p, q| {
        table.get(p, q).ok_or_else(|| {
            Error::WindowTooSmall(format!("the Wahl test needs β({p},{q})"))
        })
    };
    let (b11, b12, b22) = (cell(1, 1)?, cell(1, 2)?, cell(2, 2)?);
    let out = if b11 == 0 {
        WahlOutcome {
            holds: false,
            reason: "no quadric strand".into(),
        }
    } else if b12 != 0 {
        WahlOutcome {
            holds: false,
            reason: format!("β(1,2) = {b12}: cubic generators"),
        }
    } else if b22 != 0 {
        WahlOutcome {
            holds: false,
            reason: format!("β(2,2) = {b22}: quadratic relations among the syzygies"),
        }
    } else {
        WahlOutcome {
            holds: true,
            reason: "resolution begins O ← O(-2)^a ← O(-3)^b".into(),
        }
    };
    Ok(out)
}

/// `β_{1,2} = β_{2,2} = 0` exactly when `β_{g-3,1} = β_{g-4,1} = 0`, read
/// off the computed table for a genus `g` surface or canonical curve.
pub fn koszul_duality_check(table: &BettiTable, g: i64) -> Result<bool> {
    let cell = |p: i64, q: i64| {
        table.get(p, q).ok_or_else(|| {
            Error::WindowTooSmall(format!("the duality check needs β({p},{q})"))
        })
    };
    let left = cell(1, 2)? == 0 && cell(2, 2)? == 0;
    let right = cell(g - 3, 1)? == 0 && cell(g - 4, 1)? == 0;
    Ok(left == right)
}

/// Result of one symmetric-pair comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub holds: bool,
    pub compared: usize,
    pub first_violation: Option<(usize, usize)>,
}

/// `β_{p,q} = β_{c-p, s-q}` on every in-window pair with both cells known.
/// For the cone over a K3 surface `c` is the codimension and `s = 3`.
pub fn gorenstein_duality_check(table: &BettiTable, c: usize, s: usize) -> DualityReport {
    let mut compared = 0;
    for q in 0..=table.q_max.min(s) {
        for p in 0..=table.p_max.min(c) {
            let (a, b) = (
                table.get(p as i64, q as i64),
                table.get((c - p) as i64, (s - q) as i64),
            );
            if let (Some(a), Some(b)) = (a, b) {
                compared += 1;
                if a != b {
                    return DualityReport {
                        holds: false,
                        compared,
                        first_violation: Some((p, q)),
                    };
                }
            }
        }
    }
    DualityReport {
        holds: true,
        compared,
        first_violation: None,
    }
}

/// Per total degree `t`: `Σ_p (-1)^p C(n,p) h(t-p) = Σ_p (-1)^p β_{p,t-p}`,
/// with `h` the Hilbert function from the Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub degree: usize,
    pub from_hilbert: i64,
    pub from_betti: i64,
}

/// Check every total degree whose cells all lie in the window and are
/// known. Returns the checked degrees; an error if one disagrees.
pub fn euler_check<F: Field>(ideal: &Ideal<F>, table: &BettiTable) -> Result<Vec<EulerCheck>> {
    let n = table.nvars;
    let h = ideal.gb()?.hilbert_function(0, (table.q_max + n) as u64)?;
    let mut out = Vec::new();
    for t in 0..=table.q_max + table.p_max {
        let ps = 0..=t.min(n);
        let cells: Option<Vec<u64>> = ps
            .clone()
            .map(|p| table.get(p as i64, (t - p) as i64))
            .collect();
        let Some(cells) = cells else { continue };
        let sign = |p: usize| if p.is_multiple_of(2) { 1i64 } else { -1 };
        let from_betti: i64 = cells.iter().enumerate().map(|(p, &b)| sign(p) * b as i64).sum();
        let from_hilbert: i64 = ps
            .map(|p| sign(p) * (binomial(n, p) as i64) * h.get((t - p) as i64).unwrap_or(0) as i64)
            .sum();
        if from_betti != from_hilbert {
            return Err(Error::InvalidArgument(format!(
                "Euler characteristic mismatch in degree {t}: {from_hilbert} vs {from_betti}"
            )));
        }
        out.push(EulerCheck {
            degree: t,
            from_hilbert,
            from_betti,
        });
    }
    Ok(out)
}

/// Clifford-index prediction for the linear strand: `β_{p,1} ≠ 0` iff a
/// `g^r_d` with `d - 2r ≤ g - 2 - p` exists, i.e. iff `p ≤ g - 2 - cliff`.
pub fn green_predicts_nonzero(g: i64, cliff: i64, p: i64) -> bool {
    p >= 1 && p <= g - 2 - cliff
}

/// One row of the linear-strand comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenRow {
    pub p: usize,
    pub predicted_nonzero: bool,
    pub observed: u64,
}

/// Compare the linear strand `β_{p,1}`, `1 ≤ p ≤ g-2`, with the prediction.
pub fn green_dictionary(table: &BettiTable, g: i64, cliff: i64) -> Result<Vec<GreenRow>> {
    (1..=(g - 2).max(0))
        .map(|p| {
            let observed = table.get(p, 1).ok_or_else(|| {
                Error::WindowTooSmall(format!("the linear strand needs β({p},1)"))
            })?;
            Ok(GreenRow {
                p: p as usize,
                predicted_nonzero: green_predicts_nonzero(g, cliff, p),
                observed,
            })
        })
        .collect()
}
