//! Table-driven smoothability verdicts for cones over K3 surfaces,
//! elliptic curves and abelian varieties, and the small numerical facts
//! around them.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Subject {
    K3 { genus: u32 },
    Elliptic { degree: u32 },
    Abelian { dim: u32 },
}

/// "General" answers hold for a general member of the family and can fail
/// for special ones; the others hold for every member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Answer {
    SmoothableGeneral,
    ConicalOnlyGeneral,
    Smoothable,
    ConicalOnly,
    /// Not smoothable, though it may still have non-conical deformations.
    NotSmoothable,
    /// The question needs more data (a curve needs its degree).
    NeedsDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub subject: Subject,
    pub answer: Answer,
    pub caveats: Vec<String>,
    pub citations: Vec<String>,
}

/// Largest K3 genus appearing among anticanonical sections of smooth Fano
/// 3-folds.
pub const MAX_FANO_GENUS: u32 = 32;

pub fn classify_k3_cone(g: u32) -> Result<Verdict> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("K3 genus must be at least 2, got {g}")));
    }
    let smoothable = g <= 10 || g == 12;
    let mut caveats = vec![
        "holds for a general polarized K3 of this genus; generality is assumed, not checked"
            .to_string(),
    ];
    let mut citations = vec!["k3-genus-bound".to_string()];
    if !smoothable {
        caveats.push(
            "special K3s of this genus that are anticanonical sections of a Fano 3-fold \
             with b2 >= 2 still have smoothable cones"
                .to_string(),
        );
        citations.push("special-k3-smoothings".to_string());
    }
    if g > MAX_FANO_GENUS {
        caveats.push(format!(
            "genus exceeds {MAX_FANO_GENUS}, the largest in the Fano 3-fold classification: \
             no smoothing of this cone lifts to the projective cone, and whether any \
             smoothing exists at all is open"
        ));
        citations.push("beyond-fano-genus".to_string());
    }
    Ok(Verdict {
        subject: Subject::K3 { genus: g },
        answer: if smoothable {
            Answer::SmoothableGeneral
        } else {
            Answer::ConicalOnlyGeneral
        },
        caveats,
        citations,
    })
}

pub fn classify_elliptic_cone(d: u32) -> Result<Verdict> {
    if d < 1 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let smoothable = d <= 9;
    let caveats = if smoothable {
        vec!["a smoothing sweeps out the cone over a del Pezzo surface of this degree".into()]
    } else {
        vec!["a smoothing would produce a del Pezzo surface of degree above 9".into()]
    };
    Ok(Verdict {
        subject: Subject::Elliptic { degree: d },
        answer: if smoothable {
            Answer::Smoothable
        } else {
            Answer::NotSmoothable
        },
        caveats,
        citations: vec!["elliptic-degree-bound".into()],
    })
}

pub fn classify_abelian_cone(n: u32) -> Result<Verdict> {
    match n {
        0 => Err(Error::InvalidArgument("dimension must be at least 1".into())),
        1 => Ok(Verdict {
            subject: Subject::Abelian { dim: 1 },
            answer: Answer::NeedsDegree,
            caveats: vec!["a one-dimensional abelian variety is an elliptic curve: \
                           use the elliptic classification with its degree"
                .into()],
            citations: vec!["elliptic-degree-bound".into()],
        }),
        n => Ok(Verdict {
            subject: Subject::Abelian { dim: n },
            answer: Answer::ConicalOnly,
            caveats: Vec::new(),
            citations: vec!["abelian-conical".into()],
        }),
    }
}

/// `⌊(g-1)/2⌋`, the Clifford index of a general curve of genus `g`.
pub fn generic_clifford_index(g: u32) -> Result<u32> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus must be at least 2, got {g}")));
    }
    Ok((g - 1) / 2)
}

/// Whether `T¹(k) = 0` for `|k| ≥ 2` is predicted for a general K3 of
/// genus `g` (Clifford index above 2).
pub fn wahl_vanishing_predicted(g: u32) -> Result<bool> {
    Ok(generic_clifford_index(g)? > 2)
}

/// `-χ(T_S(kL)) = 20 - k²(2g-2)` for a K3 of genus `g`.
pub fn chi_tangent_twist(g: u32, k: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus must be at least 2, got {g}")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be nonzero".into()));
    }
    Ok(20 - k * k * (2 * g as i64 - 2))
}

/// A Fano 3-fold of index above 1 and Picard rank 1 containing K3
/// surfaces of genus `g` as sections of the ample generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoRow {
    pub genus: u32,
    pub model: &'static str,
    pub index: u32,
    pub description: &'static str,
}

const FANO_ROWS: &[(u32, &str, u32, &str)] = &[
    (2, "W_6 in P(1,1,1,2,3)", 2, "del Pezzo 3-fold of degree 1"),
    (3, "W_4 in P(1^4,4)", 4, "P^3"),
    (3, "W_4 in P(1^4,2)", 2, "del Pezzo 3-fold of degree 2"),
    (4, "W_{2,3} in P(1^5,2)", 2, "cubic 3-fold"),
    (4, "W_{2,3} in P(1^5,3)", 3, "quadric 3-fold"),
    (5, "W_{2,2,2} in P(1^6,2)", 2, "intersection of two quadrics"),
    (6, "H_1 ∩ H_2 ∩ H_3 ∩ Gr(2,5) in P^6", 2, "del Pezzo 3-fold of degree 5"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoTable {
    pub genus: u32,
    pub rows: Vec<FanoRow>,
    pub note: Option<String>,
}

/// Rows for genus `g`. Outside `2..=6` the list is empty; the note says
/// why for genus 7.
pub fn higher_index_table(g: u32) -> FanoTable {
    let rows: Vec<FanoRow> = FANO_ROWS
        .iter()
        .filter(|r| r.0 == g)
        .map(|&(genus, model, index, description)| FanoRow {
            genus,
            model,
            index,
            description,
        })
        .collect();
    let note = if !rows.is_empty() {
        None
    } else if g == 7 {
        Some(
            "P^1×P^1×P^1 and P^2×P^2 have higher index but Picard rank above 1; their K3 \
             sections have genus 7 and non-maximal Clifford index"
                .to_string(),
        )
    } else {
        Some("higher-index Fano 3-folds of Picard rank 1 only occur for genus 2 to 6".to_string())
    };
    FanoTable { genus: g, rows, note }
}
