use conekit::api;
use conekit::classify::{
    classify_abelian_cone, classify_elliptic_cone, classify_k3_cone, higher_index_table, Answer,
    MAX_FANO_GENUS,
};

#[test]
fn k3_genus_sweep() {
    for g in 2..=40u32 {
        let v = classify_k3_cone(g).unwrap();
        let expected = if g <= 10 || g == 12 {
            Answer::SmoothableGeneral
        } else {
            Answer::ConicalOnlyGeneral
        };
        assert_eq!(v.answer, expected, "genus {g}");
        assert!(v.caveats[0].contains("general"));
        let special = v.caveats.iter().any(|c| c.contains("Fano 3-fold with b2 >= 2"));
        assert_eq!(special, expected == Answer::ConicalOnlyGeneral, "genus {g}");
        let beyond = v.caveats.iter().any(|c| c.contains("open"));
        assert_eq!(beyond, g > MAX_FANO_GENUS, "genus {g}");
    }
}

#[test]
fn elliptic_flip() {
    for d in 1..=9 {
        assert_eq!(classify_elliptic_cone(d).unwrap().answer, Answer::Smoothable);
    }
    for d in 10..=30 {
        assert_eq!(classify_elliptic_cone(d).unwrap().answer, Answer::NotSmoothable);
    }
}

#[test]
fn abelian_cones() {
    assert_eq!(classify_abelian_cone(1).unwrap().answer, Answer::NeedsDegree);
    for n in 2..=6 {
        assert_eq!(classify_abelian_cone(n).unwrap().answer, Answer::ConicalOnly);
    }
}

#[test]
fn verdict_json_shape() {
    let v = serde_json::to_value(api::classify_k3(11).unwrap()).unwrap();
    assert_eq!(v["schema"], "conekit.verdict.v1");
    assert_eq!(v["subject"]["kind"], "k3");
    assert_eq!(v["subject"]["genus"], 11);
    assert_eq!(v["answer"], "ConicalOnlyGeneral");
    let f = serde_json::to_value(api::fano_table(5).unwrap()).unwrap();
    assert_eq!(f["rows"][0]["index"], 2);
    assert_eq!(f["generic_clifford_index"], 2);
    assert!(api::fano_table(1).is_err());
}

#[test]
fn fano_rows_cover_genus_two_to_six() {
    for g in 2..=6 {
        assert!(!higher_index_table(g).rows.is_empty());
    }
    for g in 7..=12 {
        assert!(higher_index_table(g).rows.is_empty());
    }
}
