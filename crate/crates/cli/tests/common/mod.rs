#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const H1: &str = "h1=x1^2 + 3*x2*x6 - x4";
pub const H2: &str = "h2=x3^2 - x5 + 2";
pub const H3: &str = "h3=x6^3 - x1*x2 + x4^2";

/// Golden reports: file stem and arguments, run from the workspace root.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("t1_quartic", &["t1", "--input", "data/quartic.ck", "--range", "-4..4"]),
    ("t1_quartic_qq", &["t1", "--input", "data/quartic.ck", "--range", "-4..4", "--field", "QQ"]),
    ("t1_cubic_curve", &["t1", "--input", "data/cubic_curve.ck", "--range", "-3..1"]),
    ("t1_genus4", &["t1", "--input", "data/genus4.ck", "--range", "-4..4", "--method", "ci"]),
    ("t1_genus6", &["t1", "--model", "k3-genus6", "--seed", "1", "--range", "-2..2"]),
    ("t1_segre", &["t1", "--input", "data/segre.ck", "--range", "-2..2"]),
    ("gb_segre", &["gb", "--input", "data/segre.ck"]),
    ("hilbert_plucker", &["hilbert", "--input", "data/plucker.ck", "--range", "0..6"]),
    ("betti_quartic", &["betti", "--input", "data/quartic.ck"]),
    ("betti_genus6", &["betti", "--model", "k3-genus6", "--seed", "1", "--p-max", "4", "--q-max", "3"]),
    ("wahl_quartic", &["wahl", "--input", "data/quartic.ck"]),
    ("wahl_segre", &["wahl", "--input", "data/segre.ck"]),
    ("pfaff_symbolic", &["pfaff", "--input", "data/divisor_format.ck"]),
    (
        "pfaff_lambda0",
        &["pfaff", "--input", "data/divisor_cubic.ck", "--deform", "lambda=0", H1, H2, H3, "--sample", "20", "--seed", "3"],
    ),
    (
        "pfaff_lambda1",
        &["pfaff", "--input", "data/divisor_cubic.ck", "--deform", "lambda=1", H1, H2, H3, "--sample", "150", "--seed", "3"],
    ),
    ("classify_k3_10", &["classify", "k3", "--genus", "10"]),
    ("classify_k3_11", &["classify", "k3", "--genus", "11"]),
    ("classify_k3_12", &["classify", "k3", "--genus", "12"]),
    ("classify_k3_33", &["classify", "k3", "--genus", "33"]),
    ("classify_elliptic_9", &["classify", "elliptic", "--degree", "9"]),
    ("classify_elliptic_10", &["classify", "elliptic", "--degree", "10"]),
    ("classify_abelian_1", &["classify", "abelian", "--dim", "1"]),
    ("classify_abelian_2", &["classify", "abelian", "--dim", "2"]),
    ("fano_table_4", &["fano-table", "--genus", "4"]),
    ("fano_table_6", &["fano-table", "--genus", "6"]),
    ("fano_table_7", &["fano-table", "--genus", "7"]),
];

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

pub fn golden_path(stem: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{stem}.json"))
}

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Run the built binary from the workspace root with a clean seed variable.
pub fn run_binary(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_conekit"))
        .args(args)
        .current_dir(workspace_root())
        .env_remove("CONEKIT_SEED")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}
