//! Reports compared byte for byte with the files in `tests/golden`.
//! Set `CONEKIT_UPDATE_GOLDEN=1` to rewrite them.

mod common;

use common::{golden_path, run_binary, GOLDEN};

#[test]
fn reports_match_golden_files() {
    let update = std::env::var_os("CONEKIT_UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for (stem, args) in GOLDEN {
        let run = run_binary(args);
        assert_eq!(run.code, 0, "{stem}: {}", run.stderr);
        let path = golden_path(stem);
        if update {
            std::fs::write(&path, &run.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if expected != run.stdout {
            mismatched.push(*stem);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch: {mismatched:?}");
}

#[test]
fn manifest_goes_to_a_file_when_asked() {
    let dir = std::env::temp_dir().join(format!("conekit-manifest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let p = path.to_str().unwrap();
    let run = run_binary(&["t1", "--input", "data/quartic.ck", "--range", "-1..1", "--manifest", p]);
    assert_eq!(run.code, 0);
    assert!(run.stderr.is_empty());
    let m: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(m["subcommand"], "t1");
    assert_eq!(m["bounds"]["range"], serde_json::json!([-1, 1]));
    assert_eq!(m["input_sha256"].as_str().unwrap().len(), 64);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes_and_errors() {
    let bad = run_binary(&["t1", "--input", "data/nonexistent.ck", "--range", "0..1"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.is_empty());
    let refused = run_binary(&[
        "pfaff", "--input", "data/divisor_format.ck", "--deform", "lambda=1", "--mode", "projective",
    ]);
    assert_eq!(refused.code, 1);
    assert!(refused.stderr.contains("degree violation"));
    let capped = run_binary(&["gb", "--model", "k3-genus6", "--max-pairs", "2"]);
    assert_eq!(capped.code, 2);
    assert_eq!(run_binary(&["nonsense"]).code, 1);
}

#[test]
fn seed_variable_overrides_flag() {
    let args = ["hilbert", "--model", "k3-genus5", "--seed", "4", "--range", "0..4"];
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_conekit"))
        .args(args)
        .current_dir(common::workspace_root())
        .env("CONEKIT_SEED", "11")
        .output()
        .unwrap();
    let manifest = String::from_utf8(out.stderr).unwrap();
    assert!(manifest.contains("\"seed\":11"), "{manifest}");
}
