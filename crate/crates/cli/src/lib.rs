//! The `conekit` command line: argument parsing, dispatch into
//! [`conekit::api`], report rendering and the run manifest.
//!
//! Reports go to stdout and depend only on the arguments and the input
//! bytes. Everything run-specific (timing, hashes, version) goes into the
//! manifest, on stderr or in the file named by `--manifest`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use conekit::api::{self, DeformSpec, SampleSpec, Source};
use conekit::groebner::{GbOptions, DEFAULT_PAIR_CAP};
use conekit::homology::DEFAULT_STRAND_CAP;
use conekit::pfaffian::DeformMode;
use conekit::t1::MethodChoice;
use conekit::{CoefficientField, Error};

pub const SEED_ENV: &str = "CONEKIT_SEED";

#[derive(Debug, Parser)]
#[command(name = "conekit", version, about = "Exact deformation theory of affine cones")]
pub struct Cli {
    /// Coefficient field: a prime such as 32003, GF(p), or QQ.
    #[arg(long, global = true, default_value = "32003")]
    field: String,
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Input file in the .ck language.
    #[arg(long)]
    input: Option<PathBuf>,
    /// A built-in model instead of an input file.
    #[arg(long)]
    model: Option<String>,
}

#[derive(Debug, Args)]
struct Common {
    #[command(flatten)]
    input: InputArgs,
    /// Seed for model coefficients (overridden by CONEKIT_SEED).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Give up after this many critical pairs.
    #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
    max_pairs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of S/I over a degree range.
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0..10", allow_hyphen_values = true)]
        range: String,
    },
    /// Graded pieces of T¹ of the affine cone.
    T1 {
        #[command(flatten)]
        common: Common,
        /// Degree range `a..b`, both ends included.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// auto, hyp, ci or normal.
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Koszul Betti table.
    Betti {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        p_max: usize,
        #[arg(long, default_value_t = 3)]
        q_max: usize,
        /// Leave a cell unknown when its strand has more columns.
        #[arg(long, default_value_t = DEFAULT_STRAND_CAP)]
        strand_cap: usize,
    },
    /// Wahl's resolution criterion.
    Wahl {
        #[command(flatten)]
        common: Common,
    },
    /// 4×4 Pfaffians of a skew matrix, optionally deformed and sampled.
    Pfaff {
        #[arg(long)]
        input: PathBuf,
        /// `lambda=c h1=p h2=p h3=p`; missing terms are zero.
        #[arg(long, num_args = 1..)]
        deform: Option<Vec<String>>,
        #[arg(long, default_value = "affine")]
        mode: String,
        /// Sample this many random points for smoothness.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Dimension of the variety being sampled (default n - 3).
        #[arg(long)]
        expected_dim: Option<usize>,
    },
    /// Smoothability verdicts.
    Classify {
        #[command(subcommand)]
        what: ClassifyCmd,
    },
    /// Higher-index Fano 3-folds with K3 sections of a given genus.
    FanoTable {
        #[arg(long)]
        genus: u32,
    },
}

#[derive(Debug, Subcommand)]
enum ClassifyCmd {
    K3 {
        #[arg(long)]
        genus: u32,
    },
    Elliptic {
        #[arg(long)]
        degree: u32,
    },
    Abelian {
        #[arg(long)]
        dim: u32,
    },
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Serialize)]
struct Manifest {
    schema: &'static str,
    subcommand: Option<String>,
    input: Option<String>,
    input_sha256: Option<String>,
    seed: Option<u64>,
    field: Option<String>,
    bounds: BTreeMap<&'static str, Value>,
    wall_time_s: f64,
    version: &'static str,
    exit_code: i32,
}

impl Manifest {
    fn new() -> Self {
        Manifest {
            schema: "conekit.manifest.v1",
            subcommand: None,
            input: None,
            input_sha256: None,
            seed: None,
            field: None,
            bounds: BTreeMap::new(),
            wall_time_s: 0.0,
            version: env!("CARGO_PKG_VERSION"),
            exit_code: 0,
        }
    }
}

enum Failure {
    Domain(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

/// Parse `a..b` (or `a..=b`) into an inclusive pair.
pub fn parse_range<T: std::str::FromStr + PartialOrd>(s: &str) -> Option<(T, T)> {
    let (a, b) = s.split_once("..")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some((a, b))
}

fn bad_range(s: &str) -> Failure {
    domain(format!("bad range '{s}', expected a..b with a <= b"))
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn effective_seed(flag: u64, env: Option<&str>) -> Run<u64> {
    match env {
        None => Ok(flag),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| domain(format!("{SEED_ENV}='{s}' is not an unsigned integer"))),
    }
}

fn load_source(c: &Common, seed: u64, m: &mut Manifest) -> Run<Source> {
    if let Some(path) = &c.input.input {
        let bytes = std::fs::read(path)
            .map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?;
        m.input = Some(path.display().to_string());
        m.input_sha256 = Some(sha256_hex(&bytes));
        let text = String::from_utf8(bytes)
            .map_err(|_| domain(format!("{} is not UTF-8", path.display())))?;
        Ok(Source::Text(text))
    } else {
        let name = c.input.model.clone().expect("clap enforces one input");
        m.input = Some(format!("model:{name}"));
        m.seed = Some(seed);
        Ok(Source::Model { name, seed })
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialise")
}

/// Parse `lambda=…`, `h1=…`, `h2=…`, `h3=…` words.
fn deform_spec(words: &[String], mode: DeformMode) -> Run<DeformSpec> {
    let mut lambda = "0".to_string();
    let mut h = ["0".to_string(), "0".to_string(), "0".to_string()];
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| domain(format!("deformation term '{w}' is not KEY=VALUE")))?;
        match k.trim() {
            "lambda" => lambda = v.trim().to_string(),
            "h1" => h[0] = v.trim().to_string(),
            "h2" => h[1] = v.trim().to_string(),
            "h3" => h[2] = v.trim().to_string(),
            other => return Err(domain(format!("unknown deformation key '{other}'"))),
        }
    }
    Ok(DeformSpec { lambda, h, mode })
}

fn execute(cli: &Cli, seed_env: Option<&str>, m: &mut Manifest) -> Run<(Value, String)> {
    let cf: CoefficientField = cli.field.parse()?;
    m.field = Some(cf.to_string());
    let gb_opts = |c: &Common, m: &mut Manifest| {
        m.bounds.insert("max_pairs", json!(c.max_pairs));
        GbOptions { pair_cap: c.max_pairs }
    };
    let out = match &cli.command {
        Command::Gb { common } => {
            m.subcommand = Some("gb".into());
            let seed = effective_seed(common.seed, seed_env)?;
            let src = load_source(common, seed, m)?;
            let r = api::gb(&src, cf, gb_opts(common, m))?;
            let text = format!("{}\n{}\n", r.ring, r.basis.join("\n"));
            (to_json(&r), text)
        }
        Command::Hilbert { common, range } => {
            m.subcommand = Some("hilbert".into());
            let (lo, hi) = parse_range::<u64>(range).ok_or_else(|| bad_range(range))?;
            m.bounds.insert("range", json!([lo, hi]));
            let seed = effective_seed(common.seed, seed_env)?;
            let src = load_source(common, seed, m)?;
            let r = api::hilbert(&src, cf, lo, hi, gb_opts(common, m))?;
            let text = r.dims.iter().map(|(d, v)| format!("{d}\t{v}\n")).collect();
            (to_json(&r), text)
        }
        Command::T1 { common, range, method } => {
            m.subcommand = Some("t1".into());
            let (lo, hi) = parse_range::<i64>(range).ok_or_else(|| bad_range(range))?;
            m.bounds.insert("range", json!([lo, hi]));
            let method: MethodChoice = method.parse()?;
            let seed = effective_seed(common.seed, seed_env)?;
            let src = load_source(common, seed, m)?;
            let r = api::t1(&src, cf, lo, hi, method, gb_opts(common, m))?;
            let mut text = format!("method {} center {}\n", r.method, r.center);
            for (k, v) in &r.dims {
                text.push_str(&format!("{k}\t{v}\n"));
            }
            (to_json(&r), text)
        }
        Command::Betti { common, p_max, q_max, strand_cap } => {
            m.subcommand = Some("betti".into());
            m.bounds.insert("p_max", json!(p_max));
            m.bounds.insert("q_max", json!(q_max));
            m.bounds.insert("strand_cap", json!(strand_cap));
            let seed = effective_seed(common.seed, seed_env)?;
            let src = load_source(common, seed, m)?;
            let r = api::betti(&src, cf, *p_max, *q_max, *strand_cap, gb_opts(common, m))?;
            let text = r.table.render();
            (to_json(&r), text)
        }
        Command::Wahl { common } => {
            m.subcommand = Some("wahl".into());
            let seed = effective_seed(common.seed, seed_env)?;
            let src = load_source(common, seed, m)?;
            let r = api::wahl(&src, cf, gb_opts(common, m))?;
            let text = format!("{}: {}\n", r.wahl.holds, r.wahl.reason);
            (to_json(&r), text)
        }
        Command::Pfaff { input, deform, mode, sample, seed, expected_dim } => {
            m.subcommand = Some("pfaff".into());
            let bytes = std::fs::read(input)
                .map_err(|e| domain(format!("cannot read {}: {e}", input.display())))?;
            m.input = Some(input.display().to_string());
            m.input_sha256 = Some(sha256_hex(&bytes));
            let text_in = String::from_utf8(bytes)
                .map_err(|_| domain(format!("{} is not UTF-8", input.display())))?;
            let mode: DeformMode = mode.parse()?;
            let spec = deform.as_deref().map(|w| deform_spec(w, mode)).transpose()?;
            let sample = match sample {
                Some(trials) => {
                    let seed = effective_seed(*seed, seed_env)?;
                    m.seed = Some(seed);
                    m.bounds.insert("trials", json!(trials));
                    Some(SampleSpec { trials: *trials, seed, expected_dim: *expected_dim })
                }
                None => None,
            };
            let r = api::pfaff(&text_in, cf, spec.as_ref(), sample)?;
            let text = r.pfaffians.iter().map(|p| format!("{p}\n")).collect();
            (to_json(&r), text)
        }
        Command::Classify { what } => {
            m.subcommand = Some("classify".into());
            m.field = None;
            let r = match what {
                ClassifyCmd::K3 { genus } => api::classify_k3(*genus)?,
                ClassifyCmd::Elliptic { degree } => api::classify_elliptic(*degree)?,
                ClassifyCmd::Abelian { dim } => api::classify_abelian(*dim)?,
            };
            let mut text = format!("{:?}\n", r.verdict.answer);
            for c in &r.verdict.caveats {
                text.push_str(&format!("  - {c}\n"));
            }
            (to_json(&r), text)
        }
        Command::FanoTable { genus } => {
            m.subcommand = Some("fano-table".into());
            m.field = None;
            let r = api::fano_table(*genus)?;
            let mut text = String::new();
            for row in &r.table.rows {
                text.push_str(&format!("{}\t{}\t{}\n", row.index, row.model, row.description));
            }
            if let Some(n) = &r.table.note {
                text.push_str(&format!("{n}\n"));
            }
            (to_json(&r), text)
        }
    };
    Ok(out)
}

/// Run with an explicit argument list and `CONEKIT_SEED` value.
pub fn run_with<I, T>(args: I, seed_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let mut manifest = Manifest::new();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: shown,
                    stderr: String::new(),
                },
                _ => {
                    manifest.exit_code = 1;
                    Outcome {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("{shown}{}\n", manifest_line(&manifest)),
                    }
                }
            };
        }
    };
    let (code, stdout, mut stderr) = match execute(&cli, seed_env, &mut manifest) {
        Ok((json, text)) => {
            let out = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&json).expect("JSON values print");
                    s.push('\n');
                    s
                }
                Format::Text => text,
            };
            (0, out, String::new())
        }
        Err(Failure::Domain(msg)) => (1, String::new(), format!("error: {msg}\n")),
        Err(Failure::Cap(msg)) => (2, String::new(), format!("error: {msg}\n")),
    };
    manifest.exit_code = code;
    manifest.wall_time_s = (start.elapsed().as_secs_f64() * 1e3).round() / 1e3;
    match &cli.manifest {
        Some(path) => {
            let mut body = serde_json::to_string_pretty(&manifest).expect("manifest prints");
            body.push('\n');
            if let Err(e) = std::fs::write(path, body) {
                stderr.push_str(&format!("error: cannot write manifest {}: {e}\n", path.display()));
                return Outcome { code: 1, stdout, stderr };
            }
        }
        None => {
            stderr.push_str(&manifest_line(&manifest));
            stderr.push('\n');
        }
    }
    Outcome { code, stdout, stderr }
}

fn manifest_line(m: &Manifest) -> String {
    serde_json::to_string(m).expect("manifest prints")
}

/// Run with the process environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(SEED_ENV).ok();
    run_with(args, env.as_deref())
}
