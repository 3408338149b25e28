//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::time::Instant;

use conekit::classify::{
    chi_tangent_twist, classify_abelian_cone, classify_elliptic_cone, classify_k3_cone, Answer,
};
use conekit::homology::{betti_table, euler_check, gorenstein_duality_check, BettiTable};
use conekit::pfaffian::{
    deform_matrix, divisor_family, jacobian_rank_at, pfaffians_4x4, pfaffians_display,
    smoothness_sample, symbolic_divisor_matrix, DeformMode, SmoothnessVerdict,
};
use conekit::t1::reference::{random_small_artinian, BruteForceT1};
use conekit::t1::{check_t1_symmetry, t1, t1_graded, MethodChoice, T1Report};
use conekit::{corpus, Field, Ideal, Polynomial, PrimeField, WeightedPolyRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = fn(&mut Shared) -> Outcome;

fn fp() -> PrimeField {
    PrimeField::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Reports shared between criteria.
#[derive(Default)]
struct Shared {
    quartic: Option<T1Report>,
    genus6: Vec<T1Report>,
}

fn quartic_regression(s: &mut Shared) -> Outcome {
    let start = Instant::now();
    let run = common::run_binary(&["t1", "--input", "data/quartic.ck", "--range", "-4..4"]);
    let secs = start.elapsed().as_secs_f64();
    ensure(run.code == 0, || format!("exit {}: {}", run.code, run.stderr))?;
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).map_err(|e| e.to_string())?;
    let dims: Vec<u64> = (-4..=4)
        .map(|k| v["dims"][k.to_string()].as_u64().unwrap_or(u64::MAX))
        .collect();
    let expected = vec![1, 4, 10, 16, 19, 16, 10, 4, 1];
    ensure(dims == expected, || format!("dims {dims:?}"))?;
    ensure(secs < 1.0, || format!("took {secs:.3} s"))?;
    let rep = t1(&corpus::fermat_quartic(fp()), -4, 4, MethodChoice::Auto).map_err(|e| e.to_string())?;
    s.quartic = Some(rep);
    Ok(format!("dims {dims:?} in {secs:.3} s"))
}

fn genus6_regression(s: &mut Shared) -> Outcome {
    let start = Instant::now();
    for seed in 1..=5 {
        let ideal = corpus::k3_genus6(fp(), seed);
        let rep = t1(&ideal, -4, 4, MethodChoice::Auto).map_err(|e| e.to_string())?;
        let dims = rep.dims.values();
        ensure(dims == vec![0, 0, 1, 10, 19, 10, 1, 0, 0], || format!("seed {seed}: {dims:?} on -4..4"))?;
        s.genus6.push(rep);
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 600.0, || format!("took {secs:.1} s"))?;
    Ok(format!("1,10,19,10,1 on -2..2 and zero at ±3, ±4 for seeds 1-5 in {secs:.1} s"))
}

fn symmetry_suite(s: &mut Shared) -> Outcome {
    let q = s.quartic.as_ref().ok_or("quartic report missing")?;
    let g = s.genus6.first().ok_or("genus-6 report missing")?;
    for (name, rep) in [("quartic", q), ("genus 6", g)] {
        let c = check_t1_symmetry(rep, 0).map_err(|e| e.to_string())?;
        ensure(c.symmetric, || format!("{name}: first violation at {:?}", c.first_violation))?;
        ensure(rep.center == 0, || format!("{name}: center {}", rep.center))?;
    }
    Ok("both K3 reports symmetric about 0".into())
}

fn riemann_roch(s: &mut Shared) -> Outcome {
    let q = s.quartic.as_ref().ok_or("quartic report missing")?;
    let g = s.genus6.first().ok_or("genus-6 report missing")?;
    let (a, b) = (chi_tangent_twist(3, 1).unwrap(), chi_tangent_twist(6, 1).unwrap());
    let (ta, tb) = (q.dims.get(1).unwrap() as i64, g.dims.get(1).unwrap() as i64);
    ensure(a == 16 && ta == a, || format!("genus 3: chi {a}, T¹(1) {ta}"))?;
    ensure(b == 10 && tb == b, || format!("genus 6: chi {b}, T¹(1) {tb}"))?;
    Ok("16 = T¹(1) for the quartic, 10 = T¹(1) for genus 6".to_string())
}

fn subspace_dimension(s: &mut Shared) -> Outcome {
    let q = s.quartic.as_ref().ok_or("quartic report missing")?;
    let sum = q.dims.get(-2).unwrap() + q.dims.get(-4).unwrap();
    ensure(sum == 11, || format!("T¹(-2) + T¹(-4) = {sum}"))?;
    Ok("T¹(-2) + T¹(-4) = 11".into())
}

fn pfaffian_suite(_: &mut Shared) -> Outcome {
    let m = symbolic_divisor_matrix(fp(), 3).map_err(|e| e.to_string())?;
    let shown: Vec<String> = pfaffians_display(&m)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| m.ring().format_poly(p))
        .collect();
    let expected = [
        "x1*x5 - x2*x4",
        "x1*x6 - x3*x4",
        "x2*x6 - x3*x5",
        "x1*f3 - x2*f2 + x3*f1",
        "x4*f3 - x5*f2 + x6*f1",
    ];
    ensure(shown == expected, || format!("Pfaffians {shown:?}"))?;

    let h_of = |ring: &WeightedPolyRing<PrimeField>, seed: u64| -> Vec<Polynomial<PrimeField>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..3).map(|_| ring.random_poly_up_to(3, &mut rng)).collect()
    };
    let mut worst = 0;
    for seed in 0..100 {
        let m = divisor_family(fp(), 3, seed).map_err(|e| e.to_string())?;
        let ring = m.ring().clone();
        let h = h_of(&ring, 1000 + seed);
        let d = deform_matrix(&m, &0, [&h[0], &h[1], &h[2]], DeformMode::Affine).map_err(|e| e.to_string())?;
        let gens = pfaffians_4x4(&d).map_err(|e| e.to_string())?;
        let jr = jacobian_rank_at(&ring, &gens, &[0; 6]).map_err(|e| e.to_string())?;
        ensure(jr.on_variety && jr.rank <= 2, || format!("λ=0 seed {seed}: {jr:?}"))?;
        worst = worst.max(jr.rank);
    }

    let m = divisor_family(fp(), 3, 21).map_err(|e| e.to_string())?;
    let ring = m.ring().clone();
    let h = h_of(&ring, 22);
    let one = ring.field().one();
    let d = deform_matrix(&m, &one, [&h[0], &h[1], &h[2]], DeformMode::Affine).map_err(|e| e.to_string())?;
    let gens = pfaffians_4x4(&d).map_err(|e| e.to_string())?;
    let points = match smoothness_sample(&ring, &gens, 3, 150, 5).map_err(|e| e.to_string())? {
        SmoothnessVerdict::SmoothSampled { points, .. } => points,
        other => return Err(format!("λ=1: {other:?}")),
    };
    ensure(points >= 50, || format!("λ=1: only {points} points"))?;
    Ok(format!(
        "five Pfaffians match; λ=0 origin rank ≤ {worst} on 100 seeds; λ=1 smooth at {points} sampled points"
    ))
}

fn classification(_: &mut Shared) -> Outcome {
    for g in 2..=40 {
        let smoothable = (2..=10).contains(&g) || g == 12;
        let a = classify_k3_cone(g).map_err(|e| e.to_string())?.answer;
        let want = if smoothable { Answer::SmoothableGeneral } else { Answer::ConicalOnlyGeneral };
        ensure(a == want, || format!("K3 genus {g}: {a:?}"))?;
    }
    for d in 1..=20 {
        let a = classify_elliptic_cone(d).map_err(|e| e.to_string())?.answer;
        let want = if d <= 9 { Answer::Smoothable } else { Answer::NotSmoothable };
        ensure(a == want, || format!("elliptic degree {d}: {a:?}"))?;
    }
    for n in 2..=10 {
        let a = classify_abelian_cone(n).map_err(|e| e.to_string())?.answer;
        ensure(a == Answer::ConicalOnly, || format!("abelian dim {n}: {a:?}"))?;
    }
    Ok("K3 g=2..40, elliptic d=1..20, abelian n=2..10".into())
}

fn betti_suite(s: &mut Shared) -> Outcome {
    let g6 = corpus::k3_genus6(fp(), 1);
    let tables: Vec<(&str, Ideal<PrimeField>, BettiTable)> = [
        ("quartic", corpus::fermat_quartic(fp()), 3, 3),
        ("segre", corpus::segre_p1p2(fp()), 3, 2),
        ("plucker", corpus::plucker_gr25(fp()), 3, 2),
        ("genus 4", corpus::k3_genus4(fp(), 1), 2, 3),
        ("genus 5", corpus::k3_genus5(fp(), 1), 3, 3),
        ("genus 6", g6, 4, 3),
    ]
    .into_iter()
    .map(|(n, i, p, q)| {
        let t = betti_table(&i, p, q).expect("table");
        (n, i, t)
    })
    .collect();
    let mut degrees = 0;
    for (name, ideal, table) in &tables {
        let checked = euler_check(ideal, table).map_err(|e| format!("{name}: {e}"))?;
        ensure(!checked.is_empty(), || format!("{name}: no degree checkable"))?;
        degrees += checked.len();
    }
    let (_, ideal, t) = tables.last().unwrap();
    let h2 = ideal.gb().unwrap().hilbert_function(2, 2).unwrap().get(2).unwrap();
    let b11 = t.get(1, 1).unwrap();
    ensure(b11 == 6 && b11 == 28 - h2, || format!("β(1,1) = {b11}, 28 - h(2) = {}", 28 - h2 as i64))?;
    let b22 = t.get(2, 2).unwrap();
    let rep = s.genus6.first().ok_or("genus-6 report missing")?;
    let t1_2 = (rep.dims.get(-2).unwrap(), rep.dims.get(2).unwrap());
    ensure(b22 > 0 && t1_2.0 > 0 && t1_2.1 > 0, || format!("β(2,2) = {b22}, T¹(∓2) = {t1_2:?}"))?;
    let d = gorenstein_duality_check(t, 4, 3);
    ensure(d.holds && d.compared == 20, || format!("duality {d:?}"))?;
    Ok(format!(
        "Euler identity on {} tables ({degrees} degrees); β(1,1) = 6 = 28 - 22; β(2,2) = {b22}; duality on {} cells",
        tables.len(),
        d.compared
    ))
}

fn oracle_equivalence(_: &mut Shared) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 24 {
        attempts += 1;
        ensure(attempts < 500, || "could not generate enough ideals".into())?;
        let (ring, gens) = random_small_artinian(&mut rng);
        let Some(oracle) = BruteForceT1::new(&ring, &gens) else { continue };
        if oracle.colength() > 30 {
            continue;
        }
        let ideal = Ideal::new(&ring, gens.clone()).map_err(|e| e.to_string())?;
        let dmax = gens.iter().filter_map(|g| g.weighted_degree()).max().unwrap() as i64;
        let (lo, hi) = (-dmax - 1, oracle.top());
        let got = t1_graded(&ideal, lo, hi).map_err(|e| e.to_string())?.dims.values();
        let want: Vec<u64> = (lo..=hi).map(|k| oracle.t1(k)).collect();
        ensure(got == want, || {
            let shown: Vec<String> = gens.iter().map(|g| ring.format_poly(g)).collect();
            format!("{shown:?}: {got:?} vs oracle {want:?}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} random Artinian ideals agree"))
}

fn determinism(_: &mut Shared) -> Outcome {
    for (stem, args) in common::GOLDEN {
        let a = common::run_binary(args);
        let b = common::run_binary(args);
        ensure(a.code == 0 && b.code == 0, || format!("{stem}: {}", a.stderr))?;
        ensure(a.stdout == b.stdout, || format!("{stem}: repeated runs differ"))?;
        let golden = std::fs::read(common::golden_path(stem)).map_err(|e| format!("{stem}: {e}"))?;
        ensure(a.stdout == golden, || format!("{stem}: differs from golden file"))?;
    }
    Ok(format!("{} golden reports byte-identical over two runs", common::GOLDEN.len()))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("quartic T¹ regression", quartic_regression),
        ("genus-6 T¹ regression", genus6_regression),
        ("T¹ symmetry", symmetry_suite),
        ("Riemann-Roch cross-check", riemann_roch),
        ("subspace dimension", subspace_dimension),
        ("Pfaffian format", pfaffian_suite),
        ("classification table", classification),
        ("Betti and Wahl properties", betti_suite),
        ("brute-force oracle", oracle_equivalence),
        ("determinism", determinism),
    ];
    let mut shared = Shared::default();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check(&mut shared);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1} s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
