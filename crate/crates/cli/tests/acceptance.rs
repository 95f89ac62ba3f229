//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use monoinv_core::harness::{instance, run_law, GenConfig, Law};
use monoinv_core::measure::{distribution_function, PiecewiseMeasure, UniformPiece};
use monoinv_core::unimodal::{classify, qf_shape_check, quantile_function};
use monoinv_core::{int, ratio, Affine, Interval, PiecewiseMonotone};
use serde_json::Value;

const N: &str = "10000";
const SEED: &str = "42";

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn monoinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoinv")).args(args).env_remove("MONOINV_SEED").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or(Value::Null)
}

struct Verdict {
    ok: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Verdict);

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

/// Runs `verify` for each law and summarises the counts.
fn verify(laws: &[&str]) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for law in laws {
        let out = monoinv(&["verify", "--law", law, "--n", N, "--seed", SEED, "--max-knots", "12"]);
        let r = json(&out);
        let failed = r["failed"].as_u64().unwrap_or(u64::MAX);
        ok &= out.status.code() == Some(0) && failed == 0;
        parts.push(format!("{law}: {} passed, {} skipped, {failed} failed", r["passed"], r["skipped"]));
    }
    verdict(ok, parts.join("; "))
}

/// The same function with every jump closed up.
fn close_jumps(q: &PiecewiseMonotone) -> PiecewiseMonotone {
    let mut pieces = vec![q.pieces()[0].clone()];
    for (i, c) in q.cuts().iter().enumerate() {
        let left = pieces[i].at(c);
        pieces.push(Affine::through(c, &left, q.pieces()[i + 1].slope.clone()));
    }
    PiecewiseMonotone::from_pieces(q.regular_domain().clone(), q.cuts().to_vec(), pieces).expect("still monotone")
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let out = monoinv(&["classify", "--spec", fixture("fix_a.json").to_str().unwrap()]);
    let r = json(&out);
    let c = &r["classification"];
    let cli_ok = out.status.code() == Some(3)
        && c["cdf_unimodal"] == Value::Bool(false)
        && c["qf_absolutely_continuous"] == Value::Bool(false);

    let fix_a = PiecewiseMeasure::new(
        Interval::real_line(),
        Vec::new(),
        vec![
            UniformPiece::new(Interval::open_finite(int(0), ratio(1, 2)), int(1)),
            UniformPiece::new(Interval::open_finite(ratio(3, 2), int(2)), int(1)),
        ],
    )
    .expect("valid measure");
    let f = distribution_function(&fix_a, &int(0)).expect("cdf");
    let q = quantile_function(&f).expect("qf");
    let halves_affine = [Interval::open_finite(int(0), ratio(1, 2)), Interval::open_finite(ratio(1, 2), int(1))]
        .iter()
        .all(|h| q.restrict(h).map(|r| r.segment_count() == 1).unwrap_or(false));
    let only_the_jump = q.jumps().iter().map(|(x, _)| x.clone()).collect::<Vec<_>>() == [ratio(1, 2)];
    let shape_fails = !qf_shape_check(&q).0;
    let closed_passes = qf_shape_check(&close_jumps(&q)).0;
    let lib_ok = !classify(&f).expect("classify").cdf_unimodal;
    let elapsed = start.elapsed();
    verdict(
        cli_ok && halves_affine && only_the_jump && shape_fails && closed_passes && lib_ok && elapsed < Duration::from_secs(1),
        format!(
            "exit {:?}, affine halves {halves_affine}, single jump at 1/2 {only_the_jump}, shape check fails {shape_fails}, \
             passes once the jump is closed {closed_passes}, {elapsed:.2?}",
            out.status.code()
        ),
    )
}

fn criterion_2() -> Verdict {
    let cfg = GenConfig { seed: SEED.parse().unwrap(), max_knots: 12, ..GenConfig::default() };
    let (mut jumps, mut flats, mut infinite) = (0, 0, 0);
    for i in 0..N.parse::<u64>().unwrap() {
        let s = instance(Law::MainEquiv, &cfg, i);
        let g = s.build().expect("builds");
        jumps += usize::from(!g.jumps().is_empty());
        flats += usize::from(!g.flats().is_empty());
        infinite += usize::from(s.lo.is_none() || s.hi.is_none());
    }
    let start = Instant::now();
    let v = verify(&["MAIN_EQUIV"]);
    let elapsed = start.elapsed();
    verdict(
        v.ok && jumps > 0 && flats > 0 && infinite > 0 && elapsed < Duration::from_secs(60),
        format!("{}; with jumps {jumps}, flats {flats}, infinite domain {infinite}; {elapsed:.2?}", v.detail),
    )
}

fn criterion_3() -> Verdict {
    let v = verify(&["QF_AC"]);
    let cfg = GenConfig { seed: SEED.parse().unwrap(), force_unimodal: true, ..GenConfig::default() };
    let r = run_law(Law::QfAc, N.parse().unwrap(), &cfg);
    verdict(
        v.ok && r.ok() && r.skipped == 0,
        format!("{}; forced unimodal: {} passed, {} skipped, {} failed", v.detail, r.passed, r.skipped, r.failed),
    )
}

fn criterion_9() -> Verdict {
    let start = Instant::now();
    let samples = fixture("uniform_1000.csv");
    let ingest = monoinv(&["ingest", "--samples", samples.to_str().unwrap()]);
    let pieces = json(&ingest)["uniform_pieces"].as_array().map_or(0, Vec::len);
    let classify = monoinv(&["classify", "--samples", samples.to_str().unwrap()]);
    let elapsed = start.elapsed();
    let ingest_ok = ingest.status.code() == Some(0) && pieces == 999 && classify.status.code() == Some(0);

    let dir = tempfile::tempdir().expect("tempdir");
    let first = monoinv(&["classify", "--spec", fixture("fix_d.json").to_str().unwrap()]);
    let echoed = dir.path().join("echo.json");
    std::fs::write(&echoed, serde_json::to_string(&json(&first)["input"]).unwrap()).unwrap();
    let second = monoinv(&["classify", "--spec", echoed.to_str().unwrap()]);
    let round_trip = first.status.code() == Some(0) && !first.stdout.is_empty() && first.stdout == second.stdout;
    verdict(
        ingest_ok && elapsed < Duration::from_secs(2) && round_trip,
        format!(
            "{pieces} pieces, classify exit {:?} in {elapsed:.2?}; FIX-D byte-identical round trip {round_trip}",
            classify.status.code()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 counterexample regression", criterion_1),
        ("2 three-way equivalence", criterion_2),
        ("3 continuous quantile function", criterion_3),
        ("4 pushforward identities", || verify(&["PUSH_FWD", "PUSH_CONT"])),
        ("5 Galois connection", || verify(&["GALOIS"])),
        ("6 inverse-function rule", || verify(&["INV_RULE", "AC_EQUIV"])),
        ("7 decomposition", || verify(&["DECOMP"])),
        ("8 double inverse", || verify(&["DOUBLE_INV"])),
        ("9 CLI end to end", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let v = run();
        failed += usize::from(!v.ok);
        println!("criterion {name}: {} ({}) [{:.2?}]", if v.ok { "PASS" } else { "FAIL" }, v.detail, start.elapsed());
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
