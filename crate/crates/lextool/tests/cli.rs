use std::path::PathBuf;
use std::process::{Command, Output};

use lexsegment_core::{Monomial, MonomialIdeal};
use lextool::encode::{IdealJson, MonomialJson};
use lextool::Report;
use proptest::prelude::*;
use serde_json::Value;

fn lextool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lextool")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    let _ = std::fs::remove_file(&path);
    path
}

#[test]
fn initial_segment_primary_decomposition() {
    let o = lextool(&["lexideal", "primdec", "--initial", "--v", "x2*x4*x5", "--n", "6", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("9 minimal primes"), "{text}");
    assert!(text.contains("(x1, x2)"), "{text}");
    assert!(text.contains("cross-check: match"), "{text}");
}

#[test]
fn macaulay_upper_with_oracle() {
    let o = lextool(&["--json", "macaulay", "upper", "148", "5", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["results"]["value"], "240");
    assert_eq!(v["cross_check"]["match"], true);
}

#[test]
fn depth_sweep_has_no_mismatch() {
    let o = lextool(&["--json", "lexideal", "sweep", "--q", "3", "--n-max", "7", "--check", "depth"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["results"]["instances"], 906);
    assert_eq!(v["results"]["mismatches"], 0);
}

#[test]
fn help_exits_zero() {
    let o = lextool(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Usage"));
    let o = lextool(&["lexideal", "sweep", "--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("--resume"));
}

#[test]
fn parse_errors_point_at_the_byte() {
    let o = lextool(&["ideal", "betti", "x1*y2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains("byte 3"), "{err}");
    assert!(err.contains("x1*y2\n     ^"), "{err}");
    assert!(o.stdout.is_empty());

    let o = lextool(&["simplicial", "fvector", "1,2,x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("byte 4"), "{}", stderr(&o));
}

#[test]
fn bad_parameters_exit_one() {
    for args in [
        &["macaulay", "upper", "148", "0"][..],
        &["--char", "4", "ideal", "betti", "x1*x2"],
        &["lexideal", "primdec", "--n", "6"],
        &["lexideal", "primdec", "--u", "x1*x2", "--v", "x1*x2*x3", "--n", "4"],
        &["lexideal", "sweep", "--check", "compg", "--n-max", "3"],
        &["no-such-command"],
    ] {
        let o = lextool(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn mismatch_exits_two() {
    let o = lextool(&[
        "--json", "lexideal", "deg3", "--n", "7", "--u", "x1*x6*x7", "--v", "x2*x3*x4", "--reading", "literal",
        "--cross-check",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["cross_check"]["match"], false);
    assert_eq!(v["cross_check"]["formula"], 3);
    assert_eq!(v["cross_check"]["oracle"], 5);

    let o = lextool(&["lexideal", "deg3", "--n", "7", "--u", "x1*x6*x7", "--v", "x2*x3*x4", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["--json", "--cross-check", "lexideal", "edge", "--u", "x1*x3", "--v", "x2*x5", "--n", "6"];
    let (a, b) = (lextool(&args), lextool(&args));
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let report: Report = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report.to_json() + "\n", stdout(&a));
    assert!(!report.mismatch());
}

#[test]
fn ideal_from_a_json_file() {
    let path = scratch("ideal.json");
    std::fs::write(&path, r#"{"n": 3, "gens": ["x1^2", "x1*x2^3*x3", "x2^3*x3^2"]}"#).unwrap();
    let o = lextool(&["--json", "ideal", "primdec", "--input", path.to_str().unwrap(), "--cross-check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["results"]["components"][1], "(x1^2, x1*x3, x3^2)");
}

#[test]
fn sweep_resumes_to_the_same_log() {
    let full = scratch("full.jsonl");
    let part = scratch("part.jsonl");
    let common = ["--json", "lexideal", "sweep", "--check", "invariants", "--q", "2", "--n-max", "6", "--chunk", "16"];
    let run = |path: &PathBuf, resume: bool| {
        let mut args: Vec<&str> = common.to_vec();
        args.extend(["--out", path.to_str().unwrap()]);
        if resume {
            args.push("--resume");
        }
        lextool(&args)
    };
    let first = run(&full, false);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let log = std::fs::read(&full).unwrap();

    // a torn copy: header, some rows, half a line
    std::fs::write(&part, &log[..log.len() / 2]).unwrap();
    let resumed = run(&part, true);
    assert_eq!(resumed.status.code(), Some(0), "{}", stderr(&resumed));
    assert_eq!(std::fs::read(&part).unwrap(), log);
    let results = |o: &Output| {
        let mut r = json(o)["results"].clone();
        r.as_object_mut().unwrap().remove("out");
        r
    };
    assert_eq!(results(&resumed), results(&first));

    // a log from a different sweep is refused
    let other = lextool(&[
        "lexideal", "sweep", "--check", "primdec", "--q", "2", "--n-max", "6", "--out", full.to_str().unwrap(), "--resume",
    ]);
    assert_eq!(other.status.code(), Some(1));
    assert_eq!(std::fs::read(&full).unwrap(), log);
}

fn monomials(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(move |e| {
        let mut m = Monomial::one(n).unwrap();
        for (i, &a) in e.iter().enumerate() {
            m = m.pow_var(i + 1, a);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn monomial_text_and_json_round_trip(m in (1usize..=9).prop_flat_map(monomials)) {
        let n = m.n();
        let text = m.to_string();
        prop_assert_eq!(&lextool::encode::monomial("m", &text, Some(n)).unwrap(), &m);
        let j: MonomialJson = serde_json::from_str(&serde_json::to_string(&MonomialJson::from(&m)).unwrap()).unwrap();
        prop_assert_eq!(&Monomial::try_from(&j).unwrap(), &m);
    }

    #[test]
    fn ideal_json_round_trips(gens in (1usize..=6).prop_flat_map(|n| prop::collection::vec(monomials(n), 1..6))) {
        let i = MonomialIdeal::new(gens[0].n(), gens).unwrap();
        let j: IdealJson = serde_json::from_str(&serde_json::to_string(&IdealJson::from(&i)).unwrap()).unwrap();
        prop_assert_eq!(&MonomialIdeal::try_from(&j).unwrap(), &i);
        let text: Vec<String> = i.gens().iter().map(ToString::to_string).collect();
        prop_assert_eq!(&lextool::encode::ideal(&[text.join(",")], Some(i.n()), None).unwrap(), &i);
    }
}
