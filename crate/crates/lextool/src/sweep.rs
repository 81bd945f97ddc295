//! Formula-against-oracle checks over enumerated instances, with an ordered
//! JSONL log that a later run can resume.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, IsTerminal, Write};
use std::path::Path;

use lexsegment_core::formulas::{
    depth_degree3_with, depth_formula, edge_invariants, invariants_formula, is_seq_cm, primdec_formula,
    seq_cm_dual_oracle, sv_construct, sv_verify, LexsegSpec,
};
use lexsegment_core::gotzmann::{
    adh_linear_resolution, depth_zero_lexseg, gotzmann_completely_lexseg, gotzmann_noncomplete_lexseg,
    is_gotzmann_one_degree, lexseg_ideal,
};
use lexsegment_core::ideal::{betti, depth_quotient, has_linear_resolution, minimal_primes_squarefree, sort_primes};
use lexsegment_core::monomial::{enumerate_degree, enumerate_sqf};
use lexsegment_core::{Error, Monomial, SimplicialComplex};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cli::{Check, Reading, SweepArgs};
use crate::commands::Ctx;
use crate::report::{CrossCheck, Report};
use crate::CliError;

/// One input of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    /// Squarefree `L(u, v)`.
    Segment(LexsegSpec),
    /// `(L(u, v))` over all monomials of one degree.
    General { u: Monomial, v: Monomial },
}

impl Instance {
    pub fn to_json(&self) -> Value {
        match self {
            Instance::Segment(s) => json!({ "n": s.n, "u": s.u.to_string(), "v": s.v.to_string() }),
            Instance::General { u, v } => json!({ "n": u.n(), "d": u.degree(), "u": u.to_string(), "v": v.to_string() }),
        }
    }
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Depth => "depth",
            Check::Primdec => "primdec",
            Check::Invariants => "invariants",
            Check::Edge => "edge",
            Check::Deg3 => "deg3",
            Check::Seqcm => "seqcm",
            Check::Sv => "sv",
            Check::Compg => "compg",
            Check::Noncomplete => "noncomplete",
            Check::Adh => "adh",
            Check::DepthZero => "depth-zero",
        }
    }

    /// What the oracle side computes.
    pub fn oracle_name(self) -> &'static str {
        match self {
            Check::Depth | Check::Deg3 => "depth of the Stanley-Reisner complex",
            Check::Primdec => "minimal transversals of the generators",
            Check::Invariants => "facets of the Stanley-Reisner complex and graded Betti numbers",
            Check::Edge => "simplicial depth, Betti numbers and certificate verification",
            Check::Seqcm => "componentwise linearity of the dual",
            Check::Sv => "certificate verification and simplicial depth",
            Check::Compg | Check::Noncomplete => "Hilbert function growth",
            Check::Adh => "graded Betti numbers",
            Check::DepthZero => "projective dimension from Betti numbers",
        }
    }
}

fn segment(inst: &Instance) -> Result<&LexsegSpec, Error> {
    match inst {
        Instance::Segment(s) => Ok(s),
        Instance::General { .. } => Err(Error::Domain("check needs a squarefree segment".into())),
    }
}

fn general(inst: &Instance) -> Result<(&Monomial, &Monomial), Error> {
    match inst {
        Instance::General { u, v } => Ok((u, v)),
        Instance::Segment(_) => Err(Error::Domain("check needs a general lexsegment".into())),
    }
}

fn prime_lists(mut primes: Vec<lexsegment_core::VarSet>) -> Value {
    sort_primes(&mut primes);
    json!(primes.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
}

/// The closed-form side.  `Domain` errors mean the instance is outside the
/// hypotheses.
pub fn formula_value(check: Check, inst: &Instance, p: u64, reading: Reading) -> Result<Value, Error> {
    Ok(match check {
        Check::Depth => json!(depth_formula(segment(inst)?)?.0),
        Check::Primdec => prime_lists(primdec_formula(segment(inst)?)?.primes),
        Check::Invariants => {
            let s = segment(inst)?;
            let inv = invariants_formula(s)?;
            let mut v = json!({ "dim": inv.dim, "multiplicity": inv.multiplicity.to_string(), "pure": inv.pure });
            if let Some(d) = inv.depth {
                v["depth"] = json!(d);
                v["projdim"] = json!(s.n - d);
            }
            v
        }
        Check::Edge => {
            let s = segment(inst)?;
            let e = edge_invariants(s.n, s.u, s.v)?;
            json!({
                "dim": e.dim, "depth": e.depth, "reg": e.reg, "projdim": e.projdim, "ara": e.ara,
                "certificate_verifies": true,
            })
        }
        Check::Deg3 => {
            let s = segment(inst)?;
            json!(depth_degree3_with(s.n, s.u, s.v, reading.into())?.0)
        }
        Check::Seqcm => json!(is_seq_cm(segment(inst)?, p)?),
        Check::Sv => json!({ "length": sv_construct(segment(inst)?)?.len(), "verifies": true }),
        Check::Compg => {
            let (u, v) = general(inst)?;
            json!(gotzmann_completely_lexseg(u, v)?.gotzmann)
        }
        Check::Noncomplete => {
            let (u, v) = general(inst)?;
            json!(gotzmann_noncomplete_lexseg(u, v)?)
        }
        Check::Adh => {
            let (u, v) = general(inst)?;
            json!(adh_linear_resolution(u, v)?)
        }
        Check::DepthZero => {
            let (u, v) = general(inst)?;
            json!(depth_zero_lexseg(u, v)?)
        }
    })
}

/// The brute-force side.  Keys the formula left undecided (a missing
/// closed depth) are not produced.
pub fn oracle_value(check: Check, inst: &Instance, p: u64, formula: &Value) -> Result<Value, Error> {
    let complex = |s: &LexsegSpec| SimplicialComplex::from_sr_ideal(&s.ideal()?);
    Ok(match check {
        Check::Depth | Check::Deg3 => json!(complex(segment(inst)?)?.depth(p)?),
        Check::Primdec => prime_lists(minimal_primes_squarefree(&segment(inst)?.ideal()?)?),
        Check::Invariants => {
            let s = segment(inst)?;
            let c = complex(s)?;
            let mut v = json!({ "dim": c.krull_dim(), "multiplicity": c.multiplicity().to_string(), "pure": c.is_pure() });
            if formula.get("depth").is_some() {
                v["depth"] = json!(c.depth(p)?);
                v["projdim"] = json!(betti(&s.ideal()?, p)?.projdim_quotient());
            }
            v
        }
        Check::Edge => {
            let s = segment(inst)?;
            let i = s.ideal()?;
            let c = complex(s)?;
            let table = betti(&i, p)?;
            let depth = c.depth(p)?;
            let cert = edge_invariants(s.n, s.u, s.v)?.sv;
            json!({
                "dim": c.krull_dim(), "depth": depth, "reg": table.reg(), "projdim": table.projdim_quotient(),
                "ara": s.n - depth, "certificate_verifies": sv_verify(&cert, &i).is_ok(),
            })
        }
        Check::Seqcm => json!(seq_cm_dual_oracle(segment(inst)?, p)?),
        Check::Sv => {
            let s = segment(inst)?;
            let cert = sv_construct(s)?;
            json!({ "length": s.n - complex(s)?.depth(p)?, "verifies": sv_verify(&cert, &s.ideal()?).is_ok() })
        }
        Check::Compg | Check::Noncomplete => {
            let (u, v) = general(inst)?;
            json!(is_gotzmann_one_degree(&lexseg_ideal(u, v)?)?)
        }
        Check::Adh => {
            let (u, v) = general(inst)?;
            json!(has_linear_resolution(&lexseg_ideal(u, v)?, p)?)
        }
        Check::DepthZero => {
            let (u, v) = general(inst)?;
            json!(depth_quotient(&lexseg_ideal(u, v)?, p)? == 0)
        }
    })
}

/// Instances in log order: `n` ascending, then `u` and `v` lex-descending.
pub fn instances(args: &SweepArgs) -> Result<Vec<Instance>, CliError> {
    let mut out = Vec::new();
    if args.check.is_lexideal() {
        let q = match (args.q, args.check) {
            (Some(q), _) => q,
            (None, Check::Edge) => 2,
            (None, Check::Deg3) => 3,
            (None, _) => return Err(CliError::Usage(format!("--q is required for the {} check", args.check.name()))),
        };
        if q == 0 {
            return Err(CliError::Usage("--q must be positive".into()));
        }
        for n in args.n_min.unwrap_or(q).max(q)..=args.n_max {
            let class = enumerate_sqf(n, q as u32)?;
            for (k, &u) in class.iter().enumerate() {
                for &v in &class[k..] {
                    out.push(Instance::Segment(LexsegSpec::new(n, u, v)?));
                }
            }
        }
    } else {
        for n in args.n_min.unwrap_or(2).max(1)..=args.n_max {
            for d in 1..=args.d_max {
                let class = enumerate_degree(n, d, false)?;
                for (k, u) in class.iter().enumerate() {
                    for v in &class[k + 1..] {
                        out.push(Instance::General { u: u.clone(), v: v.clone() });
                    }
                }
            }
        }
    }
    if let Some(k) = args.sample {
        let total = out.len();
        if k < total {
            out = (0..k).map(|t| out[t * total / k].clone()).collect();
        }
    }
    Ok(out)
}

/// One log line.
pub fn evaluate(check: Check, index: usize, inst: &Instance, p: u64, reading: Reading) -> Result<Value, Error> {
    let mut row = inst.to_json();
    row["i"] = json!(index);
    match formula_value(check, inst, p, reading) {
        Ok(f) => {
            let o = oracle_value(check, inst, p, &f)?;
            row["match"] = json!(f == o);
            row["formula"] = f;
            row["oracle"] = o;
        }
        Err(Error::Domain(msg)) => row["skipped"] = json!(msg),
        Err(e) => return Err(e),
    }
    Ok(row)
}

fn header(args: &SweepArgs, total: usize) -> Value {
    json!({ "sweep": {
        "check": args.check.name(), "q": args.q, "n_min": args.n_min, "n_max": args.n_max,
        "d_max": args.d_max, "sample": args.sample, "reading": format!("{:?}", args.reading).to_lowercase(),
        "instances": total,
    }})
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

/// Rows already in the log; a torn last line is cut off.
fn resume_rows(path: &Path, head: &Value) -> Result<Vec<Value>, CliError> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut lines = BufReader::new(file).lines();
    let first = match lines.next() {
        Some(l) => l.map_err(io_err(path))?,
        None => return Ok(Vec::new()),
    };
    if serde_json::from_str::<Value>(&first).ok().as_ref() != Some(head) {
        return Err(CliError::Usage(format!("{} was written by a different sweep", path.display())));
    }
    let mut rows = Vec::new();
    let mut good = first.len() + 1;
    for line in lines {
        let line = line.map_err(io_err(path))?;
        match serde_json::from_str::<Value>(&line) {
            Ok(row) if row["i"] == json!(rows.len()) => {
                good += line.len() + 1;
                rows.push(row);
            }
            _ => break,
        }
    }
    let f = OpenOptions::new().write(true).open(path).map_err(io_err(path))?;
    f.set_len(good as u64).map_err(io_err(path))?;
    Ok(rows)
}

pub(crate) fn run(ctx: &Ctx, args: &SweepArgs) -> Result<Report, CliError> {
    let all = instances(args)?;
    let head = header(args, all.len());
    let mut rows = Vec::new();
    let mut log = None;
    if let Some(path) = &args.out {
        let exists = path.exists() && fs::metadata(path).map_err(io_err(path))?.len() > 0;
        if args.resume && exists {
            rows = resume_rows(path, &head)?;
            log = Some(OpenOptions::new().append(true).open(path).map_err(io_err(path))?);
        } else {
            let mut f = File::create(path).map_err(io_err(path))?;
            writeln!(f, "{head}").map_err(io_err(path))?;
            log = Some(f);
        }
    }
    let progress = std::io::stderr().is_terminal();
    let chunk = args.chunk.max(1);
    let mut next = rows.len();
    while next < all.len() {
        let end = (next + chunk).min(all.len());
        let batch: Vec<Value> = (next..end)
            .into_par_iter()
            .map(|k| evaluate(args.check, k, &all[k], ctx.p, args.reading))
            .collect::<Result<_, _>>()?;
        if let (Some(f), Some(path)) = (log.as_mut(), &args.out) {
            for row in &batch {
                writeln!(f, "{row}").map_err(io_err(path))?;
            }
            f.flush().map_err(io_err(path))?;
        }
        rows.extend(batch);
        next = end;
        if progress {
            eprint!("\r{}: {next}/{}", args.check.name(), all.len());
        }
    }
    if progress {
        eprintln!();
    }
    Ok(summarize(ctx, args, &rows))
}

fn summarize(ctx: &Ctx, args: &SweepArgs, rows: &[Value]) -> Report {
    use std::collections::BTreeMap;
    let mut per_n: BTreeMap<u64, [usize; 3]> = BTreeMap::new();
    let mut first_bad = None;
    for row in rows {
        let n = row["n"].as_u64().unwrap_or(0);
        let slot = per_n.entry(n).or_default();
        if row.get("skipped").is_some() {
            slot[1] += 1;
        } else {
            slot[0] += 1;
            if row["match"] == json!(false) {
                slot[2] += 1;
                first_bad.get_or_insert_with(|| row.clone());
            }
        }
    }
    let total = |k: usize| per_n.values().map(|s| s[k]).sum::<usize>();
    let (compared, skipped, mismatches) = (total(0), total(1), total(2));
    let per_n_json: Vec<Value> = per_n
        .iter()
        .map(|(n, s)| json!({ "n": n, "compared": s[0], "skipped": s[1], "mismatches": s[2] }))
        .collect();
    let mut text = vec![format!(
        "{}: {} instances, {compared} compared, {skipped} outside the hypotheses, {mismatches} mismatches",
        args.check.name(),
        rows.len()
    )];
    for (n, s) in &per_n {
        text.push(format!("  n = {n}: {} compared, {} skipped, {} mismatches", s[0], s[1], s[2]));
    }
    let inputs = header(args, rows.len())["sweep"].clone();
    let results = json!({
        "check": args.check.name(), "instances": rows.len(), "compared": compared, "skipped": skipped,
        "mismatches": mismatches, "per_n": per_n_json,
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    });
    let mut report = ctx.report(inputs, results, text);
    let matches = mismatches == 0;
    report.cross_check = Some(CrossCheck {
        formula: json!(format!("closed form ({})", args.check.name())),
        oracle: json!(args.check.oracle_name()),
        matches,
        diff: if matches { Value::Null } else { json!({ "mismatches": mismatches }) },
        counterexample: first_bad,
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(check: Check, q: Option<usize>, n_max: usize) -> SweepArgs {
        SweepArgs {
            check,
            q,
            n_min: None,
            n_max,
            d_max: 2,
            sample: None,
            out: None,
            resume: false,
            reading: Reading::Corrected,
            chunk: 7,
        }
    }

    #[test]
    fn enumeration_counts() {
        // pairs u >= v among C(n,2) monomials: 1, 6 and 21 for n = 2, 3, 4
        assert_eq!(instances(&args(Check::Edge, None, 4)).unwrap().len(), 1 + 6 + 21);
        let mut a = args(Check::Depth, Some(3), 6);
        a.sample = Some(10);
        assert_eq!(instances(&a).unwrap().len(), 10);
        assert!(instances(&args(Check::Depth, None, 6)).is_err());
    }

    #[test]
    fn rows_are_ordered_and_deterministic() {
        let ctx = Ctx { p: 0, cross: true, argv: vec![] };
        let a = args(Check::Depth, Some(2), 5);
        let r1 = run(&ctx, &a).unwrap();
        let r2 = run(&ctx, &a).unwrap();
        assert_eq!(r1.to_json(), r2.to_json());
        assert!(!r1.mismatch());
    }
}
