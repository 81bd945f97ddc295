use lexsegment_core::formulas::{
    depth_degree3_with, edge_invariants, invariants_formula, is_seq_cm, primdec_formula, sv_construct, LexsegSpec,
};
use serde_json::{json, Value};

use super::Ctx;
use crate::cli::{Check, LexidealOp, Reading, SpecArgs};
use crate::encode::{self, strings};
use crate::report::Report;
use crate::sweep::{formula_value, oracle_value, Instance};
use crate::CliError;

pub(crate) fn spec(a: &SpecArgs) -> Result<LexsegSpec, CliError> {
    let n = a.n;
    let u = a.u.as_deref().map(|t| encode::varset("--u", t, n)).transpose()?;
    let v = a.v.as_deref().map(|t| encode::varset("--v", t, n)).transpose()?;
    Ok(match (a.initial, a.final_, u, v) {
        (true, _, _, Some(v)) => LexsegSpec::initial(n, v)?,
        (_, true, Some(u), _) => LexsegSpec::final_segment(n, u)?,
        (false, false, Some(u), Some(v)) => LexsegSpec::new(n, u, v)?,
        _ => return Err(CliError::Usage("give --u and --v, --initial with --v, or --final with --u".into())),
    })
}

fn primes_text(primes: &[lexsegment_core::VarSet]) -> Vec<String> {
    primes
        .iter()
        .map(|p| format!("({})", p.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(", ")))
        .collect()
}

pub(super) fn run(ctx: &Ctx, op: &LexidealOp) -> Result<Report, CliError> {
    let mut reading = Reading::Corrected;
    let (check, a) = match op {
        LexidealOp::Primdec(a) => (Check::Primdec, a),
        LexidealOp::Invariants(a) => (Check::Invariants, a),
        LexidealOp::Seqcm(a) => (Check::Seqcm, a),
        LexidealOp::Edge(a) => (Check::Edge, a),
        LexidealOp::Deg3 { spec, reading: r } => {
            reading = *r;
            (Check::Deg3, spec)
        }
        LexidealOp::Sv(a) => (Check::Sv, a),
        LexidealOp::Sweep(_) => unreachable!("sweeps are dispatched separately"),
    };
    let s = spec(a)?;
    let inst = Instance::Segment(s);
    let p = ctx.p;
    let (results, text): (Value, Vec<String>) = match check {
        Check::Primdec => {
            let d = primdec_formula(&s)?;
            let shown = primes_text(&d.primes);
            let mut text = vec![format!("{s}: {} minimal primes", d.primes.len())];
            text.extend(shown.iter().map(|p| format!("  {p}")));
            text.extend(d.notes.iter().cloned());
            let lists: Vec<Vec<usize>> = d.primes.iter().map(|p| p.to_vec()).collect();
            (json!({ "count": d.primes.len(), "primes": lists, "notes": d.notes }), text)
        }
        Check::Invariants => {
            let inv = invariants_formula(&s)?;
            let depth = inv.depth.map_or("no closed form".into(), |d| d.to_string());
            let mut text = vec![format!(
                "{s}: dim {}, depth {depth}, multiplicity {}, {}",
                inv.dim,
                inv.multiplicity,
                if inv.pure { "pure" } else { "not pure" }
            )];
            text.extend(inv.notes.iter().cloned());
            let results = json!({
                "dim": inv.dim, "depth": inv.depth, "multiplicity": inv.multiplicity.to_string(),
                "pure": inv.pure, "cohen_macaulay": inv.cm, "notes": inv.notes,
            });
            (results, text)
        }
        Check::Seqcm => {
            let b = is_seq_cm(&s, p)?;
            (json!({ "sequentially_cm": b }), vec![format!("{s}: {}sequentially Cohen-Macaulay", if b { "" } else { "not " })])
        }
        Check::Edge => {
            let e = edge_invariants(s.n, s.u, s.v)?;
            let sets: Vec<Vec<String>> = e.sv.sets.iter().map(|a| strings(a)).collect();
            let mut text = vec![format!(
                "{s}: dim {}, depth {}, reg {}, projdim {}, ara {}, ara of the dual {}",
                e.dim, e.depth, e.reg, e.projdim, e.ara, e.dual_ara
            )];
            text.extend(e.sv.to_string().lines().map(|l| format!("  {l}")));
            text.extend(e.notes.iter().cloned());
            let results = json!({
                "dim": e.dim, "depth": e.depth, "reg": e.reg, "projdim": e.projdim, "ara": e.ara,
                "dual_ara": e.dual_ara, "certificate": sets, "notes": e.notes,
            });
            (results, text)
        }
        Check::Deg3 => {
            let (d, case) = depth_degree3_with(s.n, s.u, s.v, reading.into())?;
            (json!({ "depth": d, "case": format!("{case:?}") }), vec![format!("{s}: depth {d} by clause {case:?}")])
        }
        Check::Sv => {
            let cert = sv_construct(&s)?;
            let sets: Vec<Vec<String>> = cert.sets.iter().map(|a| strings(a)).collect();
            let mut text = vec![format!("{s}: {} sets", cert.len())];
            text.extend(cert.to_string().lines().map(|l| format!("  {l}")));
            (json!({ "length": cert.len(), "certificate": sets }), text)
        }
        _ => unreachable!("not a lexideal operation"),
    };
    let mut report = ctx.report(inst.to_json(), results, text);
    if ctx.cross {
        let f = formula_value(check, &inst, p, reading)?;
        ctx.check(&mut report, f.clone(), || Ok(Some(oracle_value(check, &inst, p, &f)?)))?;
    }
    Ok(report)
}
