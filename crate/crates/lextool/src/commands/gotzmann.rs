use lexsegment_core::gotzmann::{
    adh_linear_resolution, depth_zero_lexseg, gotzmann_completely_lexseg, gotzmann_growth,
    gotzmann_noncomplete_lexseg, is_gotzmann, lex_ideal_of, lexseg_ideal, taylor_minimality,
};
use lexsegment_core::ideal::betti;
use lexsegment_core::lexsegments::{is_completely, Flavor};
use lexsegment_core::monomial::binomial;
use lexsegment_core::{Error, MonomialIdeal};
use serde_json::{json, Map, Value};

use super::ideal::load;
use super::{ideal_json, Ctx};
use crate::cli::{Check, GenEndsArgs, GotzmannOp, Reading};
use crate::encode;
use crate::report::Report;
use crate::sweep::{formula_value, oracle_value, Instance};
use crate::CliError;

pub(super) fn run(ctx: &Ctx, op: &GotzmannOp) -> Result<Report, CliError> {
    let p = ctx.p;
    match op {
        GotzmannOp::Test(a) => {
            let i = load(a)?;
            let yes = is_gotzmann(&i)?;
            let mut results = json!({ "gotzmann": yes });
            let mut text = vec![format!("{i} is {}Gotzmann", if yes { "" } else { "not " })];
            let growth = if i.is_equigenerated() { Some(gotzmann_growth(&i)?) } else { None };
            if let Some(g) = growth {
                results["growth"] =
                    json!({ "d": g.d, "dim_next": g.actual.to_string(), "least_next": g.least.to_string() });
                text.push(format!("dim I_{} = {}, least possible {}", g.d + 1, g.actual, g.least));
            }
            let mut report = ctx.report(ideal_json(&i), results, text);
            ctx.check(&mut report, json!(yes), || {
                // persistence: the lex ideal needs no generator above degree d
                Ok(match growth {
                    Some(g) => Some(json!(lex_ideal_of(&i)?.max_degree() == Some(g.d))),
                    None => None,
                })
            })?;
            Ok(report)
        }
        GotzmannOp::Classify(a) => classify(ctx, a),
        GotzmannOp::Lexify(a) => {
            let i = load(a)?;
            let lex = lex_ideal_of(&i)?;
            let text = vec![format!("I^lex = {lex}")];
            let mut report = ctx.report(ideal_json(&i), json!({ "lex": ideal_json(&lex) }), text);
            let top = lex.max_degree().unwrap_or(0) + 2;
            let from = i.indeg().unwrap_or(0);
            let values = |j: &MonomialIdeal| -> Result<Value, Error> {
                (from..=top).map(|d| j.hilbert_value(d).map(|h| json!(h.to_string()))).collect()
            };
            let f = values(&lex)?;
            ctx.check(&mut report, f, || Ok(Some(values(&i)?)))?;
            Ok(report)
        }
        GotzmannOp::TaylorMin(a) => {
            let i = load(a)?;
            let t = taylor_minimality(&i, p)?;
            let mut text = vec![format!("Taylor resolution of {i} is {}minimal", if t.minimal { "" } else { "not " })];
            if let Some(w) = &t.witness {
                text.push(format!("{w} divides the lcm of the other generators"));
            }
            let criteria = t.cwl_criteria.map(|(m, g)| json!({ "max_index_equals_mu": m, "gotzmann_with_mu_at_most_n": g }));
            let results = json!({
                "minimal": t.minimal, "witness": t.witness.as_ref().map(ToString::to_string),
                "max_m": t.max_m, "componentwise_linear_criteria": criteria,
            });
            let mut report = ctx.report(ideal_json(&i), results, text);
            ctx.check(&mut report, json!(t.minimal), || {
                // minimal iff beta_k(I) = C(mu, k + 1) for every k
                let table = betti(&i, p)?;
                let mu = i.mu() as u64;
                let full = (0..mu as usize).all(|k| Some(table.total(k) as u128) == binomial(mu, k as u64 + 1));
                Ok(Some(json!(full)))
            })?;
            Ok(report)
        }
    }
}

fn classify(ctx: &Ctx, a: &GenEndsArgs) -> Result<Report, CliError> {
    let n = match a.n {
        Some(n) => n,
        None => encode::top_index("--u", &a.u)?.max(encode::top_index("--v", &a.v)?),
    };
    let u = encode::monomial("--u", &a.u, Some(n))?;
    let v = encode::monomial("--v", &a.v, Some(n))?;
    let i = lexseg_ideal(&u, &v)?;
    let completely = is_completely(&u, &v, Flavor::General)?;
    let mut results = Map::new();
    let mut text = vec![format!("L({u}, {v}) in {n} variables is {}completely", if completely { "" } else { "not " })];
    results.insert("completely".into(), json!(completely));
    let gotz = if completely {
        gotzmann_completely_lexseg(&u, &v).map(|c| c.gotzmann)
    } else {
        gotzmann_noncomplete_lexseg(&u, &v)
    };
    let verdicts = [
        ("gotzmann", if completely { Check::Compg } else { Check::Noncomplete }, gotz),
        ("linear_resolution", Check::Adh, adh_linear_resolution(&u, &v)),
        ("depth_zero", Check::DepthZero, depth_zero_lexseg(&u, &v)),
    ];
    let mut decided = Vec::new();
    for (key, check, verdict) in verdicts {
        match verdict {
            Ok(b) => {
                results.insert(key.into(), json!(b));
                text.push(format!("{key}: {b}"));
                decided.push((key, check));
            }
            Err(Error::Domain(msg)) => {
                results.insert(key.into(), Value::Null);
                text.push(format!("{key}: outside the criterion ({msg})"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let inst = Instance::General { u, v };
    let mut report = ctx.report(inst.to_json(), Value::Object(results), text);
    report.inputs["ideal"] = ideal_json(&i);
    if ctx.cross {
        let (mut f, mut o) = (Map::new(), Map::new());
        for (key, check) in decided {
            let fv = formula_value(check, &inst, ctx.p, Reading::Corrected)?;
            o.insert(key.into(), oracle_value(check, &inst, ctx.p, &fv)?);
            f.insert(key.into(), fv);
        }
        ctx.check(&mut report, Value::Object(f), || Ok(Some(Value::Object(o))))?;
    }
    Ok(report)
}
