use lexsegment_core::ideal::{
    betti, depth_quotient, has_componentwise_linear_quotients, has_linear_quotients, is_componentwise_linear,
    is_componentwise_linear_graded, is_linear_quotient_order, standard_primary_decomposition, taylor_betti,
    LinearQuotients, Verdict, TAYLOR_CAP,
};
use lexsegment_core::{MonomialIdeal, SimplicialComplex};
use serde_json::json;

use super::{betti_json, betti_text, ideal_json, Ctx};
use crate::cli::{IdealArgs, IdealOp};
use crate::encode::{self, strings};
use crate::report::Report;
use crate::CliError;

pub(super) fn load(a: &IdealArgs) -> Result<MonomialIdeal, CliError> {
    encode::ideal(&a.gens, a.n, a.input.as_deref())
}

pub(super) fn run(ctx: &Ctx, op: &IdealOp) -> Result<Report, CliError> {
    let p = ctx.p;
    match op {
        IdealOp::Primdec(a) => {
            let i = load(a)?;
            let comps = standard_primary_decomposition(&i)?;
            let shown = strings(&comps);
            let primes: Vec<String> = comps.iter().map(|c| c.prime().to_string()).collect();
            let text = vec![format!("{i} = {}", shown.join(" ∩ "))];
            let results = json!({ "components": shown, "primes": primes });
            let mut report = ctx.report(ideal_json(&i), results, text);
            ctx.check(&mut report, ideal_json(&i), || {
                // the components must intersect back to I
                let mut meet: Option<MonomialIdeal> = None;
                for c in &comps {
                    let q = c.to_ideal(i.n())?;
                    meet = Some(match meet {
                        None => q,
                        Some(m) => m.intersect(&q)?,
                    });
                }
                Ok(Some(ideal_json(&meet.unwrap_or(MonomialIdeal::parse(i.n(), &["1"])?))))
            })?;
            Ok(report)
        }
        IdealOp::Betti(a) => {
            let i = load(a)?;
            let table = betti(&i, p)?;
            let results = json!({ "betti": betti_json(&table), "char": p });
            let mut report = ctx.report(ideal_json(&i), results, betti_text(&table));
            ctx.check(&mut report, betti_json(&table), || taylor(&i, p).map(|t| t.map(|t| betti_json(&t))))?;
            Ok(report)
        }
        IdealOp::Reg(a) => {
            let i = load(a)?;
            let reg = betti(&i, p)?.reg();
            let text = vec![reg.map_or("zero ideal".into(), |r| format!("reg(I) = {r}"))];
            let mut report = ctx.report(ideal_json(&i), json!({ "reg": reg, "char": p }), text);
            ctx.check(&mut report, json!(reg), || taylor(&i, p).map(|t| t.map(|t| json!(t.reg()))))?;
            Ok(report)
        }
        IdealOp::Depth(a) => {
            let i = load(a)?;
            let depth = depth_quotient(&i, p)?;
            let text = vec![format!("depth(S/I) = {depth}")];
            let mut report = ctx.report(ideal_json(&i), json!({ "depth": depth, "char": p }), text);
            ctx.check(&mut report, json!(depth), || {
                if i.is_squarefree() && !i.is_unit() {
                    return Ok(Some(json!(SimplicialComplex::from_sr_ideal(&i)?.depth(p)?)));
                }
                taylor(&i, p).map(|t| t.map(|t| json!(i.n() - t.projdim_quotient())))
            })?;
            Ok(report)
        }
        IdealOp::Linquot { ideal, limit } => {
            let i = load(ideal)?;
            let verdict = has_linear_quotients(&i, *limit);
            let (answer, order) = match &verdict {
                LinearQuotients::Yes(o) => ("yes", Some(strings(o))),
                LinearQuotients::No => ("no", None),
                LinearQuotients::Unknown => ("unknown", None),
            };
            let mut text = vec![format!("linear quotients: {answer}")];
            if let Some(o) = &order {
                text.push(format!("order: {}", o.join(", ")));
            }
            let results = json!({ "linear_quotients": answer, "order": order, "limit": limit });
            let mut report = ctx.report(ideal_json(&i), results, text);
            ctx.check(&mut report, json!(answer), || {
                Ok(match &verdict {
                    LinearQuotients::Yes(o) => Some(json!(if is_linear_quotient_order(o) { "yes" } else { "no" })),
                    _ => None,
                })
            })?;
            Ok(report)
        }
        IdealOp::Cwl(a) => {
            let i = load(a)?;
            let cwl = is_componentwise_linear(&i, p)?;
            let text = vec![format!("{}componentwise linear", if cwl { "" } else { "not " })];
            let mut report = ctx.report(ideal_json(&i), json!({ "componentwise_linear": cwl, "char": p }), text);
            ctx.check(&mut report, json!(cwl), || {
                if i.is_squarefree() {
                    return Ok(Some(json!(is_componentwise_linear_graded(&i, p)?)));
                }
                // linear quotients in every component is sufficient only
                Ok(match has_componentwise_linear_quotients(&i, 10)? {
                    Verdict::Yes => Some(json!(true)),
                    _ => None,
                })
            })?;
            Ok(report)
        }
    }
}

fn taylor(i: &MonomialIdeal, p: u64) -> Result<Option<lexsegment_core::ideal::GradedBettiTable>, CliError> {
    if i.mu() > TAYLOR_CAP {
        return Ok(None);
    }
    Ok(Some(taylor_betti(i, p)?))
}
