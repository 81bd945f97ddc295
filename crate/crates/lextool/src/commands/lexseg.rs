use lexsegment_core::lexsegments::{build, is_completely, is_lexsegment, shadow, Flavor, SegmentKind};
use lexsegment_core::monomial::{enumerate_degree, succ_lex};
use lexsegment_core::{Error, Monomial};
use serde_json::json;

use super::Ctx;
use crate::cli::{EndsArgs, LexsegOp};
use crate::encode::{self, strings};
use crate::report::Report;
use crate::CliError;

fn flavor(squarefree: bool) -> Flavor {
    if squarefree {
        Flavor::Squarefree
    } else {
        Flavor::General
    }
}

/// Both ends in one variable count: `--n`, or the largest index in either.
fn ends(a: &EndsArgs) -> Result<(Option<Monomial>, Option<Monomial>), CliError> {
    let n = match a.n {
        Some(n) => n,
        None => {
            let mut n = 1;
            for (label, t) in [("--u", &a.u), ("--v", &a.v)] {
                if let Some(t) = t {
                    n = n.max(encode::top_index(label, t)?);
                }
            }
            n
        }
    };
    let parse = |label: &str, t: &Option<String>| t.as_deref().map(|t| encode::monomial(label, t, Some(n))).transpose();
    Ok((parse("--u", &a.u)?, parse("--v", &a.v)?))
}

pub(super) fn run(ctx: &Ctx, op: &LexsegOp) -> Result<Report, CliError> {
    match op {
        LexsegOp::Build(a) => {
            let (u, v) = ends(a)?;
            let fl = flavor(a.squarefree);
            let seg = build(u.as_ref(), v.as_ref(), fl)?;
            let kind = match seg.kind {
                SegmentKind::Initial { .. } => "initial",
                SegmentKind::Final { .. } => "final",
                SegmentKind::Arbitrary { .. } => "arbitrary",
            };
            let members = strings(&seg.members);
            let inputs = json!({ "u": a.u, "v": a.v, "n": seg.n, "squarefree": a.squarefree });
            let text = vec![
                format!("{kind} segment of degree {} in {} variables, {} monomials", seg.d, seg.n, members.len()),
                members.join(" > "),
            ];
            let results = json!({ "n": seg.n, "d": seg.d, "kind": kind, "size": members.len(), "members": members });
            let mut report = ctx.report(inputs, results, text);
            ctx.check(&mut report, json!(members), || {
                // walk down from the top end one successor at a time
                let mut walk = vec![seg.top().clone()];
                while walk.last() != Some(seg.bottom()) {
                    match succ_lex(walk.last().expect("nonempty"), fl.is_squarefree()) {
                        Ok(next) => walk.push(next),
                        Err(Error::NoNeighbor(_)) => break,
                        Err(e) => return Err(e.into()),
                    }
                }
                Ok(Some(json!(strings(&walk))))
            })?;
            Ok(report)
        }
        LexsegOp::Shadow { set, squarefree } => {
            let (n, gens) = match &set.input {
                Some(_) => {
                    let i = encode::ideal(&set.gens, set.n, set.input.as_deref())?;
                    (i.n(), i.gens().to_vec())
                }
                None => encode::generators(&set.gens, set.n)?,
            };
            let fl = flavor(*squarefree);
            let shad = shadow(&gens, fl)?;
            let lex = is_lexsegment(&shad, fl)?;
            let out = strings(&shad);
            let inputs = json!({ "n": n, "set": strings(&gens), "squarefree": squarefree });
            let text = vec![
                format!("{} monomials{}", out.len(), if lex { ", a lexsegment" } else { ", not a lexsegment" }),
                out.join(" > "),
            ];
            let mut report = ctx.report(inputs, json!({ "shadow": out, "size": out.len(), "is_lexsegment": lex }), text);
            ctx.check(&mut report, json!(out), || {
                let Some(d) = gens.first().map(Monomial::degree) else {
                    return Ok(Some(json!([])));
                };
                let hit: Vec<Monomial> = enumerate_degree(n, d + 1, fl.is_squarefree())?
                    .into_iter()
                    .filter(|w| gens.iter().any(|g| g.divides(w)))
                    .collect();
                Ok(Some(json!(strings(&hit))))
            })?;
            Ok(report)
        }
        LexsegOp::Complete(a) => {
            let (Some(u), Some(v)) = ends(a)? else {
                return Err(CliError::Usage("`complete` needs both --u and --v".into()));
            };
            let fl = flavor(a.squarefree);
            let yes = is_completely(&u, &v, fl)?;
            let inputs = json!({ "u": u.to_string(), "v": v.to_string(), "n": u.n(), "squarefree": a.squarefree });
            let text = vec![format!("L({u}, {v}) is {}completely", if yes { "" } else { "not " })];
            let mut report = ctx.report(inputs, json!({ "completely": yes }), text);
            ctx.check(&mut report, json!(yes), || Ok(Some(json!(iterated_shadows_lex(&u, &v, fl)?))))?;
            Ok(report)
        }
    }
}

/// Every shadow up to degree `n` (squarefree) or `d + 3` stays a lexsegment.
fn iterated_shadows_lex(u: &Monomial, v: &Monomial, fl: Flavor) -> Result<bool, CliError> {
    let mut set = build(Some(u), Some(v), fl)?.members;
    let steps = if fl.is_squarefree() { u.n().saturating_sub(u.degree() as usize) } else { 3 };
    for _ in 0..steps {
        set = shadow(&set, fl)?;
        if set.is_empty() {
            break;
        }
        if !is_lexsegment(&set, fl)? {
            return Ok(false);
        }
    }
    Ok(true)
}
