use lexsegment_core::ideal::betti;
use lexsegment_core::{Error, SimplicialComplex, VarSet};
use serde_json::{json, Value};

use super::Ctx;
use crate::cli::{ComplexArgs, SimplicialOp};
use crate::encode::{self, ComplexJson};
use crate::report::Report;
use crate::CliError;

/// The brute-force dual compares all pairs of dual faces.
const DUAL_ORACLE_VARS: usize = 12;

fn load(a: &ComplexArgs) -> Result<SimplicialComplex, CliError> {
    encode::complex(&a.facets, a.n, a.input.as_deref())
}

fn complex_json(c: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexJson::from(c)).expect("plain JSON")
}

pub(super) fn run(ctx: &Ctx, op: &SimplicialOp) -> Result<Report, CliError> {
    let p = ctx.p;
    match op {
        SimplicialOp::Fvector(a) => {
            let c = load(a)?;
            let f: Vec<String> = c.f_vector()?.iter().map(u128::to_string).collect();
            let h: Vec<String> = c.h_vector()?.iter().map(i128::to_string).collect();
            let text = vec![format!("f = ({})", f.join(", ")), format!("h = ({})", h.join(", "))];
            let mut report = ctx.report(complex_json(&c), json!({ "f": f, "h": h }), text);
            // reduced Euler characteristic two ways
            let from_f: i128 = c.f_vector()?.iter().enumerate().map(|(i, &x)| sign(i as i64) * x as i128).sum::<i128>() - 1;
            ctx.check(&mut report, json!(from_f.to_string()), || {
                let hom = c.reduced_homology(p)?;
                let chi: i128 = (-1..=c.dim() as i64).map(|i| sign(i) * hom.rank(i) as i128).sum();
                Ok(Some(json!(chi.to_string())))
            })?;
            Ok(report)
        }
        SimplicialOp::Dual(a) => {
            let c = load(a)?;
            let dual = c.alexander_dual()?;
            let text = vec![format!("dual facets: {}", facets_text(&dual))];
            let mut report = ctx.report(complex_json(&c), json!({ "dual": complex_json(&dual) }), text);
            ctx.check(&mut report, json!(dual.facet_lists()), || {
                if c.n() > DUAL_ORACLE_VARS {
                    return Ok(None);
                }
                // F is a face of the dual iff its complement is not a face
                let n = c.n();
                let faces: Vec<VarSet> =
                    VarSet::full(n).subsets().filter(|f| !c.contains_face(f.complement(n))).collect();
                let maximal: Vec<VarSet> =
                    faces.iter().copied().filter(|f| !faces.iter().any(|g| g != f && f.is_subset(*g))).collect();
                Ok(Some(json!(SimplicialComplex::new(n, maximal)?.facet_lists())))
            })?;
            Ok(report)
        }
        SimplicialOp::Cm(a) => {
            let c = load(a)?;
            let cm = c.is_cohen_macaulay(p)?;
            let text = vec![format!("{}Cohen-Macaulay over characteristic {p}", if cm { "" } else { "not " })];
            let mut report = ctx.report(complex_json(&c), json!({ "cohen_macaulay": cm, "char": p }), text);
            ctx.check(&mut report, json!(cm), || {
                // CM iff the dual's Stanley-Reisner ideal has a linear resolution
                let dual = match c.alexander_dual() {
                    Ok(d) => d,
                    Err(Error::Degenerate(_)) => return Ok(None),
                    Err(e) => return Err(e.into()),
                };
                let i = dual.to_sr_ideal()?;
                Ok(Some(json!(i.is_zero() || betti(&i, p)?.has_linear_resolution())))
            })?;
            Ok(report)
        }
        SimplicialOp::Depth(a) => {
            let c = load(a)?;
            let depth = c.depth(p)?;
            let text = vec![format!("depth {depth}, dim {}", c.krull_dim())];
            let results = json!({ "depth": depth, "dim": c.krull_dim(), "char": p });
            let mut report = ctx.report(complex_json(&c), results, text);
            ctx.check(&mut report, json!(depth), || {
                let table = betti(&c.to_sr_ideal()?, p)?;
                Ok(Some(json!(c.n() - table.projdim_quotient())))
            })?;
            Ok(report)
        }
    }
}

fn sign(i: i64) -> i128 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn facets_text(c: &SimplicialComplex) -> String {
    c.facet_lists()
        .iter()
        .map(|f| format!("{{{}}}", f.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}
