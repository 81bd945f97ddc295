mod gotzmann;
mod ideal;
mod lexideal;
mod lexseg;
mod macaulay;
mod simplicial;

use lexsegment_core::ideal::GradedBettiTable;
use lexsegment_core::simplicial::check_char;
use lexsegment_core::MonomialIdeal;
use serde_json::{json, Value};

use crate::cli::{Cli, Command, LexidealOp};
use crate::encode::IdealJson;
use crate::report::{CrossCheck, Report};
use crate::{sweep, CliError};

pub(crate) struct Ctx {
    pub p: u64,
    pub cross: bool,
    pub argv: Vec<String>,
}

impl Ctx {
    pub fn report(&self, inputs: Value, results: Value, text: Vec<String>) -> Report {
        Report::new(self.argv.clone(), inputs, results, text)
    }

    /// Attaches a comparison when `--cross-check` is on; `oracle` runs only
    /// then.
    pub fn check(
        &self,
        report: &mut Report,
        formula: Value,
        oracle: impl FnOnce() -> Result<Option<Value>, CliError>,
    ) -> Result<(), CliError> {
        if !self.cross {
            return Ok(());
        }
        match oracle()? {
            Some(o) => report.cross_check = Some(CrossCheck::compare(formula, o, report.inputs.clone())),
            None => report.text.push("cross-check: no independent oracle for this operation at this size".into()),
        }
        Ok(())
    }
}

pub(crate) fn dispatch(cli: &Cli, argv: Vec<String>) -> Result<Report, CliError> {
    check_char(cli.char_p)?;
    let ctx = Ctx { p: cli.char_p, cross: cli.cross_check, argv };
    match &cli.command {
        Command::Macaulay(op) => macaulay::run(&ctx, op),
        Command::Lexseg(op) => lexseg::run(&ctx, op),
        Command::Simplicial(op) => simplicial::run(&ctx, op),
        Command::Ideal(op) => ideal::run(&ctx, op),
        Command::Lexideal(LexidealOp::Sweep(args)) => {
            if !args.check.is_lexideal() {
                return Err(CliError::Usage(format!("`{}` is a gotzmann check; use `lextool sweep`", args.check.name())));
            }
            sweep::run(&ctx, args)
        }
        Command::Lexideal(op) => lexideal::run(&ctx, op),
        Command::Gotzmann(op) => gotzmann::run(&ctx, op),
        Command::Sweep(args) => sweep::run(&ctx, args),
    }
}

pub(crate) fn ideal_json(i: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealJson::from(i)).expect("plain JSON")
}

pub(crate) fn betti_json(t: &GradedBettiTable) -> Value {
    Value::Array(t.entries.iter().map(|(&(i, j), &b)| json!({ "i": i, "j": j, "beta": b })).collect())
}

/// Rows `j - i`, columns `i`, as in the usual Betti diagram.
pub(crate) fn betti_text(t: &GradedBettiTable) -> Vec<String> {
    let Some(top) = t.projdim_ideal() else {
        return vec!["zero ideal".into()];
    };
    let shifts: Vec<i64> = t.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
    let (lo, hi) = (*shifts.iter().min().expect("nonempty"), *shifts.iter().max().expect("nonempty"));
    let mut out = vec![format!("{:>4}:{}", "", (0..=top).map(|i| format!("{i:>6}")).collect::<String>())];
    for s in lo..=hi {
        let row: String = (0..=top)
            .map(|i| match t.get(i, (s + i as i64) as u32) {
                0 => format!("{:>6}", "."),
                b => format!("{b:>6}"),
            })
            .collect();
        out.push(format!("{s:>4}:{row}"));
    }
    out
}
