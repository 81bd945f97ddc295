use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// What every subcommand returns.  `text` is the human rendering and is not
/// part of the JSON schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Value,
    pub results: Value,
    pub cross_check: Option<CrossCheck>,
    #[serde(skip)]
    pub text: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub formula: Value,
    pub oracle: Value,
    #[serde(rename = "match")]
    pub matches: bool,
    /// `null` on a match.
    pub diff: Value,
    /// Smallest failing instance; present exactly when `match` is false.
    pub counterexample: Option<Value>,
}

impl CrossCheck {
    /// Compares two canonical values; `instance` becomes the counterexample
    /// if they differ.
    pub fn compare(formula: Value, oracle: Value, instance: Value) -> CrossCheck {
        let matches = formula == oracle;
        let diff = if matches { Value::Null } else { diff(&formula, &oracle) };
        CrossCheck { formula, oracle, matches, diff, counterexample: (!matches).then_some(instance) }
    }
}

fn diff(f: &Value, o: &Value) -> Value {
    match (f, o) {
        (Value::Array(a), Value::Array(b)) => {
            let only = |x: &[Value], y: &[Value]| x.iter().filter(|e| !y.contains(e)).cloned().collect::<Vec<_>>();
            json!({ "only_formula": only(a, b), "only_oracle": only(b, a) })
        }
        (Value::Object(a), Value::Object(b)) => {
            let mut out = serde_json::Map::new();
            for (k, fv) in a {
                let ov = b.get(k).unwrap_or(&Value::Null);
                if fv != ov {
                    out.insert(k.clone(), json!({ "formula": fv, "oracle": ov }));
                }
            }
            for (k, ov) in b {
                if !a.contains_key(k) {
                    out.insert(k.clone(), json!({ "formula": null, "oracle": ov }));
                }
            }
            Value::Object(out)
        }
        _ => json!({ "formula": f, "oracle": o }),
    }
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Value, results: Value, text: Vec<String>) -> Report {
        Report { command, inputs, results, cross_check: None, text }
    }

    pub fn mismatch(&self) -> bool {
        self.cross_check.as_ref().is_some_and(|c| !c.matches)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.text {
            out.push_str(line);
            out.push('\n');
        }
        if let Some(c) = &self.cross_check {
            if c.matches {
                out.push_str(&format!("cross-check: match ({})\n", c.formula));
            } else {
                out.push_str("cross-check: MISMATCH\n");
                out.push_str(&format!("  formula: {}\n  oracle:  {}\n  diff:    {}\n", c.formula, c.oracle, c.diff));
                if let Some(x) = &c.counterexample {
                    out.push_str(&format!("  counterexample: {x}\n"));
                }
            }
        }
        out
    }
}
