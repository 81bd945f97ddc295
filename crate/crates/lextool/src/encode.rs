//! JSON encodings of monomials, complexes and ideals, and the argument
//! parsers that report byte positions.

use std::fs;
use std::path::Path;

use lexsegment_core::{Error, Monomial, MonomialIdeal, SimplicialComplex, VarSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"n": 3, "exps": [1, 0, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub n: usize,
    pub exps: Vec<u32>,
}

/// `{"n": 5, "facets": [[1, 4], [2, 3, 5]]}`, vertices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// `{"n": 3, "gens": ["x1*x3^2", "x2"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<String>,
}

impl From<&Monomial> for MonomialJson {
    fn from(m: &Monomial) -> MonomialJson {
        MonomialJson { n: m.n(), exps: m.exps().to_vec() }
    }
}

impl TryFrom<&MonomialJson> for Monomial {
    type Error = Error;
    fn try_from(j: &MonomialJson) -> Result<Monomial, Error> {
        if j.exps.len() != j.n {
            return Err(Error::Dimension { expected: j.n, found: j.exps.len() });
        }
        Monomial::new(j.exps.clone())
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> ComplexJson {
        ComplexJson { n: c.n(), facets: c.facet_lists() }
    }
}

impl TryFrom<&ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(j: &ComplexJson) -> Result<SimplicialComplex, Error> {
        SimplicialComplex::from_lists(j.n, &j.facets)
    }
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> IdealJson {
        IdealJson { n: i.n(), gens: strings(i.gens()) }
    }
}

impl TryFrom<&IdealJson> for MonomialIdeal {
    type Error = CliError;
    fn try_from(j: &IdealJson) -> Result<MonomialIdeal, CliError> {
        let gens = j
            .gens
            .iter()
            .enumerate()
            .map(|(k, g)| monomial(&format!("gens[{k}]"), g, Some(j.n)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal::new(j.n, gens)?)
    }
}

pub fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

/// Attaches the argument text to a parse error so it can be pointed at.
fn located(label: &str, text: &str, offset: usize, e: Error) -> CliError {
    match e {
        Error::Parse { pos, msg } => {
            CliError::Input { label: label.to_string(), text: text.to_string(), pos: offset + pos, msg }
        }
        other => CliError::Core(other),
    }
}

pub fn monomial(label: &str, text: &str, n: Option<usize>) -> Result<Monomial, CliError> {
    Monomial::parse(text, n).map_err(|e| located(label, text, 0, e))
}

/// A squarefree monomial as its support.
pub fn varset(label: &str, text: &str, n: usize) -> Result<VarSet, CliError> {
    let m = monomial(label, text, Some(n))?;
    m.as_set().ok_or_else(|| CliError::Core(Error::Flavor(format!("{label} = {m}"))))
}

/// Largest variable index mentioned, for defaulting `n`.
pub fn top_index(label: &str, text: &str) -> Result<usize, CliError> {
    Ok(monomial(label, text, None)?.n())
}

/// Splits every argument on commas and parses each piece; positions stay
/// relative to the argument they came from.
pub fn generators(args: &[String], n: Option<usize>) -> Result<(usize, Vec<Monomial>), CliError> {
    let mut pieces = Vec::new();
    for (k, arg) in args.iter().enumerate() {
        let mut offset = 0;
        for piece in arg.split(',') {
            pieces.push((format!("argument {}", k + 1), arg.as_str(), offset, piece));
            offset += piece.len() + 1;
        }
    }
    let parse = |n: Option<usize>| -> Result<Vec<Monomial>, CliError> {
        pieces
            .iter()
            .map(|(label, arg, offset, piece)| Monomial::parse(piece, n).map_err(|e| located(label, arg, *offset, e)))
            .collect()
    };
    let n = match n {
        Some(n) => n,
        None => parse(None)?.iter().map(Monomial::n).max().unwrap_or(1),
    };
    Ok((n, parse(Some(n))?))
}

pub fn ideal(args: &[String], n: Option<usize>, input: Option<&Path>) -> Result<MonomialIdeal, CliError> {
    if let Some(path) = input {
        let j: IdealJson = read_json(path)?;
        return MonomialIdeal::try_from(&j);
    }
    if args.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    let (n, gens) = generators(args, n)?;
    Ok(MonomialIdeal::new(n, gens)?)
}

/// `1,3,4` as a facet.
pub fn facet(label: &str, text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        match trimmed.parse::<usize>() {
            Ok(v) if v >= 1 => out.push(v),
            _ => {
                return Err(CliError::Input {
                    label: label.to_string(),
                    text: text.to_string(),
                    pos: offset + lead,
                    msg: "expected a vertex number >= 1".into(),
                })
            }
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

pub fn complex(args: &[String], n: Option<usize>, input: Option<&Path>) -> Result<SimplicialComplex, CliError> {
    if let Some(path) = input {
        let j: ComplexJson = read_json(path)?;
        return Ok(SimplicialComplex::try_from(&j)?);
    }
    let facets = args
        .iter()
        .enumerate()
        .map(|(k, a)| facet(&format!("facet {}", k + 1), a))
        .collect::<Result<Vec<_>, _>>()?;
    let n = n.unwrap_or_else(|| facets.iter().flatten().copied().max().unwrap_or(1));
    Ok(SimplicialComplex::from_lists(n, &facets)?)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: shown, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_relative_to_the_argument() {
        let args = vec!["x1*x2".to_string(), "x2*x3,x3*y4".to_string()];
        match generators(&args, None) {
            Err(CliError::Input { label, pos, .. }) => assert_eq!((label.as_str(), pos), ("argument 2", 9)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn facet_errors_point_at_the_piece() {
        match facet("facet 1", "1, 2,x") {
            Err(CliError::Input { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ideal_round_trip() {
        let i = MonomialIdeal::parse(4, &["x1*x3^2", "x2*x4"]).unwrap();
        let j = IdealJson::from(&i);
        let text = serde_json::to_string(&j).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MonomialIdeal::try_from(&back).unwrap(), i);
    }
}
