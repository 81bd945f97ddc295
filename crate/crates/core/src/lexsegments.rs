//! Lexsegment sets, shadows and the completeness test.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{enumerate_degree, enumerate_sqf, Monomial, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    General,
    Squarefree,
}

impl Flavor {
    pub fn is_squarefree(self) -> bool {
        self == Flavor::Squarefree
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentKind {
    Initial { v: Monomial },
    Final { u: Monomial },
    Arbitrary { u: Monomial, v: Monomial },
}

/// `members == {w in Mon_d : u >= w >= v}`, lex-descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexSegment {
    pub n: usize,
    pub d: u32,
    pub flavor: Flavor,
    pub kind: SegmentKind,
    pub members: Vec<Monomial>,
}

impl LexSegment {
    /// Top end: `u`, or the lex-maximum of the class for an initial segment.
    pub fn top(&self) -> &Monomial {
        &self.members[0]
    }
    pub fn bottom(&self) -> &Monomial {
        self.members.last().expect("segments are nonempty")
    }
}

fn check_flavor(m: &Monomial, flavor: Flavor) -> Result<()> {
    if flavor.is_squarefree() && !m.is_squarefree() {
        return Err(Error::Flavor(m.to_string()));
    }
    Ok(())
}

/// `L(u, v)`; an omitted `u` gives the initial segment `L^i(v)`, an omitted
/// `v` the final segment `L^f(u)`.
pub fn build(u: Option<&Monomial>, v: Option<&Monomial>, flavor: Flavor) -> Result<LexSegment> {
    let (n, d) = match (u, v) {
        (None, None) => return Err(Error::Parameter("a lexsegment needs at least one end".to_string())),
        (Some(a), Some(b)) => {
            if a.n() != b.n() {
                return Err(Error::Dimension { expected: a.n(), found: b.n() });
            }
            if a.degree() != b.degree() {
                return Err(Error::Parameter(format!("ends {a} and {b} have different degrees")));
            }
            if a < b {
                return Err(Error::Order(format!("{a} <lex {b}")));
            }
            (a.n(), a.degree())
        }
        (Some(a), None) | (None, Some(a)) => (a.n(), a.degree()),
    };
    for m in u.iter().chain(v.iter()) {
        check_flavor(m, flavor)?;
    }
    let members: Vec<Monomial> = enumerate_degree(n, d, flavor.is_squarefree())?
        .into_iter()
        .filter(|w| u.is_none_or(|u| u >= w) && v.is_none_or(|v| w >= v))
        .collect();
    let kind = match (u, v) {
        (Some(u), Some(v)) => SegmentKind::Arbitrary { u: u.clone(), v: v.clone() },
        (Some(u), None) => SegmentKind::Final { u: u.clone() },
        (None, Some(v)) => SegmentKind::Initial { v: v.clone() },
        (None, None) => unreachable!(),
    };
    Ok(LexSegment { n, d, flavor, kind, members })
}

/// `{x_1..x_n} L`, or `{x_i w : w in L, x_i does not divide w}` in the
/// squarefree flavor.  Deduplicated and lex-descending.
pub fn shadow(set: &[Monomial], flavor: Flavor) -> Result<Vec<Monomial>> {
    let Some(first) = set.first() else {
        return Ok(Vec::new());
    };
    let (n, d) = (first.n(), first.degree());
    let mut out = Vec::new();
    for w in set {
        if w.n() != n {
            return Err(Error::Dimension { expected: n, found: w.n() });
        }
        if w.degree() != d {
            return Err(Error::Parameter(format!("mixed degrees {d} and {} in shadow input", w.degree())));
        }
        check_flavor(w, flavor)?;
        for i in 1..=n {
            if flavor.is_squarefree() && w.exp(i) > 0 {
                continue;
            }
            out.push(w.mul_var(i));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    Ok(out)
}

/// Whether `set` is contiguous in the lex order of its degree class.
pub fn is_lexsegment(set: &[Monomial], flavor: Flavor) -> Result<bool> {
    let Some(first) = set.first() else {
        return Ok(true);
    };
    let (n, d) = (first.n(), first.degree());
    if set.iter().any(|w| w.n() != n || w.degree() != d) {
        return Err(Error::Parameter("is_lexsegment needs a homogeneous set".to_string()));
    }
    for w in set {
        check_flavor(w, flavor)?;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    let class = enumerate_degree(n, d, flavor.is_squarefree())?;
    let start = class.binary_search_by(|w| sorted[0].cmp(w)).expect("member of its own class");
    Ok(class.get(start..start + sorted.len()) == Some(&sorted[..]))
}

/// Completely lexsegment test: by persistence one shadow decides all
/// iterated shadows.
pub fn is_completely(u: &Monomial, v: &Monomial, flavor: Flavor) -> Result<bool> {
    let seg = build(Some(u), Some(v), flavor)?;
    is_lexsegment(&shadow(&seg.members, flavor)?, flavor)
}

// ---- squarefree fast paths on `VarSet` --------------------------------------

/// `L(u, v)` among `|u|`-subsets of `[n]`, lex-descending.
pub fn sqf_segment(n: usize, u: VarSet, v: VarSet) -> Result<Vec<VarSet>> {
    if u.len() != v.len() {
        return Err(Error::Parameter(format!("ends {u} and {v} have different degrees")));
    }
    if u < v {
        return Err(Error::Order(format!("{u} <lex {v}")));
    }
    Ok(enumerate_sqf(n, u.len() as u32)?.into_iter().filter(|w| *w <= u && *w >= v).collect())
}

/// `L^i(v)`.
pub fn sqf_initial(n: usize, v: VarSet) -> Result<Vec<VarSet>> {
    Ok(enumerate_sqf(n, v.len() as u32)?.into_iter().filter(|w| *w >= v).collect())
}

/// `L^f(u)`.
pub fn sqf_final(n: usize, u: VarSet) -> Result<Vec<VarSet>> {
    Ok(enumerate_sqf(n, u.len() as u32)?.into_iter().filter(|w| *w <= u).collect())
}

pub fn sqf_shadow(n: usize, set: &[VarSet]) -> Vec<VarSet> {
    let mut out: Vec<VarSet> = set
        .iter()
        .flat_map(|&w| w.complement(n).iter().map(move |i| w.with(i)))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

pub fn sqf_is_lexsegment(n: usize, set: &[VarSet]) -> bool {
    let Some(first) = set.first() else {
        return true;
    };
    let mut sorted = set.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    let Ok(class) = enumerate_sqf(n, first.len() as u32) else {
        return false;
    };
    match class.binary_search_by(|w| sorted[0].cmp(w)) {
        Ok(start) => class.get(start..start + sorted.len()) == Some(&sorted[..]),
        Err(_) => false,
    }
}

pub fn sqf_is_completely(n: usize, u: VarSet, v: VarSet) -> Result<bool> {
    Ok(sqf_is_lexsegment(n, &sqf_shadow(n, &sqf_segment(n, u, v)?)))
}

/// Lex comparison of two squarefree monomials (alias of the `VarSet` order).
pub fn sqf_cmp(a: VarSet, b: VarSet) -> Ordering {
    a.cmp(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, Some(n)).unwrap()
    }
    fn strs(v: &[Monomial]) -> Vec<alloc::string::String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn squarefree_segment_example() {
        let seg = build(Some(&m("x1*x2*x5", 6)), Some(&m("x3*x4*x5", 6)), Flavor::Squarefree).unwrap();
        assert_eq!(
            strs(&seg.members),
            [
                "x1*x2*x5", "x1*x2*x6", "x1*x3*x4", "x1*x3*x5", "x1*x3*x6", "x1*x4*x5", "x1*x4*x6", "x1*x5*x6",
                "x2*x3*x4", "x2*x3*x5", "x2*x3*x6", "x2*x4*x5", "x2*x4*x6", "x2*x5*x6", "x3*x4*x5"
            ]
        );
    }

    #[test]
    fn general_segment_example() {
        let seg = build(Some(&m("x1*x2^2", 3)), Some(&m("x2^2*x3", 3)), Flavor::General).unwrap();
        assert_eq!(strs(&seg.members), ["x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3"]);
        let single = build(Some(&m("x2*x3", 3)), Some(&m("x2*x3", 3)), Flavor::General).unwrap();
        assert_eq!(single.members.len(), 1);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(build(Some(&m("x2", 3)), Some(&m("x1", 3)), Flavor::General), Err(Error::Order(_))));
        assert!(matches!(build(Some(&m("x1^2", 3)), Some(&m("x3", 3)), Flavor::General), Err(Error::Parameter(_))));
        assert!(matches!(build(Some(&m("x1^2", 3)), None, Flavor::Squarefree), Err(Error::Flavor(_))));
        assert!(build(None, None, Flavor::General).is_err());
    }

    #[test]
    fn squarefree_shadow_not_lexsegment() {
        let set = [m("x1*x4*x5", 5), m("x2*x3*x4", 5)];
        let sh = shadow(&set, Flavor::Squarefree).unwrap();
        assert_eq!(strs(&sh), ["x1*x2*x3*x4", "x1*x2*x4*x5", "x1*x3*x4*x5", "x2*x3*x4*x5"]);
        assert!(!is_lexsegment(&sh, Flavor::Squarefree).unwrap());
        assert!(!is_completely(&m("x1*x4*x5", 5), &m("x2*x3*x4", 5), Flavor::Squarefree).unwrap());
        assert!(shadow(&[], Flavor::General).unwrap().is_empty());
    }

    #[test]
    fn contiguity() {
        assert!(!is_lexsegment(&[m("x1*x2", 4), m("x1*x4", 4)], Flavor::Squarefree).unwrap());
        assert!(is_lexsegment(&enumerate_degree(4, 2, false).unwrap(), Flavor::General).unwrap());
    }

    #[test]
    fn edge_completeness_rule() {
        // u = x1 x_i, v = x_j x_r complete iff j >= i - 2
        for n in 3..=7 {
            for i in 2..=n {
                for j in 2..n {
                    for r in j + 1..=n {
                        let u = VarSet::from_indices([1, i]);
                        let v = VarSet::from_indices([j, r]);
                        assert_eq!(sqf_is_completely(n, u, v).unwrap(), j + 2 >= i, "n={n} i={i} j={j} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn fast_paths_agree() {
        let n = 6;
        let class = enumerate_sqf(n, 3).unwrap();
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a..] {
                let slow = is_completely(&u.to_monomial(n), &v.to_monomial(n), Flavor::Squarefree).unwrap();
                assert_eq!(sqf_is_completely(n, u, v).unwrap(), slow);
            }
        }
    }
}
