use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{sqf_pred, sqf_succ, LexsegSpec};
use crate::error::{Error, Result};
use crate::ideal::{betti, has_linear_resolution, MonomialIdeal};
use crate::lexsegments::sqf_segment;
use crate::monomial::{enumerate_sqf, VarSet};

/// `q - 1 <= depth(S/I) <= n - 2`, and whether the lower bound is attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact_lower_attained: bool,
}

/// Bounds for `x_1 | u`, `x_1 ∤ v`, `u != v`.  The depth exceeds `q - 1`
/// iff `a = succ(v)/x_max >= b = pred(u)/x_1` and `(L(a, b))` has a linear
/// resolution.
pub fn depth_bounds(spec: &LexsegSpec, p: u64) -> Result<DepthBounds> {
    let (n, q) = (spec.n, spec.q());
    if q < 2 || !spec.u.contains(1) || spec.v.contains(1) || spec.u == spec.v {
        return Err(Error::Domain(format!("{spec} needs degree >= 2, x1 | u, x1 ∤ v and u != v")));
    }
    let succ = sqf_succ(n, spec.v)?.ok_or_else(|| Error::Degenerate(format!("{} is the last monomial", spec.v)))?;
    let pred = sqf_pred(n, spec.u)?.ok_or_else(|| Error::Degenerate(format!("{} is the first monomial", spec.u)))?;
    let a = succ.without(succ.max().expect("nonempty"));
    let b = pred.without(1);
    let exceeds = a >= b && has_linear_resolution(&MonomialIdeal::from_sets(n, sqf_segment(n, a, b)?)?, p)?;
    Ok(DepthBounds { lower: q - 1, upper: n - 2, exact_lower_attained: !exceeds })
}

/// `x_{i_2 - 1} .. x_{i_q - 1} x_n` for `u = x_1 x_{i_2} .. x_{i_q}`.
pub fn conjecture_monomial(n: usize, u: VarSet) -> VarSet {
    VarSet::from_indices(u.iter().skip(1).map(|i| i - 1)).with(n)
}

/// One instance of the depth `q - 1` conjecture with its oracle values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: usize,
    pub u: VarSet,
    pub v: VarSet,
    pub depth: usize,
    /// `reg(I)`.
    pub reg: i64,
    /// `x_{i_2 - 1} .. x_{i_q - 1} x_n >= v`.
    pub predicts_lowest: bool,
    pub agrees: bool,
}

pub fn conjecture_instance(spec: &LexsegSpec, p: u64) -> Result<ConjectureRow> {
    if !spec.u.contains(1) || spec.v.contains(1) {
        return Err(Error::Domain(format!("{spec} needs x1 | u and x1 ∤ v")));
    }
    let table = betti(&spec.ideal()?, p)?;
    let depth = spec.n - table.projdim_quotient();
    let predicts_lowest = conjecture_monomial(spec.n, spec.u) >= spec.v;
    Ok(ConjectureRow {
        n: spec.n,
        u: spec.u,
        v: spec.v,
        depth,
        reg: table.reg().expect("nonzero ideal"),
        predicts_lowest,
        agrees: predicts_lowest == (depth + 1 == spec.q()),
    })
}

/// Agreement counts, counterexamples and attained value sets; a report,
/// never an assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub q: usize,
    pub instances: usize,
    pub agreements: usize,
    pub counterexamples: Vec<ConjectureRow>,
    pub depths: BTreeSet<usize>,
    pub regs: BTreeSet<i64>,
    /// Every observed `reg(I)` lies in `[q, 2q - 1]`.
    pub reg_in_range: bool,
}

impl ConjectureReport {
    pub fn from_rows(q: usize, rows: impl IntoIterator<Item = ConjectureRow>) -> ConjectureReport {
        let mut r = ConjectureReport {
            q,
            instances: 0,
            agreements: 0,
            counterexamples: Vec::new(),
            depths: BTreeSet::new(),
            regs: BTreeSet::new(),
            reg_in_range: true,
        };
        for row in rows {
            r.instances += 1;
            r.depths.insert(row.depth);
            r.regs.insert(row.reg);
            r.reg_in_range &= (q as i64..=2 * q as i64 - 1).contains(&row.reg);
            if row.agrees {
                r.agreements += 1;
            } else {
                r.counterexamples.push(row);
            }
        }
        r
    }
}

/// Every `(u, v)` of degree `q` with `x_1 | u`, `x_1 ∤ v` in `n` variables.
pub fn conjecture_specs(n: usize, q: usize) -> Result<Vec<LexsegSpec>> {
    let class = enumerate_sqf(n, q as u32)?;
    let mut out = Vec::new();
    for &u in class.iter().filter(|u| u.contains(1)) {
        for &v in class.iter().filter(|v| !v.contains(1)) {
            out.push(LexsegSpec::new(n, u, v)?);
        }
    }
    Ok(out)
}

/// Sequential sweep over `q + 1 <= n <= n_max`.
pub fn conjecture_sweep(n_max: usize, q: usize, p: u64) -> Result<ConjectureReport> {
    let mut rows = Vec::new();
    for n in q + 1..=n_max {
        for spec in conjecture_specs(n, q)? {
            rows.push(conjecture_instance(&spec, p)?);
        }
    }
    Ok(ConjectureReport::from_rows(q, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_of_the_conjecture() {
        let u = VarSet::from_indices([1, 4, 6, 7]);
        assert_eq!(conjecture_monomial(9, u), VarSet::from_indices([3, 5, 6, 9]));
    }

    #[test]
    fn degree_two_and_three_agree_with_the_closed_depths() {
        for q in 2..=3 {
            let r = conjecture_sweep(6, q, 0).unwrap();
            assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples.first());
            assert!(r.reg_in_range);
        }
    }

    #[test]
    fn degenerate_ends() {
        let spec = LexsegSpec::new(5, VarSet::from_indices([1, 2]), VarSet::from_indices([4, 5])).unwrap();
        assert!(matches!(depth_bounds(&spec, 0), Err(Error::Degenerate(_))));
    }
}
