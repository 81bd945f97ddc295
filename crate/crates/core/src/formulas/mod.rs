//! Closed forms for squarefree lexsegment ideals, each paired with an oracle
//! in [`crate::ideal`] or [`crate::simplicial`] that the test suite compares
//! it against.
//!
//! Everything here works on [`VarSet`]s: a squarefree monomial `x_F` is the
//! set `F`, and its lex order is the `VarSet` order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lexsegments::{sqf_is_completely, sqf_segment};
use crate::monomial::{check_n, enumerate_sqf, VarSet};

mod bounds;
mod critical;
mod degree3;
mod depth;
mod edge;
mod primdec;
mod sv;

pub use bounds::{
    conjecture_instance, conjecture_monomial, conjecture_specs, conjecture_sweep, depth_bounds, ConjectureReport,
    ConjectureRow, DepthBounds,
};
pub use critical::{is_canonical_critical, is_critical, is_seq_cm, seq_cm_dual_oracle};
pub use degree3::{degree3_guards, depth_degree3, depth_degree3_with, Degree3Case, Degree3Guards, Degree3Reading};
pub use depth::{depth_formula, DepthSource};
pub use edge::{edge_invariants, EdgeInvariants};
pub use primdec::{
    invariants_formula, primdec_completely, primdec_final, primdec_formula, primdec_initial, FormulaDecomposition,
    FormulaInvariants,
};
pub use sv::{sv_construct, sv_verify, SvCertificate, SvViolation};

/// Largest subset family the formulas will enumerate.
pub const ENUM_CAP: u128 = 1 << 22;

/// A squarefree lexsegment `L(u, v)` of degree `q` in `n` variables.
///
/// Initial and final segments are the cases `u = x_1..x_q` and
/// `v = x_{n-q+1}..x_n`; both ends are always stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LexsegSpec {
    pub n: usize,
    pub u: VarSet,
    pub v: VarSet,
}

impl LexsegSpec {
    pub fn new(n: usize, u: VarSet, v: VarSet) -> Result<LexsegSpec> {
        check_n(n)?;
        let full = VarSet::full(n);
        for w in [u, v] {
            if !w.is_subset(full) {
                return Err(Error::Parameter(format!("{w} uses a variable beyond x{n}")));
            }
        }
        if u.is_empty() || u.len() != v.len() {
            return Err(Error::Parameter(format!("ends {u} and {v} must have the same positive degree")));
        }
        if u < v {
            return Err(Error::Order(format!("{u} <lex {v}")));
        }
        Ok(LexsegSpec { n, u, v })
    }
    pub fn initial(n: usize, v: VarSet) -> Result<LexsegSpec> {
        LexsegSpec::new(n, top(v.len()), v)
    }
    pub fn final_segment(n: usize, u: VarSet) -> Result<LexsegSpec> {
        LexsegSpec::new(n, u, bottom(n, u.len()))
    }
    pub fn q(&self) -> usize {
        self.u.len()
    }
    pub fn is_initial(&self) -> bool {
        self.u == top(self.q())
    }
    pub fn is_final(&self) -> bool {
        self.v == bottom(self.n, self.q())
    }
    /// `I_{n,q}`, all squarefree monomials of degree `q`.
    pub fn is_full(&self) -> bool {
        self.is_initial() && self.is_final()
    }
    /// `j_1 < .. < j_q`, the support of `v`.
    pub fn j(&self) -> Vec<usize> {
        self.v.to_vec()
    }
    /// `A_t = [j_t] \ {j_1, .., j_{t-1}}`.
    pub fn a_sets(&self) -> Vec<VarSet> {
        let mut before = VarSet::EMPTY;
        self.v
            .iter()
            .map(|jt| {
                let a = VarSet::range(1, jt).minus(before);
                before = before.with(jt);
                a
            })
            .collect()
    }
    /// `F = supp(u) \ {1}`.
    pub fn f_set(&self) -> VarSet {
        self.u.without(1)
    }
    /// Smallest `s` with `j_s >= j_1 + s`; `q + 1` when `v` is a run of
    /// consecutive variables.
    pub fn s_index(&self) -> usize {
        let j = self.j();
        (1..=j.len()).find(|&s| j[s - 1] >= j[0] + s).unwrap_or(j.len() + 1)
    }
    pub fn segment(&self) -> Result<Vec<VarSet>> {
        sqf_segment(self.n, self.u, self.v)
    }
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_sets(self.n, self.segment()?)
    }
    pub fn is_completely(&self) -> Result<bool> {
        sqf_is_completely(self.n, self.u, self.v)
    }
}

impl fmt::Display for LexsegSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {}) in {} variables", self.u, self.v, self.n)
    }
}

/// `x_1 .. x_q`.
pub fn top(q: usize) -> VarSet {
    VarSet::range(1, q)
}

/// `x_{n-q+1} .. x_n`.
pub fn bottom(n: usize, q: usize) -> VarSet {
    VarSet::range(n + 1 - q, n)
}

/// All `k`-subsets of `[n]`, refusing families above [`ENUM_CAP`].
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Result<Vec<VarSet>> {
    if k > n {
        return Ok(Vec::new());
    }
    let count = crate::monomial::binomial(n as u64, k as u64).unwrap_or(u128::MAX);
    if count > ENUM_CAP {
        return Err(Error::Scale(format!("{count} subsets of size {k} in {n} variables")));
    }
    enumerate_sqf(n, k as u32)
}

/// Next smaller squarefree monomial of the same degree, if any.
pub(crate) fn sqf_succ(n: usize, w: VarSet) -> Result<Option<VarSet>> {
    let class = enumerate_sqf(n, w.len() as u32)?;
    let k = class.binary_search_by(|c| w.cmp(c)).map_err(|_| Error::Parameter(format!("{w} not in [{n}]")))?;
    Ok(class.get(k + 1).copied())
}

/// Next larger squarefree monomial of the same degree, if any.
pub(crate) fn sqf_pred(n: usize, w: VarSet) -> Result<Option<VarSet>> {
    let class = enumerate_sqf(n, w.len() as u32)?;
    let k = class.binary_search_by(|c| w.cmp(c)).map_err(|_| Error::Parameter(format!("{w} not in [{n}]")))?;
    Ok(k.checked_sub(1).map(|k| class[k]))
}

pub(crate) fn shift_down(w: VarSet, k: usize) -> VarSet {
    VarSet(w.0 >> k)
}

pub(crate) fn shift_up(w: VarSet, k: usize) -> VarSet {
    VarSet(w.0 << k)
}

/// One step of the normalization applied before a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    /// `x_1 .. x_k` divide no generator and are regular on `S/I`.
    Regular(usize),
    /// `x_1` divides every generator: `I = (x_1) ∩ J`.
    FactorX1,
}

/// The class a normalized spec falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    /// Degree one: the prime on the variable interval.
    Interval(VarSet),
    Full,
    Initial,
    Final,
    Completely,
}

pub(crate) struct Normalized {
    pub steps: Vec<Step>,
    pub spec: LexsegSpec,
    pub shape: Shape,
}

impl Normalized {
    pub fn notes(&self) -> Vec<String> {
        let mut n = self.outer_n();
        let mut out = Vec::new();
        for s in &self.steps {
            match *s {
                Step::Regular(k) => {
                    out.push(if k == 1 {
                        format!("x1 is regular on S/I; continuing in {} variables", n - 1)
                    } else {
                        format!("x1..x{k} are regular on S/I; continuing in {} variables", n - k)
                    });
                    n -= k;
                }
                Step::FactorX1 => {
                    out.push(format!("x1 divides every generator: I = (x1) ∩ J with J in {} variables", n - 1));
                    n -= 1;
                }
            }
        }
        out
    }
    fn outer_n(&self) -> usize {
        self.spec.n
            + self
                .steps
                .iter()
                .map(|s| match *s {
                    Step::Regular(k) => k,
                    Step::FactorX1 => 1,
                })
                .sum::<usize>()
    }
}

/// Apply the regular-variable and `x_1`-factor reductions until a closed form
/// applies.
pub(crate) fn normalize(spec: LexsegSpec) -> Result<Normalized> {
    let mut steps = Vec::new();
    let mut s = spec;
    loop {
        if s.q() == 1 {
            let a = s.u.min().expect("nonempty");
            let b = s.v.min().expect("nonempty");
            return Ok(Normalized { steps, spec: s, shape: Shape::Interval(VarSet::range(a, b)) });
        }
        let k = s.u.min().expect("nonempty") - 1;
        if k > 0 {
            steps.push(Step::Regular(k));
            s = LexsegSpec::new(s.n - k, shift_down(s.u, k), shift_down(s.v, k))?;
            continue;
        }
        if s.v.contains(1) {
            steps.push(Step::FactorX1);
            s = LexsegSpec::new(s.n - 1, shift_down(s.u.without(1), 1), shift_down(s.v.without(1), 1))?;
            continue;
        }
        let shape = if s.is_full() {
            Shape::Full
        } else if s.is_initial() {
            Shape::Initial
        } else if s.is_final() {
            Shape::Final
        } else if s.is_completely()? {
            Shape::Completely
        } else {
            return Err(Error::Domain(format!("{spec} is not a completely lexsegment")));
        };
        return Ok(Normalized { steps, spec: s, shape });
    }
}
