use alloc::format;

use super::{depth_degree3, edge_invariants, invariants_formula, shift_down, LexsegSpec};
use crate::error::{Error, Result};

/// Which closed form produced a depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DepthSource {
    Decomposition,
    Edge,
    Degree3,
}

impl DepthSource {
    pub fn name(self) -> &'static str {
        match self {
            DepthSource::Decomposition => "decomposition",
            DepthSource::Edge => "edge",
            DepthSource::Degree3 => "degree3",
        }
    }
}

/// `depth(S/I)` from whichever closed form applies.  Leading variables that
/// divide no generator add one each; a common factor `x_1` is split off and
/// adds one, since `x_1 J` and `J` have the same projective dimension.
pub fn depth_formula(spec: &LexsegSpec) -> Result<(usize, DepthSource)> {
    if let Ok(inv) = invariants_formula(spec) {
        if let Some(d) = inv.depth {
            return Ok((d, DepthSource::Decomposition));
        }
    }
    let (n, u, v) = (spec.n, spec.u, spec.v);
    let k = u.min().expect("nonempty ends") - 1;
    if k > 0 {
        let inner = LexsegSpec::new(n - k, shift_down(u, k), shift_down(v, k))?;
        return depth_formula(&inner).map(|(d, s)| (d + k, s));
    }
    if v.contains(1) && spec.q() > 1 {
        let inner = LexsegSpec::new(n - 1, shift_down(u.without(1), 1), shift_down(v.without(1), 1))?;
        return depth_formula(&inner).map(|(d, s)| (d + 1, s));
    }
    match spec.q() {
        2 => Ok((edge_invariants(n, u, v)?.depth, DepthSource::Edge)),
        3 => Ok((depth_degree3(n, u, v)?.0, DepthSource::Degree3)),
        q => Err(Error::Domain(format!("no closed depth for {spec} in degree {q}"))),
    }
}
