use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::sv::SvCertificate;
use super::{shift_down, LexsegSpec};
use crate::error::{Error, Result};
use crate::monomial::VarSet;

/// Invariants of `S/I` for `I = (L(u, v))` generated in degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeInvariants {
    pub dim: usize,
    pub depth: usize,
    /// `reg(I)`.
    pub reg: usize,
    pub projdim: usize,
    pub ara: usize,
    /// Witnesses `ara <= projdim`; its length is `ara`.
    pub sv: SvCertificate,
    /// `ara(I^∨) = projdim(S/I^∨) = reg(I)`.
    pub dual_ara: usize,
    pub notes: Vec<String>,
}

fn set(ix: &[usize]) -> VarSet {
    VarSet::from_indices(ix.iter().copied())
}

struct Ends {
    n: usize,
    i: usize,
    j: usize,
    r: usize,
}

fn ends(spec: &LexsegSpec) -> Result<Ends> {
    if spec.q() != 2 {
        return Err(Error::Domain(format!("{spec} is not generated in degree 2")));
    }
    if !spec.u.contains(1) {
        return Err(Error::Domain(format!("x1 does not divide {}", spec.u)));
    }
    let v = spec.j();
    Ok(Ends { n: spec.n, i: spec.u.max().expect("degree 2"), j: v[0], r: v[1] })
}

/// `x_{i-1} x_n >= v`: the 1-skeleton splits into `[i-1]` and `{i..n}`.
fn depth_one(e: &Ends) -> bool {
    set(&[e.i - 1, e.n]) >= set(&[e.j, e.r])
}

fn depth_of(e: &Ends) -> usize {
    if e.j == 1 {
        e.n - (e.r - e.i + 1)
    } else if depth_one(e) {
        1
    } else if e.j >= 3 || e.r >= e.i {
        2
    } else {
        e.i + 1 - e.r
    }
}

/// Generators of `I` as a tableau with `(key, x_a x_b)` entries; `A_{key+1}`
/// collects one key.
pub(crate) fn edge_certificate(spec: &LexsegSpec) -> Result<SvCertificate> {
    let e = ends(spec)?;
    let Ends { n, i, j, r } = e;
    let gens = spec.segment()?;
    let mut out: Vec<(usize, VarSet)> = Vec::new();
    if j == 1 || (j == 2 && !depth_one(&e) && i > r) {
        // minimal Taylor resolution: one generator per set
        out.extend(gens.into_iter().enumerate());
    } else if depth_one(&e) {
        // diagonals of constant b - a; x_a x_e is an earlier witness
        for g in gens {
            let (a, b) = (g.min().expect("degree 2"), g.max().expect("degree 2"));
            out.push((n - 1 - (b - a), g));
        }
    } else if j >= 3 && j == i - 1 {
        // rows x_2..x_{i-2} with x_p x_n moved between x_{i-1} and x_i, then
        // the x_1 row, then x_{i-1} x_i .. v; key counts anti-diagonals
        let key = |row: usize, col: usize| (n - 3 - col) + row;
        for p in 2..=i - 2 {
            let row = p - 2;
            for k in p + 1..=i - 1 {
                out.push((key(row, k - 3), set(&[p, k])));
            }
            out.push((key(row, i - 3), set(&[p, n])));
            for k in i..n {
                out.push((key(row, k - 2), set(&[p, k])));
            }
        }
        out.push((key(i - 3, i - 3), set(&[1, n])));
        for k in i..n {
            out.push((key(i - 3, k - 2), set(&[1, k])));
        }
        for k in i..=r {
            out.push((key(i - 2, k - 2), set(&[i - 1, k])));
        }
    } else if j >= 3 {
        // rows x_2..x_{j-1} in lex order; row x_j padded past v by x_1 x_j x_k,
        // times x_n while x_1 x_k is still above u
        for p in 2..j {
            for k in p + 1..=n {
                out.push((n - k + p - 2, set(&[p, k])));
            }
        }
        for k in j + 1..=n {
            let w = if k <= r {
                set(&[j, k])
            } else if k >= i {
                set(&[1, j, k])
            } else {
                set(&[1, j, k, n])
            };
            out.push((n - k + j - 2, w));
        }
        for k in i..=n {
            out.push((n - k + j - 1, set(&[1, k])));
        }
    } else if i > 3 {
        for k in i..=n {
            out.push((n - k + 1, set(&[1, k])));
        }
        for k in 3..=n {
            let w = if k <= r { set(&[2, k]) } else { set(&[1, 2, k]) };
            out.push((n - k, w));
        }
    } else {
        for k in 3..=n {
            out.push((k - 3, set(&[1, k])));
        }
        for k in 3..n {
            let w = if k <= r { set(&[2, k]) } else { set(&[1, 2, k]) };
            out.push((k - 2, w));
        }
    }
    Ok(SvCertificate::from_keyed(n, out))
}

/// Closed forms for `u = x_1 x_i`, `v = x_j x_r`.  Variables before the
/// first one of `u` are regular and are shifted out with a note.
pub fn edge_invariants(n: usize, u: VarSet, v: VarSet) -> Result<EdgeInvariants> {
    let spec = LexsegSpec::new(n, u, v)?;
    if spec.q() != 2 {
        return Err(Error::Domain(format!("{spec} is not generated in degree 2")));
    }
    let k = u.min().expect("degree 2") - 1;
    let reduced = LexsegSpec::new(n - k, shift_down(u, k), shift_down(v, k))?;
    let e = ends(&reduced)?;
    let mut notes = Vec::new();
    if k > 0 {
        notes.push(format!("x1..x{k} are regular on S/I; continuing in {} variables", n - k));
    }
    let depth = depth_of(&e) + k;
    let projdim = n - depth;
    let (dim, reg) = if e.j == 1 {
        notes.push(format!("I = x1 (x{} .. x{})", e.i + k, e.r + k));
        (n - 1, 2)
    } else {
        let dim = if reduced.is_final() && !reduced.is_initial() { 2 } else { e.n - e.j };
        let reg = if e.i >= e.j + 2 && e.r != e.n { 3 } else { 2 };
        (dim + k, reg)
    };
    let sv = edge_certificate(&reduced)?.lifted(n, k);
    Ok(EdgeInvariants { dim, depth, reg, projdim, ara: sv.len(), sv, dual_ara: reg, notes })
}
