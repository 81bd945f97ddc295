use alloc::format;
use alloc::vec::Vec;

use super::sv::SvCertificate;
use super::LexsegSpec;
use crate::error::{Error, Result};
use crate::monomial::VarSet;

/// Which clause of the degree-3 depth classification fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree3Case {
    A,
    B,
    C,
    D,
}

/// How to read the guard of clause (c).
///
/// `Literal` asks for `j_2 = 2`, which no `v` with `2 <= j_1 < j_2`
/// satisfies.  `Corrected` asks for `v = x_2 x_3 x_{j_3}` with
/// `j_3 <= i_2 - 1`, the hypothesis under which the value `i_2 - j_3 + 3`
/// is proved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Degree3Reading {
    Literal,
    #[default]
    Corrected,
}

/// Every guard evaluated independently, with the value each one predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degree3Guards {
    pub a: bool,
    pub b: bool,
    pub c_literal: bool,
    pub c_corrected: bool,
    /// `i_2 - j_3 + 3`, the value clause (c) predicts.
    pub c_value: usize,
}

impl Degree3Guards {
    fn firing(&self, reading: Degree3Reading) -> Vec<(Degree3Case, usize)> {
        let c = match reading {
            Degree3Reading::Literal => self.c_literal,
            Degree3Reading::Corrected => self.c_corrected,
        };
        // evaluation order (a), (c), (b)
        let mut out = Vec::new();
        if self.a {
            out.push((Degree3Case::A, 2));
        }
        if c {
            out.push((Degree3Case::C, self.c_value));
        }
        if self.b {
            out.push((Degree3Case::B, 4));
        }
        out
    }

    /// Clauses that fire together but predict different depths.
    pub fn conflict(&self, reading: Degree3Reading) -> Option<Vec<(Degree3Case, usize)>> {
        let f = self.firing(reading);
        f.iter().any(|&(_, d)| d != f[0].1).then_some(f)
    }
}

struct Shape3 {
    n: usize,
    i2: usize,
    i3: usize,
    j: [usize; 3],
}

fn shape(n: usize, u: VarSet, v: VarSet) -> Result<Shape3> {
    let spec = LexsegSpec::new(n, u, v)?;
    if spec.q() != 3 {
        return Err(Error::Domain(format!("{spec} is not generated in degree 3")));
    }
    if !u.contains(1) {
        return Err(Error::Domain(format!("x1 does not divide {u}")));
    }
    if v.contains(1) {
        return Err(Error::Domain(format!("x1 divides {v}")));
    }
    let (iu, jv) = (u.to_vec(), v.to_vec());
    Ok(Shape3 { n, i2: iu[1], i3: iu[2], j: [jv[0], jv[1], jv[2]] })
}

fn guards(s: &Shape3) -> Degree3Guards {
    let Shape3 { n, i2, i3, j } = *s;
    let v = VarSet::from_indices(j);
    let a = VarSet::from_indices([i2 - 1, i3 - 1, n]) >= v;
    let x2x3 = j[0] == 2 && j[1] == 3;
    let b = x2x3 && ((i2 == 4 && i3 >= 6 && j[2] + 1 < i3) || (i2 >= 5 && i2 - 1 <= j[2] && j[2] < n));
    let c_literal = i2 > 4 && j[1] == 2 && j[2] < i2;
    let c_corrected = x2x3 && j[2] < i2;
    Degree3Guards { a, b, c_literal, c_corrected, c_value: (i2 + 3).saturating_sub(j[2]) }
}

/// Guards of the classification for `u = x_1 x_{i_2} x_{i_3}`,
/// `v = x_{j_1} x_{j_2} x_{j_3}`, `j_1 >= 2`.
pub fn degree3_guards(n: usize, u: VarSet, v: VarSet) -> Result<Degree3Guards> {
    Ok(guards(&shape(n, u, v)?))
}

/// `depth(S/I)` and the clause that gave it, under the chosen reading of
/// clause (c).  Clauses that fire together with different values are an
/// error, not a tie to break.
pub fn depth_degree3_with(n: usize, u: VarSet, v: VarSet, reading: Degree3Reading) -> Result<(usize, Degree3Case)> {
    let g = degree3_guards(n, u, v)?;
    if let Some(f) = g.conflict(reading) {
        return Err(Error::Domain(format!("depth clauses disagree for u = {u}, v = {v}: {f:?}")));
    }
    Ok(g.firing(reading).first().map_or((3, Degree3Case::D), |&(c, d)| (d, c)))
}

pub fn depth_degree3(n: usize, u: VarSet, v: VarSet) -> Result<(usize, Degree3Case)> {
    depth_degree3_with(n, u, v, Degree3Reading::Corrected)
}

fn set<const K: usize>(ix: [usize; K]) -> VarSet {
    VarSet::from_indices(ix)
}

/// Tableau certificates for `v = x_2 x_3 x_{j_3}` in the depth-4 families
/// and the `j_3 <= i_2 - 1` family.
pub(crate) fn degree3_certificate(spec: &LexsegSpec) -> Result<SvCertificate> {
    let s = shape(spec.n, spec.u, spec.v)?;
    let Shape3 { n, i2: h, i3: i, j } = s;
    let j3 = j[2];
    if j[0] != 2 || j[1] != 3 {
        return Err(Error::Domain(format!("no tableau construction for {spec}: v is not x2*x3*x_j")));
    }
    // the monomial standing in for x_2 x_3 x_p once it leaves the segment
    let tail = |p: usize| if p <= j3 { set([2, 3, p]) } else { set([2, 3, 4, p]) };
    let mut out: Vec<(usize, VarSet)> = Vec::new();
    if h >= 5 && h - 1 <= j3 && j3 < n {
        for p in h..n {
            let from = if p == h { i } else { p + 1 };
            for k in from..=n {
                out.push((p - h + n - k + 1, set([1, p, k])));
            }
            out.push((p - h, tail(p)));
        }
        for m in 4..h {
            out.push((n - h + m - 4, set([2, 3, m])));
        }
    } else if j3 < h {
        for k in h + 1..=n {
            out.push((n - k, if k < i { set([1, h, k, n]) } else { set([1, h, k]) }));
        }
        for p in h + 1..n {
            for k in p + 1..=n {
                out.push((n - k + p - h, set([1, p, k])));
            }
        }
        for m in 4..=j3 {
            out.push((n - h + j3 - m, set([2, 3, m])));
        }
    } else if h == 4 && i >= 6 && j3 + 1 < i {
        // anti-diagonals of a tableau whose column i - 6 holds x_2 x_3 (x_4) x_p
        let key = |row: usize, col: usize| (n - 5 - col) + row;
        for p in 5..=i - 2 {
            let row = p - 5;
            for k in p + 1..i {
                out.push((key(row, k - 6), set([1, p, k])));
            }
            out.push((key(row, i - 6), tail(p)));
            for k in i..=n {
                out.push((key(row, k - 5), set([1, p, k])));
            }
        }
        out.push((key(i - 6, i - 6), set([2, 3, 4])));
        for k in i..=n {
            out.push((key(i - 6, k - 5), set([1, 4, k])));
        }
        for p in i - 1..n {
            for k in p + 1..=n {
                out.push((key(p - 4, k - 5), set([1, p, k])));
            }
        }
    } else {
        return Err(Error::Domain(format!("no tableau construction for {spec}")));
    }
    Ok(SvCertificate::from_keyed(n, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    #[test]
    fn clause_b_second_branch() {
        assert_eq!(depth_degree3(8, s(&[1, 5, 7]), s(&[2, 3, 6])).unwrap(), (4, Degree3Case::B));
    }

    #[test]
    fn clause_a() {
        // x4 x6 x8 >= x4 x7 x8
        assert_eq!(depth_degree3(8, s(&[1, 5, 7]), s(&[4, 7, 8])).unwrap(), (2, Degree3Case::A));
    }

    #[test]
    fn literal_clause_c_never_fires() {
        for n in 4..=9 {
            for u in crate::monomial::enumerate_sqf(n, 3).unwrap().into_iter().filter(|u| u.contains(1)) {
                for v in crate::monomial::enumerate_sqf(n, 3).unwrap().into_iter().filter(|v| !v.contains(1) && *v < u) {
                    assert!(!degree3_guards(n, u, v).unwrap().c_literal);
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_form() {
        assert!(depth_degree3(6, s(&[2, 3, 4]), s(&[4, 5, 6])).is_err());
        assert!(depth_degree3(6, s(&[1, 2]), s(&[4, 5])).is_err());
    }
}
