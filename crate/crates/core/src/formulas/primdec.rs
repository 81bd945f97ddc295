use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{normalize, shift_up, subsets_of_size, LexsegSpec, Normalized, Shape, Step};
use crate::error::{Error, Result};
use crate::ideal::{sort_primes, PrimaryComponent};
use crate::monomial::{binomial, VarSet};

fn finish(mut p: Vec<VarSet>) -> Vec<VarSet> {
    sort_primes(&mut p);
    p.dedup();
    p
}

fn as_components(p: Vec<VarSet>) -> Vec<PrimaryComponent> {
    p.into_iter().map(PrimaryComponent::Prime).collect()
}

fn require_x1_in_u(spec: &LexsegSpec) -> Result<()> {
    if !spec.u.contains(1) {
        return Err(Error::Domain(format!("x1 does not divide {}", spec.u)));
    }
    Ok(())
}

fn require_j1(spec: &LexsegSpec) -> Result<()> {
    if spec.v.contains(1) {
        return Err(Error::Domain(format!("j_1 = 1 in {}: factor x1 out first", spec.v)));
    }
    Ok(())
}

/// `G` with `|G| = q - 1` meeting every `A_t`.
fn transversal_faces(spec: &LexsegSpec, a: &[VarSet]) -> Result<Vec<VarSet>> {
    Ok(subsets_of_size(spec.n, spec.q() - 1)?
        .into_iter()
        .filter(|g| a.iter().all(|at| !g.is_disjoint(*at)))
        .collect())
}

fn initial_primes(spec: &LexsegSpec) -> Result<Vec<VarSet>> {
    let a = spec.a_sets();
    let mut out = a.clone();
    out.extend(transversal_faces(spec, &a)?.into_iter().map(|g| g.complement(spec.n)));
    Ok(finish(out))
}

/// The height `n - q` primes `P_G`, `x_{F^c \ 1} >lex x_G`.
fn final_low_primes(spec: &LexsegSpec) -> Result<Vec<VarSet>> {
    let fc1 = spec.f_set().complement(spec.n).without(1);
    Ok(subsets_of_size(spec.n, spec.n - spec.q())?.into_iter().filter(|g| fc1 > *g).collect())
}

/// `P_G`, `G` in `[n] \ {1}`, `|G| = n - q + 1`, `x_{G \ min G} >= x_{F^c \ 1}`.
fn final_shifted_primes(spec: &LexsegSpec) -> Result<Vec<VarSet>> {
    let fc1 = spec.f_set().complement(spec.n).without(1);
    Ok(subsets_of_size(spec.n, spec.n - spec.q() + 1)?
        .into_iter()
        .filter(|&g| !g.contains(1) && g.without(g.min().expect("nonempty")) >= fc1)
        .collect())
}

fn final_primes(spec: &LexsegSpec) -> Result<Vec<VarSet>> {
    let fc = spec.f_set().complement(spec.n);
    let mut out: Vec<VarSet> =
        subsets_of_size(spec.n, spec.n - spec.q() + 1)?.into_iter().filter(|g| *g >= fc).collect();
    out.extend(final_shifted_primes(spec)?);
    out.extend(final_low_primes(spec)?);
    Ok(finish(out))
}

fn completely_primes(spec: &LexsegSpec) -> Result<Vec<VarSet>> {
    let (n, q) = (spec.n, spec.q());
    let a = spec.a_sets();
    let j = spec.j();
    let u1 = spec.f_set();
    let x2 = spec.u.contains(2);
    let mut out: Vec<VarSet> = a.iter().copied().filter(|at| at.len() <= n - q).collect();
    for (t, at) in a.iter().enumerate() {
        if at.len() == n - q + 1 && u1 >= spec.v.without(j[t]) {
            out.push(*at);
        }
    }
    for g in transversal_faces(spec, &a)? {
        // without x2 | u a face holding 1 is never below u/x1
        if (!x2 || !g.contains(1)) && u1 >= g {
            out.push(g.complement(n));
        }
    }
    if x2 {
        out.extend(final_shifted_primes(spec)?);
    }
    out.extend(final_low_primes(spec)?);
    Ok(finish(out))
}

/// Minimal primes of an initial squarefree lexsegment ideal with `j_1 >= 2`.
pub fn primdec_initial(spec: &LexsegSpec) -> Result<Vec<PrimaryComponent>> {
    if !spec.is_initial() {
        return Err(Error::Domain(format!("{spec} is not an initial segment")));
    }
    require_j1(spec)?;
    Ok(as_components(initial_primes(spec)?))
}

/// Minimal primes of a final squarefree lexsegment ideal `L^f(x_1 x_F)`.
pub fn primdec_final(spec: &LexsegSpec) -> Result<Vec<PrimaryComponent>> {
    if !spec.is_final() {
        return Err(Error::Domain(format!("{spec} is not a final segment")));
    }
    require_x1_in_u(spec)?;
    if spec.is_full() {
        return Err(Error::Degenerate(format!("{spec} is I_{{n,q}}")));
    }
    Ok(as_components(final_primes(spec)?))
}

/// Minimal primes of a completely squarefree lexsegment ideal that is
/// neither initial nor final.
pub fn primdec_completely(spec: &LexsegSpec) -> Result<Vec<PrimaryComponent>> {
    require_x1_in_u(spec)?;
    require_j1(spec)?;
    if spec.is_initial() || spec.is_final() {
        return Err(Error::Domain(format!("{spec} is initial or final")));
    }
    if !spec.is_completely()? {
        return Err(Error::Domain(format!("{spec} is not a completely lexsegment")));
    }
    Ok(as_components(completely_primes(spec)?))
}

/// Minimal primes by the closed forms, with the reductions that were needed
/// to reach one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaDecomposition {
    pub primes: Vec<VarSet>,
    pub notes: Vec<String>,
}

fn base_primes(norm: &Normalized) -> Result<Vec<VarSet>> {
    let s = &norm.spec;
    match norm.shape {
        Shape::Interval(p) => Ok(alloc::vec![p]),
        Shape::Full => Ok(subsets_of_size(s.n, s.n - s.q() + 1)?),
        Shape::Initial => initial_primes(s),
        Shape::Final => final_primes(s),
        Shape::Completely => completely_primes(s),
    }
}

/// Any completely squarefree lexsegment, initial and final included.
pub fn primdec_formula(spec: &LexsegSpec) -> Result<FormulaDecomposition> {
    let norm = normalize(*spec)?;
    let mut primes = base_primes(&norm)?;
    for step in norm.steps.iter().rev() {
        match *step {
            Step::Regular(k) => primes = primes.into_iter().map(|p| shift_up(p, k)).collect(),
            Step::FactorX1 => {
                primes = primes.into_iter().map(|p| shift_up(p, 1)).collect();
                primes.push(VarSet::singleton(1));
            }
        }
    }
    Ok(FormulaDecomposition { primes: finish(primes), notes: norm.notes() })
}

/// Closed-form invariants of `S/I`.  `depth` is `None` where no closed form
/// is known (completely segments of degree `>= 4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaInvariants {
    pub dim: usize,
    pub depth: Option<usize>,
    pub multiplicity: u128,
    pub pure: bool,
    pub cm: Option<bool>,
    pub notes: Vec<String>,
}

struct Inv {
    dim: usize,
    depth: Option<usize>,
    e: u128,
    pure: bool,
}

fn base_invariants(norm: &Normalized) -> Result<Inv> {
    let s = &norm.spec;
    let (n, q) = (s.n, s.q());
    let primes = base_primes(norm)?;
    let pure = primes.windows(2).all(|w| w[0].len() == w[1].len());
    let t = || -> Result<u128> { Ok(final_low_primes(s)?.len() as u128) };
    let j1 = s.v.min().expect("nonempty");
    Ok(match norm.shape {
        Shape::Interval(p) => Inv { dim: n - p.len(), depth: Some(n - p.len()), e: 1, pure },
        Shape::Full => Inv {
            dim: q - 1,
            depth: Some(q - 1),
            e: binomial(n as u64, q as u64 - 1).ok_or(Error::Overflow("multiplicity"))?,
            pure,
        },
        Shape::Initial => Inv { dim: n - j1, depth: Some(q - 1), e: s.s_index() as u128 - 1, pure },
        Shape::Final => Inv { dim: q, depth: Some(q - 1), e: t()?, pure },
        Shape::Completely => {
            let e = s.s_index() as u128 - 1 + if j1 < n - q { 0 } else { t()? };
            let depth = match q {
                2 => Some(super::edge_invariants(n, s.u, s.v)?.depth),
                3 => Some(super::depth_degree3(n, s.u, s.v)?.0),
                _ => None,
            };
            Inv { dim: n - j1, depth, e, pure }
        }
    })
}

/// Dimension, depth, multiplicity and purity of `S/I` from the closed forms.
pub fn invariants_formula(spec: &LexsegSpec) -> Result<FormulaInvariants> {
    let norm = normalize(*spec)?;
    let mut inv = base_invariants(&norm)?;
    let mut n = norm.spec.n;
    for step in norm.steps.iter().rev() {
        match *step {
            Step::Regular(k) => {
                n += k;
                inv.dim += k;
                inv.depth = inv.depth.map(|d| d + k);
            }
            Step::FactorX1 => {
                n += 1;
                // facets of the top dimension n - 1: the one from (x1), plus
                // those of J when J has height one
                let j_height_one = inv.dim + 2 == n;
                inv.e = 1 + if j_height_one { inv.e } else { 0 };
                inv.pure = inv.pure && j_height_one;
                inv.dim = n - 1;
                inv.depth = inv.depth.map(|d| d + 1);
            }
        }
    }
    let cm = if inv.pure { inv.depth.map(|d| d == inv.dim) } else { Some(false) };
    Ok(FormulaInvariants { dim: inv.dim, depth: inv.depth, multiplicity: inv.e, pure: inv.pure, cm, notes: norm.notes() })
}
