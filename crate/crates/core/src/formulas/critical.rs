use alloc::vec::Vec;

use super::{normalize, sqf_succ, LexsegSpec, Shape};
use crate::error::Result;
use crate::ideal::{has_linear_resolution, is_componentwise_linear, minimal_primes_squarefree, MonomialIdeal};
use crate::lexsegments::{sqf_final, sqf_initial};
use crate::monomial::{Monomial, VarSet};

fn gcd_all(gens: &[Monomial]) -> Option<Monomial> {
    let (first, rest) = gens.split_first()?;
    Some(rest.iter().fold(first.clone(), |g, m| g.gcd(m)))
}

fn critical_gens(gens: &[Monomial]) -> bool {
    if gens.len() < 2 || !gens.iter().all(Monomial::is_squarefree) {
        return false;
    }
    if gens.len() == 2 {
        return gens.iter().any(|g| g.degree() == 1);
    }
    // (x_j) + m' J: peel a variable generator, then the common factor m'
    gens.iter().enumerate().filter(|(_, g)| g.degree() == 1).any(|(k, _)| {
        let rest: Vec<Monomial> = gens.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, g)| g.clone()).collect();
        let m = gcd_all(&rest).expect("at least two generators left");
        let inner: Vec<Monomial> = rest.iter().map(|g| g.div(&m).expect("gcd divides")).collect();
        critical_gens(&inner)
    })
}

/// Built from `(x_i, m)` by repeatedly forming `(x_j) + m' J`.  A critical
/// ideal holds a variable, so its generators have no common factor and the
/// `m'` of each step is forced to be the gcd of what remains.
pub fn is_critical(i: &MonomialIdeal) -> bool {
    critical_gens(i.gens())
}

/// `w J` with `J` critical.
pub fn is_canonical_critical(i: &MonomialIdeal) -> bool {
    let Some(w) = gcd_all(i.gens()) else {
        return false;
    };
    let inner: Vec<Monomial> = i.gens().iter().map(|g| g.div(&w).expect("gcd divides")).collect();
    critical_gens(&inner)
}

/// Sequential Cohen–Macaulayness from the closed criterion.  Initial and
/// final segments always are; a completely segment is iff the degree
/// `n - q` part of `I^∨`, a sum of an initial and a final segment, has a
/// linear resolution, which is read off their intersection.
pub fn is_seq_cm(spec: &LexsegSpec, p: u64) -> Result<bool> {
    let norm = normalize(*spec)?;
    if norm.shape != Shape::Completely {
        return Ok(true);
    }
    let s = &norm.spec;
    let (n, q) = (s.n, s.q());
    let a = s.a_sets();
    let j = s.j();
    let si = a.iter().take_while(|at| at.len() <= n - q).count().max(1);
    let w = a[si - 1].union(VarSet::range(q + j[si - 1] - si + 2, n));
    let fc1 = s.f_set().complement(n).without(1);
    let Some(m) = sqf_succ(n, fc1)? else {
        return Ok(true);
    };
    let jj = MonomialIdeal::from_sets(n, sqf_initial(n, w)?)?;
    let kk = MonomialIdeal::from_sets(n, sqf_final(n, m)?)?;
    let meet = jj.intersect(&kk)?;
    let d = (n - q + 1) as u32;
    Ok(meet.gens().iter().all(|g| g.degree() == d) && has_linear_resolution(&meet, p)?)
}

/// `I` is sequentially Cohen–Macaulay iff `I^∨` is componentwise linear;
/// `I^∨` is generated by `x_P` over the minimal primes `P` of `I`.
pub fn seq_cm_dual_oracle(spec: &LexsegSpec, p: u64) -> Result<bool> {
    let dual = MonomialIdeal::from_sets(spec.n, minimal_primes_squarefree(&spec.ideal()?)?)?;
    is_componentwise_linear(&dual, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::has_linear_quotients;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    #[test]
    fn base_case() {
        assert!(is_critical(&ideal(4, &["x1", "x2*x3*x4"])));
        assert!(!is_critical(&ideal(4, &["x1*x2", "x3*x4"])));
        assert!(!is_critical(&ideal(4, &["x1"])));
    }

    #[test]
    fn initial_dual_component_is_canonical_critical() {
        // A_t for v = x2 x4 x5 in 6 variables
        let j = ideal(6, &["x1*x2", "x1*x3*x4", "x1*x3*x5"]);
        assert!(is_canonical_critical(&j));
        assert!(!is_critical(&j));
        assert!(has_linear_quotients(&j, 10).is_yes());
    }

    #[test]
    fn recursive_case() {
        // (x5) + x4 (x1 + x2 x3)
        let i = ideal(5, &["x5", "x1*x4", "x2*x3*x4"]);
        assert!(is_critical(&i));
        // no variable generator to peel
        assert!(!is_critical(&ideal(4, &["x1*x2", "x2*x3", "x3*x4"])));
    }
}
