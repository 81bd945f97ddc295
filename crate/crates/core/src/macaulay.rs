//! `d`-binomial representations and the Macaulay operators.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::binomial;

/// `a = sum C(a_k, k)` over `terms`, with `k` running down from `d` and
/// `a_d > a_{d-1} > .. > a_j >= j >= 1`.  Zero has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRep {
    pub d: u32,
    pub terms: Vec<(u64, u32)>,
}

impl BinomialRep {
    pub fn value(&self) -> Result<u128> {
        sum_terms(&self.terms, |a, k| binomial(a, k as u64))
    }

    /// Lower index of the last term (`j`); `None` for zero.
    pub fn last_index(&self) -> Option<u32> {
        self.terms.last().map(|&(_, k)| k)
    }
}

fn check_d(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::Parameter(alloc::format!("binomial representation degree must be >= 1, got {d}")));
    }
    Ok(())
}

fn sum_terms(terms: &[(u64, u32)], f: impl Fn(u64, u32) -> Option<u128>) -> Result<u128> {
    terms.iter().try_fold(0u128, |acc, &(a, k)| {
        f(a, k).and_then(|t| acc.checked_add(t)).ok_or(Error::Overflow("binomial sum"))
    })
}

/// Greedy expansion: the largest `a_d` with `C(a_d, d) <= a`, then recurse
/// on the remainder with `d - 1`.
pub fn binomial_rep(a: u128, d: u32) -> Result<BinomialRep> {
    check_d(d)?;
    let mut rest = a;
    let mut terms = Vec::new();
    let mut k = d;
    while rest > 0 && k >= 1 {
        // C(x, k) is increasing for x >= k, and C(k + rest, k) > rest.
        let (mut lo, mut hi) = (k as u64, (k as u64).saturating_add(u64::try_from(rest).unwrap_or(u64::MAX)));
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match binomial(mid, k as u64) {
                Some(c) if c <= rest => lo = mid,
                _ => hi = mid - 1,
            }
        }
        let c = binomial(lo, k as u64).ok_or(Error::Overflow("binomial_rep"))?;
        terms.push((lo, k));
        rest -= c;
        k -= 1;
    }
    Ok(BinomialRep { d, terms })
}

/// `a^<d>`.
pub fn op_upper(a: u128, d: u32) -> Result<u128> {
    let r = binomial_rep(a, d)?;
    sum_terms(&r.terms, |a, k| binomial(a + 1, k as u64 + 1))
}

/// `a_<d>`, with the convention `1_<d> = 0`.
pub fn op_lower(a: u128, d: u32) -> Result<u128> {
    let r = binomial_rep(a, d)?;
    if a == 1 {
        return Ok(0);
    }
    sum_terms(&r.terms, |a, k| binomial(a, k as u64 - 1))
}

/// `a^(d)`.
pub fn op_paren(a: u128, d: u32) -> Result<u128> {
    let r = binomial_rep(a, d)?;
    sum_terms(&r.terms, |a, k| binomial(a, k as u64 + 1))
}

/// Closed form for `b^(d) == c^(d)` when `c > b > 0`: the last lower index
/// `j` of `b` satisfies `j >= 2` and `c - b <= j - 1`.
pub fn lemma_paren_equal(b: u128, c: u128, d: u32) -> Result<bool> {
    if b == 0 || c <= b {
        return Err(Error::Parameter(alloc::format!("need c > b > 0, got b = {b}, c = {c}")));
    }
    let j = binomial_rep(b, d)?.last_index().expect("b > 0 has terms") as u128;
    Ok(j >= 2 && c - b < j)
}

/// Macaulay's bound: `h(0) = 1` and `h(j+1) <= h(j)^<j>` for `j >= 1`.
pub fn macaulay_growth_ok(h: &[u128]) -> Result<bool> {
    if h.first() != Some(&1) {
        return Ok(false);
    }
    for j in 1..h.len().saturating_sub(1) {
        if h[j + 1] > op_upper(h[j], j as u32)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kruskal–Katona validity of an f-vector `(f_0, f_1, ..)`:
/// `0 < f_{i+1} <= f_i^(i+1)` for every consecutive pair.
pub fn kruskal_katona_ok(f: &[u128]) -> Result<bool> {
    for i in 0..f.len().saturating_sub(1) {
        if f[i + 1] == 0 || f[i + 1] > op_paren(f[i], i as u32 + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_148() {
        let r = binomial_rep(148, 5).unwrap();
        assert_eq!(r.terms, [(9, 5), (6, 4), (4, 3), (3, 2)]);
        assert_eq!(op_upper(148, 5).unwrap(), 240);
        // 126 + 20 + 6 + 3
        assert_eq!(op_lower(148, 5).unwrap(), 155);
        assert_eq!(op_paren(148, 5).unwrap(), 92);
    }

    #[test]
    fn conventions() {
        assert!(binomial_rep(0, 4).unwrap().terms.is_empty());
        for d in 1..10 {
            assert_eq!(op_upper(0, d).unwrap(), 0);
            assert_eq!(op_lower(0, d).unwrap(), 0);
            assert_eq!(op_paren(0, d).unwrap(), 0);
            assert_eq!(op_upper(1, d).unwrap(), 1);
            assert_eq!(op_lower(1, d).unwrap(), 0);
        }
        assert!(binomial_rep(5, 0).is_err());
    }

    #[test]
    fn small_reps() {
        assert_eq!(binomial_rep(7, 3).unwrap().terms, [(4, 3), (3, 2)]);
        assert_eq!(binomial_rep(3, 5).unwrap().terms, [(5, 5), (4, 4), (3, 3)]);
    }

    #[test]
    fn paren_lemma_examples() {
        assert!(lemma_paren_equal(3, 4, 5).unwrap());
        assert_eq!(op_paren(3, 5).unwrap(), 0);
        assert_eq!(op_paren(4, 5).unwrap(), 0);
        assert!(!lemma_paren_equal(148, 160, 5).unwrap());
        assert_ne!(op_paren(148, 5).unwrap(), op_paren(160, 5).unwrap());
        assert!(lemma_paren_equal(4, 4, 2).is_err());
    }

    #[test]
    fn growth() {
        assert!(macaulay_growth_ok(&[1, 3, 6, 10, 15]).unwrap());
        assert!(!macaulay_growth_ok(&[1, 2, 4]).unwrap());
        assert!(macaulay_growth_ok(&[1]).unwrap());
        assert!(!macaulay_growth_ok(&[2, 1]).unwrap());
    }

    #[test]
    fn kruskal_katona() {
        // boundary of a triangle, then the full triangle
        assert!(kruskal_katona_ok(&[3, 3]).unwrap());
        assert!(kruskal_katona_ok(&[3, 3, 1]).unwrap());
        assert!(!kruskal_katona_ok(&[3, 4]).unwrap());
    }
}
