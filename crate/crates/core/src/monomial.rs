//! Monomials in at most 32 variables, the lexicographic order and the
//! enumeration of fixed-degree classes.
//!
//! Variables are 1-based in every public signature (`x1 .. xn`).  A
//! squarefree monomial is carried as a [`VarSet`], a single machine word.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 32;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::VarCount(n))
    } else {
        Ok(())
    }
}

/// A subset of `[n]`; bit `i - 1` stands for `x_i`.
///
/// Doubles as a squarefree monomial `x_F`.  The `Ord` impl is the lex order
/// on squarefree monomials: larger cardinality first, then the set holding
/// the smallest element of the symmetric difference is greater.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(pub u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn full(n: usize) -> VarSet {
        if n >= 32 {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    /// Interval `{a, .., b}`; empty when `a > b`.
    pub fn range(a: usize, b: usize) -> VarSet {
        if a > b || b == 0 {
            return VarSet::EMPTY;
        }
        let a = a.max(1);
        VarSet(VarSet::full(b).0 & !VarSet::full(a - 1).0)
    }

    pub fn singleton(i: usize) -> VarSet {
        debug_assert!((1..=MAX_VARS).contains(&i));
        VarSet(1u32 << (i - 1))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> VarSet {
        it.into_iter().fold(VarSet::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1u32 << (i - 1)) != 0
    }
    pub fn with(self, i: usize) -> VarSet {
        VarSet(self.0 | VarSet::singleton(i).0)
    }
    pub fn without(self, i: usize) -> VarSet {
        VarSet(self.0 & !VarSet::singleton(i).0)
    }
    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }
    pub fn inter(self, o: VarSet) -> VarSet {
        VarSet(self.0 & o.0)
    }
    pub fn minus(self, o: VarSet) -> VarSet {
        VarSet(self.0 & !o.0)
    }
    pub fn complement(self, n: usize) -> VarSet {
        VarSet(VarSet::full(n).0 & !self.0)
    }
    pub fn is_subset(self, o: VarSet) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn is_disjoint(self, o: VarSet) -> bool {
        self.0 & o.0 == 0
    }
    /// Smallest index, `None` for the empty set.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }
    /// Ascending 1-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
    pub fn to_monomial(self, n: usize) -> Monomial {
        let mut exps = vec![0u32; n];
        for i in self.iter() {
            exps[i - 1] = 1;
        }
        Monomial { exps }
    }
    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        core::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(c.wrapping_sub(full) & full) };
            Some(VarSet(c))
        })
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders `x_F` in the monomial text grammar (`1` for the empty set).
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// Exponent vector; position `i - 1` holds the exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Monomial> {
        check_n(exps.len())?;
        Ok(Monomial { exps })
    }

    pub fn one(n: usize) -> Result<Monomial> {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Result<Monomial> {
        check_n(n)?;
        if i == 0 || i > n {
            return Err(Error::Parameter(format!("variable x{i} outside 1..={n}")));
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }
    /// Exponent of `x_i` (1-based); 0 outside the range.
    pub fn exp(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.exps.get(i - 1).copied().unwrap_or(0)
        }
    }
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }
    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                s = s.with(k + 1);
            }
        }
        s
    }
    /// Squarefree monomials only.
    pub fn as_set(&self) -> Option<VarSet> {
        self.is_squarefree().then(|| self.support())
    }
    /// `max(m)`: the largest index of a variable dividing `m`.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|k| k + 1)
    }
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0).map(|k| k + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n() == other.n() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect() }
    }
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }
    /// Exact quotient; `None` unless `other | self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.zip_with(other, |a, b| a - b))
    }
    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }
    /// Divides by `x_i`; `None` if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exp(i) == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i - 1] -= 1;
        Some(m)
    }
    pub fn pow_var(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += e;
        m
    }

    /// Parses the text grammar `x1*x3^2` (or `1`).  With `n = None` the
    /// variable count is the largest index that occurs.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Monomial> {
        let factors = parse_factors(s)?;
        let top = factors.iter().map(|&(i, _, _)| i).max().unwrap_or(1);
        let n = n.unwrap_or(top);
        check_n(n)?;
        let mut exps = vec![0u32; n];
        for (i, e, pos) in factors {
            if i > n {
                return Err(Error::Parse { pos, msg: format!("x{i} exceeds the {n} variables in scope") });
            }
            exps[i - 1] = exps[i - 1]
                .checked_add(e)
                .ok_or(Error::Parse { pos, msg: "exponent overflow".to_string() })?;
        }
        Ok(Monomial { exps })
    }
}

fn parse_factors(s: &str) -> Result<Vec<(usize, u32, usize)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    let skip_ws = |p: &mut usize| {
        while *p < bytes.len() && bytes[*p].is_ascii_whitespace() {
            *p += 1;
        }
    };
    let number = |p: &mut usize| -> Option<u64> {
        let start = *p;
        while *p < bytes.len() && bytes[*p].is_ascii_digit() {
            *p += 1;
        }
        s[start..*p].parse().ok()
    };
    skip_ws(&mut p);
    if s[p..].trim_end() == "1" {
        return Ok(out);
    }
    loop {
        skip_ws(&mut p);
        let start = p;
        if p >= bytes.len() || bytes[p] != b'x' {
            return Err(Error::Parse { pos: p, msg: "expected a variable `x<i>`".to_string() });
        }
        p += 1;
        let i = number(&mut p)
            .filter(|&i| i >= 1 && i <= MAX_VARS as u64)
            .ok_or(Error::Parse { pos: start + 1, msg: "expected a variable index in 1..=32".to_string() })?
            as usize;
        skip_ws(&mut p);
        let mut e = 1u32;
        if p < bytes.len() && bytes[p] == b'^' {
            p += 1;
            skip_ws(&mut p);
            let at = p;
            e = number(&mut p)
                .and_then(|v| u32::try_from(v).ok())
                .ok_or(Error::Parse { pos: at, msg: "expected an exponent".to_string() })?;
            skip_ws(&mut p);
        }
        out.push((i, e, start));
        if p >= bytes.len() {
            return Ok(out);
        }
        if bytes[p] != b'*' {
            return Err(Error::Parse { pos: p, msg: "expected `*` between factors".to_string() });
        }
        p += 1;
    }
}

impl Ord for Monomial {
    /// Lex order: degree first, then the leftmost differing exponent.  Only
    /// meaningful between equal variable counts; unequal counts compare by
    /// `n` so the impl stays total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.n() != b.n() {
        return Err(Error::Dimension { expected: a.n(), found: b.n() });
    }
    Ok(a.cmp(b))
}

/// All monomials of degree `d` in `n` variables, strictly lex-descending.
pub fn enumerate_degree(n: usize, d: u32, squarefree: bool) -> Result<Vec<Monomial>> {
    check_n(n)?;
    if squarefree {
        return Ok(enumerate_sqf(n, d)?.into_iter().map(|s| s.to_monomial(n)).collect());
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if k == n - 1 {
            cur[k] = left;
            out.push(Monomial { exps: cur.clone() });
            cur[k] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e;
            rec(k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    Ok(out)
}

/// All `d`-subsets of `[n]` as squarefree monomials, strictly lex-descending.
pub fn enumerate_sqf(n: usize, d: u32) -> Result<Vec<VarSet>> {
    check_n(n)?;
    let d = d as usize;
    if d > n {
        return Err(Error::EmptyClass { n, d: d as u32 });
    }
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, left: usize, cur: VarSet, out: &mut Vec<VarSet>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        if n + 1 - i < left {
            return;
        }
        rec(i + 1, n, left - 1, cur.with(i), out);
        rec(i + 1, n, left, cur, out);
    }
    rec(1, n, d, VarSet::EMPTY, &mut out);
    Ok(out)
}

/// A fixed-degree class in lex-descending order with an index for
/// neighbor lookups.
#[derive(Debug)]
pub struct DegreeClass {
    pub n: usize,
    pub d: u32,
    pub squarefree: bool,
    pub members: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeClass {
    pub fn new(n: usize, d: u32, squarefree: bool) -> Result<DegreeClass> {
        let members = enumerate_degree(n, d, squarefree)?;
        let index = members.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        Ok(DegreeClass { n, d, squarefree, members, index })
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn locate(&self, m: &Monomial) -> Result<usize> {
        self.position(m).ok_or_else(|| {
            Error::Parameter(format!(
                "{m} is not in the {}degree-{} class of {} variables",
                if self.squarefree { "squarefree " } else { "" },
                self.d,
                self.n
            ))
        })
    }

    /// `succ(m) = max{w : m > w}`.
    pub fn succ(&self, m: &Monomial) -> Result<Monomial> {
        let k = self.locate(m)?;
        self.members.get(k + 1).cloned().ok_or_else(|| Error::NoNeighbor(m.to_string()))
    }

    /// `pred(m) = min{w : w > m}`.
    pub fn pred(&self, m: &Monomial) -> Result<Monomial> {
        let k = self.locate(m)?;
        if k == 0 {
            return Err(Error::NoNeighbor(m.to_string()));
        }
        Ok(self.members[k - 1].clone())
    }
}

#[cfg(feature = "std")]
fn class_for(n: usize, d: u32, squarefree: bool) -> Result<alloc::sync::Arc<DegreeClass>> {
    use std::collections::HashMap;
    use std::sync::{Arc, OnceLock, RwLock};
    type Memo = RwLock<HashMap<(usize, u32, bool), Arc<DegreeClass>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (n, d, squarefree);
    if let Some(c) = memo.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(c.clone());
    }
    let built = Arc::new(DegreeClass::new(n, d, squarefree)?);
    let mut w = memo.write().unwrap_or_else(|e| e.into_inner());
    Ok(w.entry(key).or_insert(built).clone())
}

#[cfg(not(feature = "std"))]
fn class_for(n: usize, d: u32, squarefree: bool) -> Result<alloc::sync::Arc<DegreeClass>> {
    Ok(alloc::sync::Arc::new(DegreeClass::new(n, d, squarefree)?))
}

fn check_flavor(m: &Monomial, squarefree: bool) -> Result<()> {
    if squarefree && !m.is_squarefree() {
        return Err(Error::Flavor(m.to_string()));
    }
    Ok(())
}

/// Immediate lex successor (next smaller) in the degree class of `m`.
pub fn succ_lex(m: &Monomial, squarefree: bool) -> Result<Monomial> {
    check_flavor(m, squarefree)?;
    class_for(m.n(), m.degree(), squarefree)?.succ(m)
}

/// Immediate lex predecessor (next larger) in the degree class of `m`.
pub fn pred_lex(m: &Monomial, squarefree: bool) -> Result<Monomial> {
    check_flavor(m, squarefree)?;
    class_for(m.n(), m.degree(), squarefree)?.pred(m)
}

/// Binomial coefficient with overflow reported as `None`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn degree_dominates_lex() {
        assert_eq!(lex_compare(&m("x2^3", 2), &m("x1^2", 2)).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&m("x1*x2*x5", 6), &m("x1*x2*x6", 6)).unwrap(), Ordering::Greater);
        let u = m("x1*x3^2", 4);
        assert_eq!(lex_compare(&u, &u).unwrap(), Ordering::Equal);
        assert!(matches!(lex_compare(&u, &m("x1", 3)), Err(Error::Dimension { .. })));
    }

    #[test]
    fn varset_order_matches_monomial_order() {
        let all: Vec<VarSet> = VarSet::full(6).subsets().collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.cmp(&b), a.to_monomial(6).cmp(&b.to_monomial(6)), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn squarefree_class_6_3() {
        let c = enumerate_degree(6, 3, true).unwrap();
        assert_eq!(c.len(), 20);
        assert_eq!(c[0], m("x1*x2*x3", 6));
        assert_eq!(c[19], m("x4*x5*x6", 6));
        assert_eq!(enumerate_degree(3, 3, true).unwrap(), vec![m("x1*x2*x3", 3)]);
        assert_eq!(enumerate_degree(3, 4, true), Err(Error::EmptyClass { n: 3, d: 4 }));
    }

    #[test]
    fn general_class_3_2() {
        let got: Vec<String> = enumerate_degree(3, 2, false).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(got, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
    }

    #[test]
    fn neighbors() {
        let a = m("x1*x2*x3", 6);
        let b = m("x1*x2*x4", 6);
        assert_eq!(succ_lex(&a, true).unwrap(), b);
        assert_eq!(pred_lex(&b, true).unwrap(), a);
        assert!(matches!(succ_lex(&m("x4*x5*x6", 6), true), Err(Error::NoNeighbor(_))));
        assert!(matches!(pred_lex(&a, true), Err(Error::NoNeighbor(_))));
        assert!(matches!(succ_lex(&m("x1^2", 3), true), Err(Error::Flavor(_))));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(m("x3^2 * x1", 3).to_string(), "x1*x3^2");
        assert_eq!(Monomial::parse("1", Some(2)).unwrap().to_string(), "1");
        assert_eq!(Monomial::parse("x1*x4", None).unwrap().n(), 4);
        assert!(matches!(Monomial::parse("x1*y2", Some(3)), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Monomial::parse("x5", Some(3)), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(Monomial::parse("x1^", Some(3)), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Monomial::parse("x33", None), Err(Error::Parse { .. })));
    }

    #[test]
    fn varset_helpers() {
        let s = VarSet::from_indices([2, 5, 7]);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(7));
        assert_eq!(s.to_vec(), vec![2, 5, 7]);
        assert_eq!(VarSet::range(3, 5).to_vec(), vec![3, 4, 5]);
        assert!(VarSet::range(4, 3).is_empty());
        assert_eq!(s.complement(7).to_vec(), vec![1, 3, 4, 6]);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(VarSet::full(32).len(), 32);
        assert_eq!(s.to_string(), "x2*x5*x7");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 5), Some(126));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(200, 100), None);
    }
}
