//! Monomial ideals and the brute-force oracles that do not know anything
//! about lexsegments.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};
use crate::lexsegments::Flavor;
use crate::monomial::{binomial, check_n, enumerate_degree, enumerate_sqf, Monomial, VarSet};
use crate::simplicial::{check_char, reduced_homology_of_facets};
use crate::snf::{rank, IntMatrix};

/// Default cap on `C(n+j-1, j)` for degree-by-degree enumeration.
pub const HILBERT_CAP: u128 = 1_000_000;
/// Largest generator count the literal Taylor complex accepts.
pub const TAYLOR_CAP: usize = 20;
/// Default generator count for the exact linear-quotients search.
pub const LINQUOT_LIMIT: usize = 10;

/// `n` variables plus the canonical minimal generating set: ascending degree,
/// lex-descending inside a degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn canonical_sort(v: &mut [Monomial]) {
    v.sort_unstable_by_key(|m| (m.degree(), Reverse(m.clone())));
}

impl MonomialIdeal {
    /// `minimalize`: drop every generator divisible by another.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        check_n(n)?;
        for g in &gens {
            if g.n() != n {
                return Err(Error::Dimension { expected: n, found: g.n() });
            }
        }
        let mut sorted = gens;
        canonical_sort(&mut sorted);
        sorted.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        canonical_sort(&mut kept);
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn parse(n: usize, gens: &[&str]) -> Result<MonomialIdeal> {
        let gens = gens.iter().map(|s| Monomial::parse(s, Some(n))).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(n, gens)
    }

    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = VarSet>) -> Result<MonomialIdeal> {
        MonomialIdeal::new(n, sets.into_iter().map(|s| s.to_monomial(n)).collect())
    }

    pub fn zero(n: usize) -> Result<MonomialIdeal> {
        MonomialIdeal::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }
    /// `G(I)`.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }
    /// `mu(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }
    pub fn indeg(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }
    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }
    /// All generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        self.indeg() == self.max_degree()
    }
    /// Generator supports; squarefree ideals only.
    pub fn sets(&self) -> Result<Vec<VarSet>> {
        self.gens.iter().map(|g| g.as_set().ok_or_else(|| Error::Flavor(g.to_string()))).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I : m = (g / gcd(g, m))`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_same(m.n())?;
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.colon(m)).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other.n)?;
        MonomialIdeal::new(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other.n)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_same(m.n())?;
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.mul(m)).collect())
    }

    fn check_same(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::Dimension { expected: self.n, found: n });
        }
        Ok(())
    }

    /// Degree-`j` monomials of `I`, lex-descending.
    pub fn degree_part(&self, j: u32) -> Result<Vec<Monomial>> {
        let mut out = Vec::new();
        for g in self.gens.iter().filter(|g| g.degree() <= j) {
            for w in enumerate_degree(self.n, j - g.degree(), false)? {
                out.push(g.mul(&w));
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }

    /// `I_<j>`: the ideal generated by the degree-`j` part.
    pub fn component(&self, j: u32) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.n, self.degree_part(j)?)
    }

    /// `I_[j]`: generated by the squarefree degree-`j` monomials of `I`.
    pub fn squarefree_component(&self, j: u32) -> Result<MonomialIdeal> {
        if j as usize > self.n {
            return MonomialIdeal::zero(self.n);
        }
        let sets: Vec<VarSet> = enumerate_sqf(self.n, j)?
            .into_iter()
            .filter(|s| self.contains(&s.to_monomial(self.n)))
            .collect();
        MonomialIdeal::from_sets(self.n, sets)
    }

    /// `dim_k I_j`, with the default enumeration cap.
    pub fn hilbert_value(&self, j: u32) -> Result<u128> {
        self.hilbert_value_capped(j, HILBERT_CAP)
    }

    pub fn hilbert_value_capped(&self, j: u32, cap: u128) -> Result<u128> {
        let size = binomial(self.n as u64 + j as u64 - 1, j as u64).ok_or(Error::Overflow("hilbert_value"))?;
        if size > cap {
            return Err(Error::Scale(format!("C({}+{j}-1, {j}) = {size} monomials exceeds cap {cap}", self.n)));
        }
        Ok(enumerate_degree(self.n, j, false)?.iter().filter(|w| self.contains(w)).count() as u128)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---- primary decomposition --------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimaryComponent {
    /// `P_G = (x_i : i in G)`.
    Prime(VarSet),
    /// `(x_i^{a_i})` as `(i, a_i)` pairs, ascending `i`.
    Irreducible(Vec<(usize, u32)>),
    /// Intersection of irreducible components sharing one radical.
    Merged { prime: VarSet, gens: Vec<Monomial> },
}

impl PrimaryComponent {
    /// The associated prime, as its variable set.
    pub fn prime(&self) -> VarSet {
        match self {
            PrimaryComponent::Prime(g) => *g,
            PrimaryComponent::Irreducible(p) => VarSet::from_indices(p.iter().map(|&(i, _)| i)),
            PrimaryComponent::Merged { prime, .. } => *prime,
        }
    }
    pub fn height(&self) -> usize {
        self.prime().len()
    }
    pub fn to_ideal(&self, n: usize) -> Result<MonomialIdeal> {
        match self {
            PrimaryComponent::Prime(g) => MonomialIdeal::new(n, g.iter().map(|i| Monomial::var(n, i)).collect::<Result<_>>()?),
            PrimaryComponent::Irreducible(p) => MonomialIdeal::new(
                n,
                p.iter().map(|&(i, a)| Ok(Monomial::one(n)?.pow_var(i, a))).collect::<Result<_>>()?,
            ),
            PrimaryComponent::Merged { gens, .. } => MonomialIdeal::new(n, gens.clone()),
        }
    }
}

impl fmt::Display for PrimaryComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimaryComponent::Prime(g) => {
                f.write_str("(")?;
                for (k, i) in g.iter().enumerate() {
                    write!(f, "{}x{i}", if k > 0 { ", " } else { "" })?;
                }
                f.write_str(")")
            }
            PrimaryComponent::Irreducible(p) => {
                f.write_str("(")?;
                for (k, &(i, a)) in p.iter().enumerate() {
                    write!(f, "{}x{i}", if k > 0 { ", " } else { "" })?;
                    if a > 1 {
                        write!(f, "^{a}")?;
                    }
                }
                f.write_str(")")
            }
            PrimaryComponent::Merged { gens, .. } => {
                f.write_str("(")?;
                for (k, g) in gens.iter().enumerate() {
                    write!(f, "{}{g}", if k > 0 { ", " } else { "" })?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Canonical prime order: height, then the ascending index list.
pub fn sort_primes(primes: &mut [VarSet]) {
    primes.sort_unstable_by_key(|g| (g.len(), g.to_vec()));
}

fn sort_components(c: &mut [PrimaryComponent]) {
    c.sort_by_key(|p| (p.height(), p.prime().to_vec()));
}

/// Minimal sets meeting every edge.  An empty edge admits no transversal.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut cur: Vec<VarSet> = vec![VarSet::EMPTY];
    let mut edges = edges.to_vec();
    edges.sort_unstable_by_key(|e| e.len());
    for &e in &edges {
        let mut next: Vec<VarSet> = Vec::new();
        for &t in &cur {
            if !t.is_disjoint(e) {
                next.push(t);
            } else {
                next.extend(e.iter().map(|x| t.with(x)));
            }
        }
        next.sort_unstable_by_key(|t| (t.len(), t.bits()));
        next.dedup();
        let mut kept: Vec<VarSet> = Vec::with_capacity(next.len());
        for t in next {
            if !kept.iter().any(|k| k.is_subset(t)) {
                kept.push(t);
            }
        }
        cur = kept;
    }
    cur
}

/// Minimal primes of a squarefree ideal, canonically sorted.
pub fn minimal_primes_squarefree(i: &MonomialIdeal) -> Result<Vec<VarSet>> {
    if i.is_unit() {
        return Err(Error::Parameter("the unit ideal has no primary decomposition".to_string()));
    }
    let mut p = minimal_transversals(&i.sets()?);
    sort_primes(&mut p);
    Ok(p)
}

pub fn primary_decomposition_squarefree(i: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    Ok(minimal_primes_squarefree(i)?.into_iter().map(PrimaryComponent::Prime).collect())
}

/// Height of a proper squarefree ideal.
pub fn height_squarefree(i: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes_squarefree(i)?.iter().map(|p| p.len()).min().unwrap_or(0))
}

fn irreducible_leaves(gens: Vec<Monomial>, out: &mut BTreeSet<Vec<u32>>) {
    let Some(pos) = gens.iter().position(|g| g.support().len() > 1) else {
        let n = gens.first().map_or(0, Monomial::n);
        let mut a = vec![0u32; n];
        for g in &gens {
            let i = g.min_var().expect("proper ideal");
            a[i - 1] = g.exp(i);
        }
        out.insert(a);
        return;
    };
    let g = &gens[pos];
    let i = g.min_var().expect("nonconstant");
    let pure = Monomial::one(g.n()).expect("same n").pow_var(i, g.exp(i));
    let rest = g.div(&pure).expect("divides");
    for extra in [pure, rest] {
        let mut next = gens.clone();
        next.push(extra);
        let ideal = MonomialIdeal::new(g.n(), next).expect("same n");
        irreducible_leaves(ideal.gens, out);
    }
}

/// Irredundant irreducible decomposition, merged by associated prime.
pub fn standard_primary_decomposition(i: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    if i.is_unit() {
        return Err(Error::Parameter("the unit ideal has no primary decomposition".to_string()));
    }
    if i.is_zero() {
        return Ok(vec![PrimaryComponent::Prime(VarSet::EMPTY)]);
    }
    let mut leaves = BTreeSet::new();
    irreducible_leaves(i.gens.clone(), &mut leaves);
    let leaves: Vec<Vec<u32>> = leaves.into_iter().collect();
    // Q_b inside Q_a makes Q_a redundant.
    let inside = |b: &[u32], a: &[u32]| b.iter().zip(a).all(|(&bi, &ai)| bi == 0 || (ai > 0 && ai <= bi));
    let kept: Vec<&Vec<u32>> = leaves
        .iter()
        .enumerate()
        .filter(|&(k, a)| !leaves.iter().enumerate().any(|(l, b)| l != k && inside(b, a)))
        .map(|(_, a)| a)
        .collect();
    let mut groups: BTreeMap<u32, Vec<&Vec<u32>>> = BTreeMap::new();
    for a in kept {
        let supp = a.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |s, (k, _)| s | 1 << k);
        groups.entry(supp).or_default().push(a);
    }
    let n = i.n;
    let mut out = Vec::new();
    for (supp, members) in groups {
        let prime = VarSet(supp);
        let as_pairs = |a: &Vec<u32>| -> Vec<(usize, u32)> {
            a.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| (k + 1, e)).collect()
        };
        if members.len() == 1 {
            let pairs = as_pairs(members[0]);
            if pairs.iter().all(|&(_, e)| e == 1) {
                out.push(PrimaryComponent::Prime(prime));
            } else {
                out.push(PrimaryComponent::Irreducible(pairs));
            }
        } else {
            let mut acc: Option<MonomialIdeal> = None;
            for a in members {
                let q = PrimaryComponent::Irreducible(as_pairs(a)).to_ideal(n)?;
                acc = Some(match acc {
                    None => q,
                    Some(x) => x.intersect(&q)?,
                });
            }
            out.push(PrimaryComponent::Merged { prime, gens: acc.expect("nonempty group").gens });
        }
    }
    sort_components(&mut out);
    Ok(out)
}

// ---- graded Betti numbers ---------------------------------------------------

/// `beta_{i,j}(I)`; `i = 0` counts minimal generators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedBettiTable {
    pub entries: BTreeMap<(usize, u32), u64>,
}

impl GradedBettiTable {
    fn add(&mut self, i: usize, j: u32, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }
    /// Total Betti number `beta_i(I)`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, &b)| b).sum()
    }
    /// `projdim(I)`; `None` for the zero ideal.
    pub fn projdim_ideal(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
    /// `projdim(S/I) = projdim(I) + 1`, and 0 for `I = 0`.
    pub fn projdim_quotient(&self) -> usize {
        self.projdim_ideal().map_or(0, |p| p + 1)
    }
    /// `reg(I) = max(j - i)`.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }
    /// All generators in degree `d` and every nonzero `beta_{i,j}` on `j = i + d`.
    pub fn has_linear_resolution(&self) -> bool {
        let Some(&(_, d)) = self.entries.keys().next() else {
            return false;
        };
        self.entries.keys().all(|&(i, j)| j as i64 - i as i64 == d as i64)
    }
}

/// Betti numbers read off the Taylor complex stratum by stratum.
pub fn taylor_betti(i: &MonomialIdeal, p: u64) -> Result<GradedBettiTable> {
    check_char(p)?;
    let r = i.mu();
    if r > TAYLOR_CAP {
        return Err(Error::Scale(format!("{r} generators exceed the Taylor cap of {TAYLOR_CAP}")));
    }
    let mut table = GradedBettiTable::default();
    if r == 0 {
        return Ok(table);
    }
    let n = i.n;
    let total = 1usize << r;
    let mut lcm = vec![0u32; total * n];
    for t in 1..total {
        let low = t.trailing_zeros() as usize;
        let rest = t & (t - 1);
        let g = i.gens[low].exps();
        for k in 0..n {
            lcm[t * n + k] = lcm[rest * n + k].max(g[k]);
        }
    }
    let key = |t: usize| &lcm[t * n..(t + 1) * n];
    let mut order: Vec<usize> = (1..total).collect();
    order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)).then((a.count_ones(), a).cmp(&(b.count_ones(), b))));
    let mut start = 0;
    while start < order.len() {
        let m = key(order[start]);
        let mut end = start;
        while end < order.len() && key(order[end]) == m {
            end += 1;
        }
        let stratum = &order[start..end];
        let deg: u32 = m.iter().sum();
        // faces of the stratum by cardinality, ascending masks
        let mut by_size: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for &t in stratum {
            by_size.entry(t.count_ones()).or_default().push(t);
        }
        let mut ranks: BTreeMap<u32, usize> = BTreeMap::new();
        for (&k, cols) in &by_size {
            let Some(rows) = by_size.get(&(k - 1)) else { continue };
            let mut mat = IntMatrix::zeros(rows.len(), cols.len());
            for (c, &t) in cols.iter().enumerate() {
                let mut bits = t;
                let mut pos = 0;
                while bits != 0 {
                    let s = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    if let Ok(row) = rows.binary_search(&(t & !s)) {
                        mat.set(row, c, if pos % 2 == 0 { 1 } else { -1 });
                    }
                    pos += 1;
                }
            }
            ranks.insert(k, rank(mat, p)?);
        }
        for (&k, faces) in &by_size {
            let out = ranks.get(&k).copied().unwrap_or(0);
            let inc = ranks.get(&(k + 1)).copied().unwrap_or(0);
            table.add(k as usize - 1, deg, (faces.len() - out - inc) as u64);
        }
        start = end;
    }
    Ok(table)
}

/// Least common multiples of all nonempty generator subsets.
pub fn lcm_lattice(i: &MonomialIdeal, cap: usize) -> Result<BTreeSet<Monomial>> {
    let mut seen: BTreeSet<Monomial> = i.gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = i.gens.clone();
    while let Some(a) = frontier.pop() {
        for g in &i.gens {
            let l = a.lcm(g);
            if !seen.contains(&l) {
                if seen.len() >= cap {
                    return Err(Error::Scale(format!("lcm lattice larger than {cap}")));
                }
                seen.insert(l.clone());
                frontier.push(l);
            }
        }
    }
    Ok(seen)
}

/// Betti numbers multidegree by multidegree:
/// `beta_{i,m}(I) = dim H~_{i-1}(K^m)` with
/// `K^m = {K in supp(m) : m / x_K in I}`, over the lcm lattice.
/// No generator cap; cross-validated against [`taylor_betti`].
pub fn betti(i: &MonomialIdeal, p: u64) -> Result<GradedBettiTable> {
    check_char(p)?;
    let mut table = GradedBettiTable::default();
    for m in lcm_lattice(i, 1 << 20)? {
        let supp = m.support();
        let mut facets: Vec<VarSet> = Vec::new();
        for g in i.gens.iter().filter(|g| g.divides(&m)) {
            let s = VarSet::from_indices(supp.iter().filter(|&k| g.exp(k) < m.exp(k)));
            facets.push(s);
        }
        if facets.contains(&supp) && !supp.is_empty() {
            continue; // a cone
        }
        let h = reduced_homology_of_facets(&facets, p)?;
        for (k, &b) in h.iter().enumerate() {
            table.add(k, m.degree(), b as u64);
        }
    }
    Ok(table)
}

/// `depth(S/I) = n - projdim(S/I)`.
pub fn depth_quotient(i: &MonomialIdeal, p: u64) -> Result<usize> {
    Ok(i.n - betti(i, p)?.projdim_quotient())
}

pub fn has_linear_resolution(i: &MonomialIdeal, p: u64) -> Result<bool> {
    Ok(i.is_equigenerated() && betti(i, p)?.has_linear_resolution())
}

// ---- linear quotients -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearQuotients {
    /// Witness order of `G(I)`.
    Yes(Vec<Monomial>),
    No,
    /// Above the exhaustive-search limit.
    Unknown,
}

impl LinearQuotients {
    pub fn is_yes(&self) -> bool {
        matches!(self, LinearQuotients::Yes(_))
    }
}

/// Whether `(prev) : u` is generated by variables.
pub fn colon_is_linear(prev: &[&Monomial], u: &Monomial) -> bool {
    let quots: Vec<Monomial> = prev.iter().map(|g| g.colon(u)).collect();
    let vars = quots.iter().filter(|q| q.degree() == 1).fold(VarSet::EMPTY, |s, q| s.union(q.support()));
    quots.iter().all(|q| !q.support().is_disjoint(vars))
}

pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|k| colon_is_linear(&order[..k].iter().collect::<Vec<_>>(), &order[k]))
}

/// Exact search: whether a colon step is linear depends only on the set of
/// earlier generators, so reachability over subsets decides it.
pub fn has_linear_quotients(i: &MonomialIdeal, limit: usize) -> LinearQuotients {
    let r = i.mu();
    if r > limit || r > 24 {
        return LinearQuotients::Unknown;
    }
    if r == 0 {
        return LinearQuotients::Yes(Vec::new());
    }
    let full = (1usize << r) - 1;
    // parent[mask] = generator added last, or NONE if unreached
    const NONE: u8 = u8::MAX;
    let mut parent = vec![NONE; full + 1];
    let mut reached = vec![false; full + 1];
    reached[0] = true;
    for mask in 0..full {
        if !reached[mask] {
            continue;
        }
        let prev: Vec<&Monomial> = (0..r).filter(|&k| mask >> k & 1 == 1).map(|k| &i.gens[k]).collect();
        for k in 0..r {
            let next = mask | 1 << k;
            if next == mask || reached[next] {
                continue;
            }
            if colon_is_linear(&prev, &i.gens[k]) {
                reached[next] = true;
                parent[next] = k as u8;
            }
        }
    }
    if !reached[full] {
        return LinearQuotients::No;
    }
    let mut order = Vec::with_capacity(r);
    let mut mask = full;
    while mask != 0 {
        let k = parent[mask] as usize;
        order.push(i.gens[k].clone());
        mask &= !(1 << k);
    }
    order.reverse();
    LinearQuotients::Yes(order)
}

/// Three-valued verdict for properties that may need the capped search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Every `I_<j>`, `indeg <= j <= max degree`, has linear quotients.
pub fn has_componentwise_linear_quotients(i: &MonomialIdeal, limit: usize) -> Result<Verdict> {
    let (Some(lo), Some(hi)) = (i.indeg(), i.max_degree()) else {
        return Ok(Verdict::Yes);
    };
    let mut unknown = false;
    for j in lo..=hi {
        match has_linear_quotients(&i.component(j)?, limit) {
            LinearQuotients::No => return Ok(Verdict::No),
            LinearQuotients::Unknown => unknown = true,
            LinearQuotients::Yes(_) => {}
        }
    }
    Ok(if unknown { Verdict::Unknown } else { Verdict::Yes })
}

/// Componentwise linear by `I_<j>` for `indeg <= j <= max degree`; higher
/// components are `m`-multiples of a linear one and stay linear.
pub fn is_componentwise_linear_graded(i: &MonomialIdeal, p: u64) -> Result<bool> {
    let (Some(lo), Some(hi)) = (i.indeg(), i.max_degree()) else {
        return Ok(true);
    };
    for j in lo..=hi {
        if !has_linear_resolution(&i.component(j)?, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Squarefree ideals use the squarefree components `I_[j]` for every `j`;
/// everything else goes through [`is_componentwise_linear_graded`].
pub fn is_componentwise_linear(i: &MonomialIdeal, p: u64) -> Result<bool> {
    if !i.is_squarefree() || i.is_unit() {
        return is_componentwise_linear_graded(i, p);
    }
    let Some(lo) = i.indeg() else {
        return Ok(true);
    };
    for j in lo..=i.n as u32 {
        let c = i.squarefree_component(j)?;
        if !c.is_zero() && !has_linear_resolution(&c, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stable: `x_i w / x_max(w) in I` for `w in G(I)`, `i < max(w)`; the
/// squarefree flavor additionally requires `x_i` not to divide `w`.
pub fn is_stable(i: &MonomialIdeal, flavor: Flavor) -> Result<bool> {
    if flavor.is_squarefree() && !i.is_squarefree() {
        return Err(Error::Flavor(i.to_string()));
    }
    for w in &i.gens {
        let Some(mx) = w.max_var() else { continue };
        let base = w.div_var(mx).expect("max var divides");
        for k in 1..mx {
            if flavor.is_squarefree() && w.exp(k) > 0 {
                continue;
            }
            if !i.contains(&base.mul_var(k)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
