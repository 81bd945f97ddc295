//! Simplicial complexes on `[n]`, reduced homology over `Q` or `F_p`, and the
//! Stanley–Reisner dictionary.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::{minimal_transversals, MonomialIdeal};
use crate::monomial::{binomial, check_n, VarSet};
use crate::snf::{rank, IntMatrix};

/// Largest face count any enumeration here will materialise.
pub const FACE_CAP: usize = 1 << 22;

/// Field characteristic: 0 or a prime.
pub fn check_char(p: u64) -> Result<()> {
    let prime = p >= 2 && (2..).take_while(|d: &u64| d * d <= p).all(|d| !p.is_multiple_of(d));
    if p == 0 || prime {
        Ok(())
    } else {
        Err(Error::Parameter(format!("field characteristic {p} is neither 0 nor prime")))
    }
}

fn maximal(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|f| s.is_subset(*f)) {
            out.push(s);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Every subset of every facet, ordered by `(size, bits)`.
pub fn faces_of(facets: &[VarSet]) -> Result<Vec<VarSet>> {
    let mut all = BTreeSet::new();
    for f in facets {
        if f.len() >= 63 || all.len() + (1usize << f.len()) > FACE_CAP * 2 {
            return Err(Error::Scale(format!("facet {f} has too many faces")));
        }
        all.extend(f.subsets());
        if all.len() > FACE_CAP {
            return Err(Error::Scale(format!("more than {FACE_CAP} faces")));
        }
    }
    let mut v: Vec<VarSet> = all.into_iter().collect();
    v.sort_unstable_by_key(|s| (s.len(), s.bits()));
    Ok(v)
}

/// Reduced homology ranks of a face list closed under subsets and sorted by
/// `(size, bits)`; entry `k` is `dim H~_{k-1}`.  The void list gives `[]`.
pub fn reduced_homology_of_faces(faces: &[VarSet], p: u64) -> Result<Vec<usize>> {
    check_char(p)?;
    let Some(top) = faces.last().map(|f| f.len()) else {
        return Ok(Vec::new());
    };
    let mut by_size: Vec<&[VarSet]> = Vec::with_capacity(top + 1);
    let mut start = 0;
    for k in 0..=top {
        let end = start + faces[start..].iter().take_while(|f| f.len() == k).count();
        by_size.push(&faces[start..end]);
        start = end;
    }
    // rank of the boundary from size k to size k-1
    let mut ranks = alloc::vec![0usize; top + 2];
    for k in 1..=top {
        let (rows, cols) = (by_size[k - 1], by_size[k]);
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut mat = IntMatrix::zeros(rows.len(), cols.len());
        for (c, &f) in cols.iter().enumerate() {
            for (l, v) in f.iter().enumerate() {
                let key = f.without(v);
                let r = rows.binary_search_by_key(&key.bits(), |g| g.bits()).expect("closed under subsets");
                mat.set(r, c, if l % 2 == 0 { 1 } else { -1 });
            }
        }
        ranks[k] = rank(mat, p)?;
    }
    Ok((0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect())
}

/// Reduced homology of the complex generated by `facets`; `[EMPTY]` is the
/// complex `{∅}` with `H~_{-1} = 1`, an empty slice the void complex.
pub fn reduced_homology_of_facets(facets: &[VarSet], p: u64) -> Result<Vec<usize>> {
    reduced_homology_of_faces(&faces_of(facets)?, p)
}

/// Reisner over a face list: `H~_i(lk F) = 0` for `i < dim lk F`, all `F`.
pub fn is_cohen_macaulay_faces(faces: &[VarSet], p: u64) -> Result<bool> {
    for &f in faces {
        let link: Vec<VarSet> = faces.iter().filter(|g| f.is_subset(**g)).map(|g| g.minus(f)).collect();
        let mut link = link;
        link.sort_unstable_by_key(|s| (s.len(), s.bits()));
        let top = link.last().map_or(0, |g| g.len());
        // only H~_{i}, i < top - 1, matters: entries 0..top-1
        let h = reduced_homology_of_faces(&link, p)?;
        if h.iter().take(top).any(|&b| b != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `max{i + 1 : the i-skeleton is Cohen–Macaulay}`.
pub fn depth_faces(faces: &[VarSet], p: u64) -> Result<usize> {
    let top = faces.last().map_or(0, |f| f.len());
    let mut depth = 0;
    for size in 1..=top {
        let cut = faces.partition_point(|f| f.len() <= size);
        if !is_cohen_macaulay_faces(&faces[..cut], p)? {
            break;
        }
        depth = size;
    }
    Ok(depth)
}

/// Reduced homology ranks `H~_i`, `i = -1..=dim`, with the field used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub characteristic: u64,
    /// `ranks[k]` is `dim H~_{k-1}`.
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H~_i`, zero outside the computed range.
    pub fn rank(&self, i: i64) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.ranks.get(k)).copied().unwrap_or(0)
    }
}

/// Facets over `[n]`: nonempty list, no facet inside another, not `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: Vec<VarSet>) -> Result<SimplicialComplex> {
        check_n(n)?;
        if facets.is_empty() {
            return Err(Error::Degenerate("the void complex is not supported".to_string()));
        }
        let full = VarSet::full(n);
        if let Some(f) = facets.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::Parameter(format!("facet {f} is not inside [{n}]")));
        }
        let facets = maximal(facets);
        if facets == [VarSet::EMPTY] {
            return Err(Error::Degenerate("the complex {∅} is not supported".to_string()));
        }
        Ok(SimplicialComplex { n, facets })
    }

    /// 1-based vertex lists.
    pub fn from_lists(n: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Parameter(format!("vertex {v} outside 1..={n}")));
            }
        }
        SimplicialComplex::new(n, facets.iter().map(|f| VarSet::from_indices(f.iter().copied())).collect())
    }

    pub fn simplex(n: usize) -> Result<SimplicialComplex> {
        SimplicialComplex::new(n, alloc::vec![VarSet::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }
    /// Facets, lex-descending.
    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
    pub fn dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().expect("nonempty") - 1
    }
    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |a, f| a.union(*f))
    }
    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }
    pub fn contains_face(&self, f: VarSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }
    pub fn faces(&self) -> Result<Vec<VarSet>> {
        faces_of(&self.facets)
    }

    /// `(f_0, .., f_{d-1})`, `d = dim + 1`.
    pub fn f_vector(&self) -> Result<Vec<u128>> {
        let d = self.dim() + 1;
        let mut f = alloc::vec![0u128; d];
        for face in self.faces()? {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        Ok(f)
    }

    /// `h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}`, `f_{-1} = 1`.
    pub fn h_vector(&self) -> Result<Vec<i128>> {
        let f = self.f_vector()?;
        let d = f.len();
        let fm = |i: usize| if i == 0 { 1i128 } else { f[i - 1] as i128 };
        let mut h = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let mut s: i128 = 0;
            for i in 0..=j {
                let c = binomial((d - i) as u64, (j - i) as u64).ok_or(Error::Overflow("h_vector"))? as i128;
                let term = c.checked_mul(fm(i)).ok_or(Error::Overflow("h_vector"))?;
                s += if (j - i) % 2 == 0 { term } else { -term };
            }
            h.push(s);
        }
        Ok(h)
    }

    /// Faces of dimension at most `i`.
    pub fn skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        if i > self.dim() {
            return Err(Error::Parameter(format!("skeleton index {i} above dimension {}", self.dim())));
        }
        let k = i + 1;
        let mut out = Vec::new();
        for &f in &self.facets {
            if f.len() <= k {
                out.push(f);
            } else {
                out.extend(f.subsets().filter(|s| s.len() == k));
            }
        }
        SimplicialComplex::new(self.n, out)
    }

    /// `lk F = {G : F ∩ G = ∅, F ∪ G in Δ}`.  The link of a facet is `{∅}`,
    /// which this type does not represent.
    pub fn link(&self, f: VarSet) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::Face(f.to_string()));
        }
        let sets: Vec<VarSet> = self.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.minus(f)).collect();
        SimplicialComplex::new(self.n, sets)
    }

    /// Minimal nonfaces: the sets meeting every facet complement.
    pub fn minimal_nonfaces(&self) -> Vec<VarSet> {
        let comps: Vec<VarSet> = self.facets.iter().map(|f| f.complement(self.n)).collect();
        let mut v = minimal_transversals(&comps);
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `I_Δ`.
    pub fn to_sr_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_sets(self.n, self.minimal_nonfaces())
    }

    /// Facets are the complements of the minimal primes of `I`.
    pub fn from_sr_ideal(i: &MonomialIdeal) -> Result<SimplicialComplex> {
        if i.is_unit() {
            return Err(Error::Degenerate("the unit ideal has the void complex".to_string()));
        }
        let primes = minimal_transversals(&i.sets()?);
        SimplicialComplex::new(i.n(), primes.into_iter().map(|p| p.complement(i.n())).collect())
    }

    /// `Δ^∨ = {[n] \ F : F not in Δ}`.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let nf = self.minimal_nonfaces();
        if nf.is_empty() {
            return Err(Error::Degenerate("the dual of the full simplex is void".to_string()));
        }
        SimplicialComplex::new(self.n, nf.into_iter().map(|s| s.complement(self.n)).collect())
    }

    /// `I(Δ) = (x_F : F a facet)`.
    pub fn facet_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_sets(self.n, self.facets.iter().copied())
    }

    /// `I(Δ^c) = (x_{F^c} : F a facet)`, which equals `I_{Δ^∨}`.
    pub fn complement_facet_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_sets(self.n, self.facets.iter().map(|f| f.complement(self.n)))
    }

    pub fn reduced_homology(&self, p: u64) -> Result<HomologyProfile> {
        Ok(HomologyProfile { characteristic: p, ranks: reduced_homology_of_faces(&self.faces()?, p)? })
    }

    /// Reisner's criterion over the links of all faces, `∅` included.
    pub fn is_cohen_macaulay(&self, p: u64) -> Result<bool> {
        check_char(p)?;
        if !self.is_pure() {
            return Ok(false);
        }
        is_cohen_macaulay_faces(&self.faces()?, p)
    }

    /// `depth k[Δ]` by the skeleton scan.
    pub fn depth(&self, p: u64) -> Result<usize> {
        check_char(p)?;
        depth_faces(&self.faces()?, p)
    }

    /// `dim k[Δ] = dim Δ + 1`.
    pub fn krull_dim(&self) -> usize {
        self.dim() + 1
    }

    /// `e(k[Δ]) = f_{d-1}`, the number of top-dimensional facets.
    pub fn multiplicity(&self) -> usize {
        let d = self.dim() + 1;
        self.facets.iter().filter(|f| f.len() == d).count()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, s) in self.facets.iter().enumerate() {
            write!(f, "{}{s:?}", if k > 0 { ", " } else { "" })?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, &f.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }
    fn sets(f: &[&[usize]]) -> Vec<VarSet> {
        let mut v: Vec<VarSet> = f.iter().map(|s| VarSet::from_indices(s.iter().copied())).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    #[test]
    fn sr_complex_f_and_h_vectors() {
        let i = MonomialIdeal::parse(5, &["x1*x4", "x1*x5", "x2*x5", "x3*x4", "x4*x5"]).unwrap();
        let d = SimplicialComplex::from_sr_ideal(&i).unwrap();
        assert_eq!(d.facets(), sets(&[&[1, 2, 3], &[2, 4], &[3, 5]]));
        assert_eq!(d.f_vector().unwrap(), [5, 5, 1]);
        assert_eq!(d.h_vector().unwrap(), [1, 2, -2, 0]);
        assert_eq!(d.to_sr_ideal().unwrap(), i);
    }

    #[test]
    fn sr_complex_depth_and_facet_ideal() {
        let i = MonomialIdeal::parse(5, &["x1*x3", "x1*x4", "x3*x5", "x2*x4*x5"]).unwrap();
        let d = SimplicialComplex::from_sr_ideal(&i).unwrap();
        assert_eq!(d.facets(), sets(&[&[1, 2, 5], &[2, 3, 4], &[4, 5]]));
        assert_eq!(d.krull_dim(), 3);
        assert_eq!(d.depth(0).unwrap(), 2);
        assert_eq!(
            d.facet_ideal().unwrap(),
            MonomialIdeal::parse(5, &["x1*x2*x5", "x2*x3*x4", "x4*x5"]).unwrap()
        );
    }

    #[test]
    fn alexander_dual_of_four_facets() {
        let d = cx(5, &[&[1, 3, 4], &[1, 3, 5], &[2, 3, 4], &[2, 5]]);
        let dual = d.alexander_dual().unwrap();
        assert_eq!(dual.facets(), sets(&[&[1, 2, 3], &[1, 4], &[3, 4, 5]]));
        assert_eq!(dual.alexander_dual().unwrap(), d);
        assert_eq!(dual.to_sr_ideal().unwrap(), d.complement_facet_ideal().unwrap());
    }

    #[test]
    fn simplex_and_small() {
        let s = SimplicialComplex::simplex(3).unwrap();
        assert!(s.to_sr_ideal().unwrap().is_zero());
        assert_eq!(s.f_vector().unwrap(), [3, 3, 1]);
        assert!(s.reduced_homology(0).unwrap().ranks.iter().all(|&r| r == 0));
        let v = cx(1, &[&[1]]);
        assert_eq!(v.f_vector().unwrap(), [1]);
        assert_eq!(v.h_vector().unwrap(), [1, 0]);
        assert!(SimplicialComplex::new(3, Vec::new()).is_err());
        assert!(SimplicialComplex::new(3, alloc::vec![VarSet::EMPTY]).is_err());
    }

    #[test]
    fn homology_basics() {
        let circle = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let h = circle.reduced_homology(0).unwrap();
        assert_eq!((h.rank(-1), h.rank(0), h.rank(1)), (0, 0, 1));
        let two = cx(2, &[&[1], &[2]]);
        assert_eq!(two.reduced_homology(0).unwrap().rank(0), 1);
        assert_eq!(reduced_homology_of_facets(&[VarSet::EMPTY], 0).unwrap(), [1]);
        assert!(reduced_homology_of_facets(&[], 0).unwrap().is_empty());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
            ],
        );
        assert_eq!(rp2.reduced_homology(0).unwrap().ranks, [0, 0, 0, 0]);
        assert_eq!(rp2.reduced_homology(2).unwrap().ranks, [0, 0, 1, 1]);
        assert!(rp2.is_cohen_macaulay(0).unwrap());
        assert!(!rp2.is_cohen_macaulay(2).unwrap());
        assert_eq!(rp2.depth(2).unwrap(), 2);
        assert!(check_char(4).is_err());
    }

    #[test]
    fn cohen_macaulay_small() {
        assert!(cx(3, &[&[1], &[2], &[3]]).is_cohen_macaulay(0).unwrap());
        assert!(cx(4, &[&[1, 2], &[2, 3], &[3, 4]]).is_cohen_macaulay(0).unwrap());
        let two_edges = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(!two_edges.is_cohen_macaulay(0).unwrap());
        assert_eq!(two_edges.depth(0).unwrap(), 1);
        assert!(!cx(3, &[&[1, 2], &[3]]).is_cohen_macaulay(0).unwrap());
    }

    #[test]
    fn skeleton_and_link() {
        let s = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(s.skeleton(1).unwrap().facets(), sets(&[&[1, 2], &[1, 3], &[2, 3]]));
        let d = cx(5, &[&[1, 2, 3], &[2, 4], &[3, 5]]);
        assert_eq!(d.link(VarSet::singleton(2)).unwrap().facets(), sets(&[&[1, 3], &[4]]));
        assert!(matches!(d.link(VarSet::from_indices([4, 5])), Err(Error::Face(_))));
        assert!(d.skeleton(3).is_err());
    }
}
