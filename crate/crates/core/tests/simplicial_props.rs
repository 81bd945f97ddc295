//! Dualities on random complexes over at most six vertices.

use lexsegment_core::ideal::betti;
use lexsegment_core::{SimplicialComplex, VarSet};
use proptest::prelude::*;

/// Maximal sets among the draws; never the full simplex, never `{∅}`.
fn complex(n: usize, draws: &[u32]) -> Option<SimplicialComplex> {
    let full = VarSet::full(n);
    let mut sets: Vec<VarSet> = draws.iter().map(|&b| VarSet(b).inter(full)).filter(|s| !s.is_empty() && *s != full).collect();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut facets: Vec<VarSet> = Vec::new();
    for s in sets {
        if !facets.iter().any(|f| s.is_subset(*f)) {
            facets.push(s);
        }
    }
    if facets.is_empty() {
        return None;
    }
    SimplicialComplex::new(n, facets).ok()
}

fn arb() -> impl Strategy<Value = (usize, Vec<u32>, u64)> {
    (2usize..=6, prop::collection::vec(any::<u32>(), 1..8), prop::sample::select(vec![0u64, 2, 3]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn alexander_dual_is_an_involution((n, draws, _) in arb()) {
        let Some(d) = complex(n, &draws) else { return Ok(()) };
        let Ok(dual) = d.alexander_dual() else { return Ok(()) };
        prop_assert_eq!(dual.alexander_dual().unwrap(), d);
    }

    #[test]
    fn euler_poincare((n, draws, p) in arb()) {
        let Some(d) = complex(n, &draws) else { return Ok(()) };
        let f = d.f_vector().unwrap();
        let chi: i128 = -1 + f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i128 } else { -(c as i128) }).sum::<i128>();
        let h = d.reduced_homology(p).unwrap();
        let hom: i128 = (-1..=d.dim() as i64).map(|i| if i.rem_euclid(2) == 0 { h.rank(i) as i128 } else { -(h.rank(i) as i128) }).sum();
        prop_assert_eq!(chi, hom);
    }

    /// `projdim S/I_Δ = reg I_{Δ^∨}`.
    #[test]
    fn terai((n, draws, p) in arb()) {
        let Some(d) = complex(n, &draws) else { return Ok(()) };
        let sr = d.to_sr_ideal().unwrap();
        let dual = d.complement_facet_ideal().unwrap();
        prop_assert_eq!(betti(&sr, p).unwrap().projdim_quotient() as i64, betti(&dual, p).unwrap().reg().unwrap());
    }

    /// `Δ` Cohen–Macaulay iff `I_{Δ^∨}` has a linear resolution.
    #[test]
    fn eagon_reiner((n, draws, p) in arb()) {
        let Some(d) = complex(n, &draws) else { return Ok(()) };
        let dual = d.complement_facet_ideal().unwrap();
        let linear = dual.is_equigenerated() && betti(&dual, p).unwrap().has_linear_resolution();
        prop_assert_eq!(d.is_cohen_macaulay(p).unwrap(), linear);
    }
}
