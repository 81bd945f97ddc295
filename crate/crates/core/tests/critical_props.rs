use lexsegment_core::formulas::{is_canonical_critical, is_critical};
use lexsegment_core::ideal::{has_linear_quotients, is_componentwise_linear, MonomialIdeal};
use lexsegment_core::VarSet;
use proptest::prelude::*;

const N: usize = 12;

/// Builds `(x_j) + m' J` from the innermost `(x_i, m)` outwards, drawing
/// every new variable from the unused ones.
fn build(perm: &[usize], steps: &[usize], base_m: usize) -> Option<Vec<VarSet>> {
    let mut next = 0;
    let mut take = |k: usize| -> Option<VarSet> {
        let s = VarSet::from_indices(perm.get(next..next + k)?.iter().copied());
        next += k;
        Some(s)
    };
    let xi = take(1)?;
    let m = take(base_m)?;
    let mut gens = vec![xi, m];
    for &prime_len in steps {
        let mprime = take(prime_len)?;
        let xj = take(1)?;
        gens = gens.into_iter().map(|g| g.union(mprime)).collect();
        gens.push(xj);
    }
    Some(gens)
}

/// Relabels the support onto `x_1 .. x_k`.
fn compact(gens: &[VarSet]) -> (usize, Vec<VarSet>) {
    let support: Vec<usize> = gens.iter().fold(VarSet::EMPTY, |a, g| a.union(*g)).iter().collect();
    let pos = |v: usize| support.binary_search(&v).expect("in support") + 1;
    (support.len(), gens.iter().map(|g| VarSet::from_indices(g.iter().map(pos))).collect())
}

fn strategy() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, usize, usize)> {
    (
        Just((1..=N).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(0usize..=2, 0..4),
        1usize..=3,
        0usize..=2,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn critical_ideals_have_linear_quotients((perm, steps, base_m, w_len) in strategy()) {
        let Some(gens) = build(&perm, &steps, base_m) else { return Ok(()) };
        let i = MonomialIdeal::from_sets(N, gens.iter().copied()).unwrap();
        prop_assert!(is_critical(&i));
        prop_assert!(has_linear_quotients(&i, 10).is_yes());
        // w J stays canonical critical and componentwise linear
        let used = gens.iter().fold(VarSet::EMPTY, |a, g| a.union(*g));
        let w = VarSet::from_indices(VarSet::full(N).minus(used).iter().take(w_len));
        let wgens: Vec<VarSet> = gens.iter().map(|g| g.union(w)).collect();
        let wi = MonomialIdeal::from_sets(N, wgens.iter().copied()).unwrap();
        prop_assert!(is_canonical_critical(&wi));
        prop_assert!(has_linear_quotients(&wi, 10).is_yes());
        let (k, small) = compact(&wgens);
        if k <= 8 {
            let small = MonomialIdeal::from_sets(k, small).unwrap();
            prop_assert!(is_componentwise_linear(&small, 0).unwrap());
        }
    }
}
