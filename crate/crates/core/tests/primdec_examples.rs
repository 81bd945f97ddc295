use lexsegment_core::formulas::{
    invariants_formula, primdec_completely, primdec_final, primdec_formula, primdec_initial, LexsegSpec,
};
use lexsegment_core::ideal::{minimal_primes_squarefree, sort_primes, PrimaryComponent};
use lexsegment_core::VarSet;

fn s(ix: &[usize]) -> VarSet {
    VarSet::from_indices(ix.iter().copied())
}

fn primes(list: &[&[usize]]) -> Vec<VarSet> {
    let mut p: Vec<VarSet> = list.iter().map(|g| s(g)).collect();
    sort_primes(&mut p);
    p
}

fn of(c: Vec<PrimaryComponent>) -> Vec<VarSet> {
    c.iter().map(PrimaryComponent::prime).collect()
}

fn oracle(spec: &LexsegSpec) -> Vec<VarSet> {
    let mut p = minimal_primes_squarefree(&spec.ideal().unwrap()).unwrap();
    sort_primes(&mut p);
    p
}

#[test]
fn initial_x2x4x5_in_six_variables() {
    let spec = LexsegSpec::initial(6, s(&[2, 4, 5])).unwrap();
    let expect = primes(&[
        &[1, 2],
        &[1, 3, 4],
        &[1, 3, 5],
        &[3, 4, 5, 6],
        &[2, 4, 5, 6],
        &[2, 3, 5, 6],
        &[2, 3, 4, 6],
        &[2, 3, 4, 5],
        &[1, 4, 5, 6],
    ]);
    assert_eq!(of(primdec_initial(&spec).unwrap()), expect);
    assert_eq!(oracle(&spec), expect);
    let inv = invariants_formula(&spec).unwrap();
    assert_eq!((inv.dim, inv.depth), (4, Some(2)));
}

#[test]
fn final_x1x2x5_in_six_variables() {
    let spec = LexsegSpec::final_segment(6, s(&[1, 2, 5])).unwrap();
    let expect = primes(&[
        &[1, 2, 3, 4],
        &[1, 2, 3, 5],
        &[1, 2, 3, 6],
        &[1, 2, 4, 5],
        &[1, 2, 4, 6],
        &[1, 2, 5, 6],
        &[1, 3, 4, 5],
        &[1, 3, 4, 6],
        &[3, 5, 6],
        &[4, 5, 6],
        &[2, 3, 4, 5],
        &[2, 3, 4, 6],
    ]);
    assert_eq!(of(primdec_final(&spec).unwrap()), expect);
    assert_eq!(oracle(&spec), expect);
    let inv = invariants_formula(&spec).unwrap();
    assert_eq!((inv.dim, inv.depth), (3, Some(2)));
}

#[test]
fn completely_without_x2_in_u() {
    let spec = LexsegSpec::new(7, s(&[1, 3, 4, 5]), s(&[3, 4, 6, 7])).unwrap();
    let expect = primes(&[
        &[1, 2, 3],
        &[1, 2, 4],
        &[1, 2, 5, 6],
        &[1, 2, 5, 7],
        &[1, 2, 6, 7],
        &[3, 4, 5],
        &[3, 4, 6],
        &[3, 4, 7],
        &[3, 5, 6],
        &[3, 5, 7],
        &[3, 6, 7],
        &[4, 5, 6],
        &[4, 5, 7],
        &[4, 6, 7],
        &[5, 6, 7],
    ]);
    assert_eq!(expect.len(), 15);
    assert_eq!(of(primdec_completely(&spec).unwrap()), expect);
    assert_eq!(oracle(&spec), expect);
}

#[test]
fn completely_with_x2_in_u() {
    let spec = LexsegSpec::new(7, s(&[1, 2, 4, 5]), s(&[3, 4, 5, 7])).unwrap();
    let expect = primes(&[
        &[1, 2, 3],
        &[1, 2, 4],
        &[1, 2, 5],
        &[1, 2, 6, 7],
        &[1, 3, 6, 7],
        &[1, 3, 5, 7],
        &[1, 3, 5, 6],
        &[1, 3, 4, 7],
        &[1, 3, 4, 6],
        &[1, 3, 4, 5],
        &[2, 3, 4, 5],
        &[2, 3, 4, 6],
        &[2, 3, 4, 7],
        &[2, 3, 5, 6],
        &[2, 3, 5, 7],
        &[2, 3, 6, 7],
        &[4, 5, 6],
        &[4, 5, 7],
        &[4, 6, 7],
        &[5, 6, 7],
    ]);
    assert_eq!(expect.len(), 20);
    assert_eq!(of(primdec_completely(&spec).unwrap()), expect);
    assert_eq!(oracle(&spec), expect);
}

#[test]
fn preconditions_are_enforced() {
    // j_1 = 1 needs the x1 reduction first
    let spec = LexsegSpec::initial(6, s(&[1, 4, 5])).unwrap();
    assert!(primdec_initial(&spec).is_err());
    assert_eq!(primdec_formula(&spec).unwrap().primes, oracle(&spec));
    let full = LexsegSpec::final_segment(5, s(&[1, 2])).unwrap();
    assert!(matches!(primdec_final(&full), Err(lexsegment_core::Error::Degenerate(_))));
    // L(x1x4, x2x3) in 5 variables is not completely: j = 2 < i - 2
    let spec = LexsegSpec::new(5, s(&[1, 5]), s(&[2, 3])).unwrap();
    assert!(!spec.is_completely().unwrap());
    assert!(matches!(primdec_completely(&spec), Err(lexsegment_core::Error::Domain(_))));
}
