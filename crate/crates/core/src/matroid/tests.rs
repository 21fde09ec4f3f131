use super::*;
use crate::catalog::{example_matroid, fano};

fn s(labels: &[usize]) -> ElementSet {
    ElementSet::of(labels)
}

fn u42_bases() -> Vec<ElementSet> {
    ElementSet::full(4).subsets_of_size(2).collect()
}

#[test]
fn ranks_of_the_example() {
    let m = example_matroid();
    assert_eq!(m.rank(s(&[1, 2, 3])).unwrap(), 2);
    assert_eq!(m.rank(s(&[3, 4, 5])).unwrap(), 2);
    assert_eq!(m.rank(m.ground()).unwrap(), 3);
    assert_eq!(m.rank(ElementSet::EMPTY).unwrap(), 0);
    assert_eq!(m.nullity(m.ground()).unwrap(), 3);
    assert_eq!(m.nullity(s(&[3, 4, 5, 6])).unwrap(), 2);
    assert!(m.rank(s(&[7])).is_err());
}

#[test]
fn ranks_of_other_oracles() {
    let u = Matroid::uniform(6, 3).unwrap();
    assert_eq!(u.rank(s(&[1, 2, 3, 4])).unwrap(), 3);
    assert_eq!(u.rank(s(&[1, 2])).unwrap(), 2);
    let b = Matroid::from_bases(4, u42_bases()).unwrap();
    assert_eq!(b.rank(s(&[1, 4])).unwrap(), 2);
    assert_eq!(b.rank(s(&[1, 2, 3])).unwrap(), 2);
    assert_eq!(b.uniform_test(), Some((4, 2)));
    assert!(Matroid::uniform(3, 4).is_err());
}

#[test]
fn closure_and_cyclic_part() {
    let m = example_matroid();
    assert_eq!(m.closure(s(&[1, 2])).unwrap(), s(&[1, 2, 3]));
    assert_eq!(m.closure(s(&[5])).unwrap(), s(&[5, 6]));
    assert_eq!(m.cyc(s(&[1, 2, 4, 5])).unwrap(), s(&[1, 2, 4, 5]));
    assert_eq!(m.cyc(s(&[1, 2, 4])).unwrap(), ElementSet::EMPTY);
    assert_eq!(m.cyc(m.ground()).unwrap(), m.ground());
    assert!(m.is_flat(s(&[1, 2, 3])).unwrap());
    assert!(!m.is_flat(s(&[1, 2])).unwrap());
    assert!(m.is_cyclic_set(s(&[1, 2, 4, 5])).unwrap());
    assert!(!m.is_cyclic_flat(s(&[1, 2, 4, 5])).unwrap());
    assert!(m.is_cyclic_flat(s(&[3, 4, 5, 6])).unwrap());
    assert!(m.is_independent(s(&[1, 2, 4])).unwrap());
    assert!(!m.is_independent(s(&[5, 6])).unwrap());
}

#[test]
fn minors_and_duals() {
    let m = example_matroid();
    assert_eq!(m.contract(s(&[1])).unwrap().rank(s(&[2, 3, 4])).unwrap(), 2);
    assert_eq!(m.restrict(s(&[2, 3, 4, 5])).unwrap().rank(s(&[2, 3, 4])).unwrap(), 3);
    assert_eq!(m.dual().rank(s(&[2, 3, 4])).unwrap(), 2);
    let minor = m.restrict(s(&[1, 2, 3, 4])).unwrap();
    assert!(minor.rank(s(&[5])).is_err());
    // Nested minors flatten onto the original oracle.
    let nested = m.contract(s(&[4])).unwrap().contract(s(&[1])).unwrap();
    let direct = m.contract(s(&[1, 4])).unwrap();
    for x in nested.ground().subsets() {
        assert_eq!(nested.rank(x).unwrap(), direct.rank(x).unwrap());
    }
    assert!(MinorSpec::new(s(&[1, 2]), s(&[3])).is_err());
}

#[test]
fn dual_is_an_involution() {
    for m in [example_matroid(), fano(), Matroid::uniform(5, 2).unwrap()] {
        let dd = m.dual().dual();
        for x in m.ground().subsets() {
            assert_eq!(m.r(x), dd.r(x), "{x}");
        }
        assert_eq!(m.dual().full_rank(), m.size() - m.full_rank());
    }
}

#[test]
fn loops_and_coloops() {
    let g = FieldMatrix::new(2, vec![vec![1, 0, 1, 0], vec![0, 1, 1, 0]]).unwrap();
    let m = Matroid::linear(g);
    assert_eq!(m.loops(), s(&[4]));
    assert_eq!(m.coloops(), ElementSet::EMPTY);
    assert_eq!(example_matroid().coloops(), ElementSet::EMPTY);
    let free = Matroid::uniform(3, 3).unwrap();
    assert_eq!(free.coloops(), free.ground());
}

#[test]
fn uniform_recognition() {
    assert_eq!(Matroid::uniform(6, 3).unwrap().uniform_test(), Some((6, 3)));
    assert_eq!(example_matroid().uniform_test(), None);
    let vandermonde = FieldMatrix::vandermonde(7, 3, &[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(Matroid::linear(vandermonde).uniform_test(), Some((5, 3)));
    let m = example_matroid();
    let spec = MinorSpec::new(s(&[1, 2, 4, 5]), ElementSet::EMPTY).unwrap();
    assert_eq!(m.minor_uniform_test(&spec).unwrap(), Some((4, 3)));
}

#[test]
fn brute_force_minor_search() {
    let m = example_matroid();
    let w = m.uniform_minor_bruteforce(4, 3).unwrap().unwrap();
    assert_eq!((w.restrict_to, w.contract_by), (s(&[1, 2, 4, 5]), ElementSet::EMPTY));
    assert!(m.uniform_minor_bruteforce(4, 2).unwrap().is_none());
    assert!(fano().uniform_minor_bruteforce(4, 2).unwrap().is_none());
    let u = Matroid::uniform(6, 3).unwrap();
    let w = u.uniform_minor_bruteforce(4, 2).unwrap().unwrap();
    assert_eq!(u.minor(&w.spec()).unwrap().uniform_test(), Some((4, 2)));
    let small = m.with_limits(Limits::default().with_max_n(5));
    assert!(matches!(small.uniform_minor_bruteforce(4, 2), Err(Error::ResourceLimit(_))));
}

#[test]
fn uniform_minor_arithmetic_matches_search() {
    for n in 0..=6 {
        for k in 0..=n {
            let u = Matroid::uniform(n, k).unwrap();
            for n2 in 0..=n {
                for k2 in 0..=n2 {
                    let found = u.uniform_minor_bruteforce(n2, k2).unwrap().is_some();
                    assert_eq!(found, uniform_has_uniform_minor(n, k, n2, k2), "U({n},{k}) ⊇ U({n2},{k2})");
                }
            }
        }
    }
}

#[test]
fn explicit_inputs_are_validated() {
    assert!(Matroid::from_rank_table(1, vec![0, 0]).is_ok());
    assert!(Matroid::from_rank_table(1, vec![1, 0]).is_err());
    assert!(Matroid::from_rank_table(2, vec![0, 1, 1, 3]).is_err());
    assert!(Matroid::from_rank_table(2, vec![0, 1, 1, 2]).is_ok());
    assert!(Matroid::from_rank_table(2, vec![0, 1]).is_err());
    // Submodularity fails: ρ({1}) + ρ({2}) < ρ({1,2}) + ρ(∅) is impossible
    // with unit steps, so use three elements.
    assert!(Matroid::from_rank_table(3, vec![0, 1, 1, 1, 1, 1, 2, 2]).is_err());
    // Dropping {3,4} from U(4,2) leaves a matroid where 3 and 4 are parallel.
    let mut parallel = u42_bases();
    parallel.retain(|&b| b != s(&[3, 4]));
    assert_eq!(Matroid::from_bases(4, parallel).unwrap().rank(s(&[3, 4])).unwrap(), 1);
    assert!(Matroid::from_bases(4, vec![s(&[1, 2]), s(&[3])]).is_err());
    assert!(Matroid::from_bases(4, vec![]).is_err());
    // {1,2} and {3,4} alone violate basis exchange.
    assert!(Matroid::from_bases(4, vec![s(&[1, 2]), s(&[3, 4])]).is_err());
}

#[test]
fn table_matches_linear_oracle() {
    let m = example_matroid();
    let table: Vec<usize> = (0u64..64).map(|b| m.r(ElementSet::from_bits(b))).collect();
    let t = Matroid::from_rank_table(6, table).unwrap();
    for x in m.ground().subsets() {
        assert_eq!(t.cl(x), m.cl(x));
        assert_eq!(t.cyclic_part(x), m.cyclic_part(x));
    }
}
