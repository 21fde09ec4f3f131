use super::*;
use crate::catalog::{example_matroid, fano};
use crate::field::FieldMatrix;

fn s(labels: &[usize]) -> ElementSet {
    ElementSet::of(labels)
}

fn example() -> CodeAnalysis {
    CodeAnalysis::new(&example_matroid()).unwrap()
}

#[test]
fn nondegeneracy() {
    let a = example();
    assert!(a.is_nondegenerate(a.matroid().ground()).unwrap());
    assert!(!a.is_nondegenerate(s(&[1, 2, 4])).unwrap());
    assert!(a.is_nondegenerate(ElementSet::EMPTY).is_err());
    let zero_column = FieldMatrix::new(2, vec![vec![1, 1, 0], vec![0, 0, 0]]).unwrap();
    let b = CodeAnalysis::new(&Matroid::linear(zero_column)).unwrap();
    assert!(!b.is_nondegenerate(b.matroid().ground()).unwrap());
    assert!(matches!(b.global_distance(), Err(Error::DegenerateCode(_))));
    assert_eq!(b.code_distance().unwrap(), 2);
}

#[test]
fn distances() {
    let a = example();
    assert_eq!(a.global_distance().unwrap(), 2);
    assert_eq!(a.punctured_params(s(&[5, 6])).unwrap(), (1, 2));
    assert_eq!(a.punctured_params(a.matroid().ground()).unwrap(), (3, 2));
    assert_eq!(a.punctured_params(s(&[3, 4, 5])).unwrap(), (2, 2));
    assert!(a.punctured_params(s(&[1, 2])).is_err());
    assert_eq!(CodeAnalysis::new(&fano()).unwrap().global_distance().unwrap(), 4);
    for (n, k) in [(6, 3), (5, 1), (4, 3)] {
        let u = CodeAnalysis::new(&Matroid::uniform(n, k).unwrap()).unwrap();
        assert_eq!(u.global_distance().unwrap(), n - k + 1);
    }
}

#[test]
fn distance_routes_agree_on_the_example() {
    let a = example();
    let m = a.matroid();
    let g = m.as_linear().unwrap();
    for x in m.ground().subsets().filter(|x| !x.is_empty()) {
        if a.is_nondegenerate(x).unwrap() {
            let (_, d) = a.punctured_params(x).unwrap();
            assert_eq!(d, distance_by_hyperplanes(m, x).unwrap(), "{x}");
            assert_eq!(d, g.min_distance_bruteforce(x, 1 << 20).unwrap(), "{x}");
        }
    }
}

#[test]
fn s_values() {
    let a = example();
    assert_eq!(a.s_value(s(&[1, 2, 3])).unwrap(), 2);
    assert_eq!(a.s_value(s(&[5, 6])).unwrap(), 1);
    assert_eq!(a.s_value(a.matroid().ground()).unwrap(), 5);
    assert!(matches!(a.s_value(s(&[1, 2])), Err(Error::InvalidArgument(_))));
}

#[test]
fn localities() {
    let a = example();
    let l5 = a.locality_of_element(5, 2).unwrap();
    assert_eq!((l5.r, l5.repair_set), (1, s(&[5, 6])));
    let l1 = a.locality_of_element(1, 2).unwrap();
    assert_eq!((l1.r, l1.repair_set), (2, s(&[1, 2, 3])));
    let l4 = a.locality_of_element(4, 2).unwrap();
    assert_eq!((l4.r, l4.repair_set), (2, s(&[3, 4, 5])));
    assert!(matches!(a.locality_of_element(1, 3), Err(Error::NoLocality(_))));
    assert!(a.locality_of_element(1, 1).is_err());
    assert!(a.locality_of_element(9, 2).is_err());
    let u = CodeAnalysis::new(&Matroid::uniform(6, 3).unwrap()).unwrap();
    let l = u.locality_of_element(1, 2).unwrap();
    assert_eq!((l.r, l.repair_set), (3, s(&[1, 2, 3, 4])));
}

#[test]
fn lattice_search_matches_brute_force() {
    for m in [example_matroid(), fano(), Matroid::uniform(6, 3).unwrap()] {
        let a = CodeAnalysis::new(&m).unwrap();
        for delta in 2..=4 {
            for i in m.ground().iter() {
                let fast = a.locality_of_element(i, delta).ok();
                let slow = a.locality_of_element_bruteforce(i, delta).ok();
                assert_eq!(fast, slow, "element {i}, δ={delta}");
            }
        }
    }
}

#[test]
fn closure_can_raise_the_s_value() {
    // {3,4,5} is a repair set of size 3 for element 4, while its closure
    // {3,4,5,6} has s = 3: the search cannot stop at cyclic flats.
    let a = example();
    let m = a.matroid();
    assert_eq!(m.closure(s(&[3, 4, 5])).unwrap(), s(&[3, 4, 5, 6]));
    let (_, d) = a.punctured_params(s(&[3, 4, 5])).unwrap();
    assert_eq!(3 - d + 1, 2);
    assert_eq!(a.s_value(s(&[3, 4, 5, 6])).unwrap(), 3);
}

#[test]
fn lrc_reports() {
    let a = example();
    let pass = a.verify_lrc(2, 2).unwrap();
    assert!(pass.passes);
    assert_eq!((pass.n, pass.k, pass.d, pass.achieved_r), (6, 3, 2, Some(2)));
    assert!(pass.per_element.iter().all(|l| l.repair_set.contains(l.element)));
    let fail = a.verify_lrc(1, 2).unwrap();
    assert!(!fail.passes);
    assert_eq!(fail.failing, vec![1, 2, 3, 4]);
    assert!(a.verify_lrc(0, 2).is_err());
    let f = CodeAnalysis::new(&fano()).unwrap().verify_lrc(2, 2).unwrap();
    assert!(f.passes);
    assert!(f.per_element.iter().all(|l| l.repair_set.len() == 3));
    assert!(f.binary_structure.as_ref().unwrap().holds());
    assert!(a.verify_lrc(3, 2).unwrap().r_at_least_k);
}

#[test]
fn profile() {
    assert_eq!(example().locality_profile().unwrap(), vec![(2, 2)]);
    let f = CodeAnalysis::new(&fano()).unwrap().locality_profile().unwrap();
    assert_eq!(f, vec![(2, 2), (3, 4), (4, 4)]);
}

#[test]
fn binary_structure() {
    let f = CodeAnalysis::new(&fano()).unwrap().binary_structure_check(2, 2).unwrap();
    assert!(f.applicable && f.holds());
    assert_eq!(f.conditions.len(), 4);
    assert!(f.conditions[..3].iter().all(|c| c.applicable && c.holds));
    let g = example().binary_structure_check(2, 2).unwrap();
    assert!(!g.applicable);
    assert_eq!(g.reason.as_deref(), Some("theorem precondition d>2 not met"));
    let u = CodeAnalysis::new(&Matroid::uniform(4, 2).unwrap()).unwrap();
    assert!(matches!(u.binary_structure_check(2, 2), Err(Error::InapplicableTheorem(_))));
}

#[test]
fn mds() {
    let v = FieldMatrix::vandermonde(7, 3, &[0, 1, 2, 3, 4]).unwrap();
    assert!(CodeAnalysis::new(&Matroid::linear(v)).unwrap().mds_check().unwrap());
    assert!(!example().mds_check().unwrap());
    assert!(CodeAnalysis::new(&Matroid::uniform(6, 3).unwrap()).unwrap().mds_check().unwrap());
    assert!(!CodeAnalysis::new(&Matroid::uniform(3, 3).unwrap()).unwrap().mds_check().unwrap());
}
