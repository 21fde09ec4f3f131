//! The twelve acceptance criteria. Each prints one PASS/FAIL line with its
//! measured runtime; the test fails if any criterion fails or runs past its
//! time bound.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use matcyc::catalog::example_matroid;
use matcyc::lattice::{cyclic_flats_exhaustive, enumerate_cyclic_flats, minor_cyclic_flats_by, MinorFormula};
use matcyc::{CodeAnalysis, EdgeLabel, ElementSet, FieldMatrix, Matroid, MinorSpec, UniformDetector};

fn s(labels: &[usize]) -> ElementSet {
    ElementSet::of(labels)
}

fn all_subsets(m: &Matroid) -> impl Iterator<Item = ElementSet> {
    m.ground().subsets()
}

fn criterion_1() {
    let m = example_matroid();
    assert_eq!(m.rank(s(&[1, 2, 3])).unwrap(), 2);
    assert_eq!(m.rank(s(&[3, 4, 5])).unwrap(), 2);
    assert_eq!(m.rank(m.ground()).unwrap(), 3);
    assert_eq!(m.rank(ElementSet::EMPTY).unwrap(), 0);
}

fn criterion_2() {
    let m = example_matroid();
    assert_eq!(m.contract(s(&[1])).unwrap().rank(s(&[2, 3, 4])).unwrap(), 2);
    assert_eq!(m.restrict(s(&[2, 3, 4, 5])).unwrap().rank(s(&[2, 3, 4])).unwrap(), 3);
    assert_eq!(m.dual().rank(s(&[2, 3, 4])).unwrap(), 2);
}

fn criterion_3() {
    let m = example_matroid();
    let z = enumerate_cyclic_flats(&m).unwrap();
    let nodes: Vec<(ElementSet, usize)> = z.nodes().iter().map(|n| (n.set, n.rank)).collect();
    assert_eq!(
        nodes,
        vec![
            (ElementSet::EMPTY, 0),
            (s(&[5, 6]), 1),
            (s(&[1, 2, 3]), 2),
            (s(&[3, 4, 5, 6]), 2),
            (m.ground(), 3),
        ]
    );
    let mut edges: Vec<(ElementSet, ElementSet)> =
        z.edges().iter().map(|e| (z.node(e.lower).set, z.node(e.upper).set)).collect();
    edges.sort();
    let mut expected = vec![
        (ElementSet::EMPTY, s(&[5, 6])),
        (ElementSet::EMPTY, s(&[1, 2, 3])),
        (s(&[5, 6]), s(&[3, 4, 5, 6])),
        (s(&[1, 2, 3]), m.ground()),
        (s(&[3, 4, 5, 6]), m.ground()),
    ];
    expected.sort();
    assert_eq!(edges, expected);
}

fn criterion_4() {
    let m = example_matroid();
    let z = enumerate_cyclic_flats(&m).unwrap();
    let label = |a: ElementSet, b: ElementSet| z.edge_between(a, b).unwrap().label();
    assert_eq!(label(ElementSet::EMPTY, s(&[1, 2, 3])), EdgeLabel::Rank { gap: 2 });
    assert_eq!(label(s(&[1, 2, 3]), m.ground()), EdgeLabel::Nullity { gap: 2 });
    assert_eq!(label(ElementSet::EMPTY, s(&[5, 6])), EdgeLabel::Elementary);
    assert_eq!(label(s(&[5, 6]), s(&[3, 4, 5, 6])), EdgeLabel::Elementary);
    assert_eq!(label(s(&[3, 4, 5, 6]), m.ground()), EdgeLabel::Elementary);
}

fn criterion_5() {
    let m = example_matroid();
    let a = CodeAnalysis::new(&m).unwrap();
    assert_eq!(a.global_distance().unwrap(), 2);
    let report = a.verify_lrc(2, 2).unwrap();
    assert_eq!((report.n, report.k, report.d), (6, 3, 2));
    assert!(report.passes);
    assert_eq!(report.achieved_r, Some(2));
    for i in 1..=6 {
        let fast = a.locality_of_element(i, 2).unwrap();
        let slow = a.locality_of_element_bruteforce(i, 2).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast.r, if i >= 5 { 1 } else { 2 }, "element {i}");
    }
}

fn criterion_6() {
    let m = example_matroid();
    let d = UniformDetector::new(&m).unwrap();
    let w = d.restriction_uniform(s(&[1, 2, 3])).unwrap().unwrap();
    assert_eq!(w.params, (3, 2));
    let w = d.restriction_uniform(s(&[1, 2, 4, 5])).unwrap().unwrap();
    assert_eq!(w.params, (4, 3));
    let verdict = d.tutte_binary_test().unwrap();
    assert!(verdict.binary && verdict.witness.is_none());
    assert!(m.uniform_minor_bruteforce(4, 2).unwrap().is_none());
}

fn criterion_7() {
    let mut checked = 0usize;
    let mut uniform = 0usize;
    for m in common::matroids(7007, 300, 3..=8) {
        let d = UniformDetector::new(&m).unwrap();
        let ground = m.ground();
        let truth = |y: ElementSet, x: ElementSet| m.minor_uniform_test(&MinorSpec::new(y, x).unwrap()).unwrap();
        for y in all_subsets(&m) {
            let got = d.restriction_uniform(y).unwrap().map(|w| w.params);
            assert_eq!(got, truth(y, ElementSet::EMPTY), "restriction to {y}");
            let got = d.contraction_uniform(y).unwrap().map(|w| w.params);
            assert_eq!(got, truth(ground, y), "contraction of {y}");
            checked += 2;
        }
        for y in all_subsets(&m) {
            for x in y.subsets() {
                let got = d.combined_uniform(x, y).unwrap().map(|w| w.params);
                assert_eq!(got, truth(y, x), "minor |{y}/{x}");
                checked += 1;
                uniform += usize::from(got.is_some());
            }
        }
    }
    // Both verdicts have to be well represented.
    assert!(uniform > checked / 10 && uniform < checked - checked / 10, "{uniform} of {checked}");
}

fn criterion_8() {
    let mut rng = common::rng(8);
    let matroids = common::matroids(8008, 500, 3..=8);
    for (i, m) in matroids.iter().enumerate() {
        let ground = m.ground();
        let y = if i % 3 == 1 { ground } else { common::random_subset(&mut rng, ground) };
        let x = if i % 3 == 0 { ElementSet::EMPTY } else { common::random_subset(&mut rng, y) };
        let spec = MinorSpec::new(y, x).unwrap();
        let z = enumerate_cyclic_flats(m).unwrap();
        let direct = cyclic_flats_exhaustive(&m.minor(&spec).unwrap()).unwrap();
        let mut applied = 0;
        for formula in [
            MinorFormula::Restriction,
            MinorFormula::Contraction,
            MinorFormula::Combined,
            MinorFormula::CombinedDual,
            MinorFormula::Interval,
        ] {
            if formula.applies(m, &spec) {
                let derived = minor_cyclic_flats_by(m, &z, &spec, formula).unwrap();
                assert_eq!(derived, direct, "{formula:?} on |{y}/{x}");
                applied += 1;
            }
        }
        assert!(applied >= 2);
    }
}

fn criterion_9() {
    let mut restrictions = 0usize;
    for g in common::corpus(9009, 200, 3..=9) {
        let m = Matroid::linear(g.clone());
        let a = CodeAnalysis::new(&m).unwrap();
        for x in all_subsets(&m).filter(|x| !x.is_empty()) {
            if !a.is_nondegenerate(x).unwrap() {
                continue;
            }
            let (k, d) = a.punctured_params(x).unwrap();
            assert_eq!(k, m.rank(x).unwrap());
            assert_eq!(d, g.min_distance_bruteforce(x, 1 << 20).unwrap(), "d_{x}");
            restrictions += 1;
        }
        if a.is_nondegenerate(m.ground()).unwrap() {
            assert_eq!(a.global_distance().unwrap(), g.min_distance_bruteforce(m.ground(), 1 << 20).unwrap());
        }
    }
    assert!(restrictions > 1000);
}

fn criterion_10() {
    let g = FieldMatrix::binary_simplex(3).unwrap();
    assert_eq!(g.cols(), 7);
    let m = Matroid::linear(g.clone());
    let a = CodeAnalysis::new(&m).unwrap();
    assert_eq!(a.global_distance().unwrap(), 4);
    assert_eq!(g.min_distance_bruteforce(m.ground(), 1 << 10).unwrap(), 4);
    let z = a.lattice();
    assert_eq!(z, &cyclic_flats_exhaustive(&m).unwrap());
    assert_eq!(z.len(), 9);
    assert_eq!(z.bottom().set, ElementSet::EMPTY);
    assert_eq!(z.top().set, m.ground());
    assert!(z.nodes()[1..8].iter().all(|n| n.set.len() == 3 && n.rank == 2));
    let top = z.len() - 1;
    assert_eq!(z.lower_covers(top).count(), 7);
    assert!(z.lower_covers(top).all(|e| e.label() == EdgeLabel::Nullity { gap: 3 }));
    assert!(a.verify_lrc(2, 2).unwrap().passes);
    let b = a.binary_structure_check(2, 2).unwrap();
    assert!(b.applicable);
    assert!(b.conditions[..3].iter().all(|c| c.applicable && c.holds));
}

fn criterion_11() {
    let mut checks = 0usize;
    for m in common::matroids(1111, 300, 3..=8) {
        let dual = m.dual();
        let double = dual.dual();
        for y in all_subsets(&m) {
            let c = m.cyc(y).unwrap();
            assert_eq!(m.closure(c).unwrap() & y, c, "cl(cyc(Y)) ∩ Y at {y}");
            assert_eq!(double.rank(y).unwrap(), m.rank(y).unwrap());
            checks += 1;
        }
        let mut complements: Vec<ElementSet> = enumerate_cyclic_flats(&m)
            .unwrap()
            .sets()
            .into_iter()
            .map(|z| m.ground() - z)
            .collect();
        let mut dual_sets = enumerate_cyclic_flats(&dual).unwrap().sets();
        complements.sort();
        dual_sets.sort();
        assert_eq!(complements, dual_sets);
    }
    assert!(checks > 0);
}

fn criterion_12() {
    for (k, n) in [(3usize, 5usize), (4, 6)] {
        let points: Vec<u32> = (0..n as u32).collect();
        let g = FieldMatrix::vandermonde(7, k, &points).unwrap();
        let m = Matroid::linear(g.clone());
        let a = CodeAnalysis::new(&m).unwrap();
        assert!(a.mds_check().unwrap());
        assert_eq!(a.global_distance().unwrap(), n - k + 1);
        assert_eq!(g.min_distance_bruteforce(m.ground(), 1 << 20).unwrap(), n - k + 1);
    }
}

fn main() {
    let ms = Duration::from_millis;
    let criteria: [(&str, fn(), Duration); 12] = [
        ("1 example ranks", criterion_1, ms(1)),
        ("2 minor and dual ranks", criterion_2, ms(1)),
        ("3 lattice of the example", criterion_3, ms(10)),
        ("4 edge labels of the example", criterion_4, ms(10)),
        ("5 code parameters", criterion_5, ms(100)),
        ("6 uniform-minor examples", criterion_6, ms(1000)),
        ("7 criterion/oracle equivalence", criterion_7, ms(120_000)),
        ("8 minor formulas vs enumeration", criterion_8, ms(120_000)),
        ("9 distance formula vs brute force", criterion_9, ms(120_000)),
        ("10 simplex code structure", criterion_10, ms(1000)),
        ("11 operator and duality identities", criterion_11, ms(60_000)),
        ("12 MDS Vandermonde codes", criterion_12, ms(5000)),
    ];
    let mut failures = Vec::new();
    for (name, check, bound) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= bound) {
            (Ok(()), true) => "PASS",
            (Ok(()), false) => "FAIL (too slow)",
            (Err(_), _) => "FAIL",
        };
        println!("{verdict} criterion {name}: {elapsed:?} (bound {bound:?})");
        if verdict != "PASS" {
            failures.push(name);
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures.len(), criteria.len());
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
