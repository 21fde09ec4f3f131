//! Uniform minors found from the lattice, confirmed by exhaustive search.

use matcyc::catalog::example_matroid;
use matcyc::{ElementSet, Matroid, UniformDetector};

fn main() -> matcyc::Result<()> {
    let m = example_matroid();
    let detector = UniformDetector::new(&m)?;
    for y in [ElementSet::of(&[1, 2, 3]), ElementSet::of(&[1, 2, 4, 5]), ElementSet::of(&[1, 2, 3, 4])] {
        match detector.restriction_uniform(y)? {
            Some(w) => println!("{}", w.report_line()),
            None => println!("M|{y} is not uniform"),
        }
    }
    if let Some(w) = detector.combined_uniform(ElementSet::of(&[1]), ElementSet::of(&[1, 2, 4, 5]))? {
        println!("{}", w.report_line());
    }
    let verdict = detector.tutte_binary_test()?;
    println!("binary: {}", verdict.binary);

    // Every covering edge of U(6,3) carries large rank and nullity jumps.
    let u = Matroid::uniform(6, 3)?;
    for v in UniformDetector::new(&u)?.hasse_violations(4, 2)? {
        println!("{}", v.witness.report_line());
    }
    println!("brute force: {:?}", u.uniform_minor_bruteforce(4, 2)?.map(|w| w.report_line()));
    Ok(())
}
