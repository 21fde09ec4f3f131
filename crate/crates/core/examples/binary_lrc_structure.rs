//! Lattice conditions of binary LRCs on the simplex code of length 7.

use matcyc::{CodeAnalysis, FieldMatrix, Matroid};

fn main() -> matcyc::Result<()> {
    let m = Matroid::linear(FieldMatrix::binary_simplex(3)?);
    let analysis = CodeAnalysis::new(&m)?;
    println!("d = {}", analysis.global_distance()?);
    for delta in [2, 3] {
        let r = (1..=m.size())
            .find(|&r| analysis.verify_lrc(r, delta).is_ok_and(|rep| rep.passes))
            .expect("r = n always works when delta <= d");
        print!("{}", analysis.binary_structure_check(r, delta)?.render());
    }
    Ok(())
}
