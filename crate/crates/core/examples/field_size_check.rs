//! Which small prime fields can still represent a matroid, judged by the
//! uniform minors each field excludes.

use matcyc::{FieldMatrix, Matroid, UniformDetector};

fn main() -> matcyc::Result<()> {
    let ternary = FieldMatrix::new(3, vec![vec![1, 0, 1, 1, 1], vec![0, 1, 1, 2, 0]])?;
    let matroids = [
        ("U(5,2)", Matroid::uniform(5, 2)?),
        ("U(7,3)", Matroid::uniform(7, 3)?),
        ("GF(3) matrix", Matroid::linear(ternary)),
    ];
    for (name, m) in &matroids {
        let detector = UniformDetector::new(m)?;
        for q in [2, 3, 5] {
            let check = detector.field_necessary_check(q)?;
            let verdict = match check.witnesses.first() {
                Some(w) => format!("excluded by {}", w.report_line()),
                None => "no excluded minor".to_string(),
            };
            println!("{name} over GF({q}): {verdict}");
        }
    }
    println!("{}", matcyc::uniform::FIELD_CHECK_CAVEAT);
    Ok(())
}
