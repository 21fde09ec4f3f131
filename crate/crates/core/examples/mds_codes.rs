//! Vandermonde codes over GF(7) are MDS: their matroids are uniform and
//! d = n - k + 1.

use matcyc::{CodeAnalysis, FieldMatrix, Matroid};

fn main() -> matcyc::Result<()> {
    for (k, n) in [(2, 7), (3, 5), (4, 6)] {
        let points: Vec<u32> = (0..n).collect();
        let g = FieldMatrix::vandermonde(7, k, &points)?;
        let m = Matroid::linear(g);
        let analysis = CodeAnalysis::new(&m)?;
        println!(
            "[{n},{k}] mds={} d={} lattice={:?}",
            analysis.mds_check()?,
            analysis.global_distance()?,
            analysis.lattice().sets()
        );
    }
    Ok(())
}
