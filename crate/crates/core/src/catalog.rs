//! Small named matroids used throughout the documentation, tests and
//! runnable examples.

use crate::field::FieldMatrix;
use crate::matroid::Matroid;

/// The 3×6 binary generator matrix whose lattice of cyclic flats is
/// `∅ < {5,6} < {3,4,5,6} < E` and `∅ < {1,2,3} < E`.
pub fn example_matrix() -> FieldMatrix {
    FieldMatrix::new(
        2,
        vec![
            vec![1, 0, 1, 0, 1, 1],
            vec![0, 1, 1, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1],
        ],
    )
    .expect("valid matrix")
}

/// The matroid of [`example_matrix`], a binary (6,3,2) code.
pub fn example_matroid() -> Matroid {
    Matroid::linear(example_matrix())
}

/// The binary simplex code of length 7 (the Fano plane).
pub fn fano() -> Matroid {
    Matroid::linear(FieldMatrix::binary_simplex(3).expect("valid matrix"))
}
