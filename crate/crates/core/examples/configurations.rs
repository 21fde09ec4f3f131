//! Configurations: the lattice of cyclic flats up to isomorphism, with each
//! node labelled by size and rank. Relabelling the columns leaves it fixed.

use matcyc::catalog::{example_matroid, fano};
use matcyc::{enumerate_cyclic_flats, FieldMatrix, Matroid};

fn main() -> matcyc::Result<()> {
    let original = enumerate_cyclic_flats(&example_matroid())?.configuration()?;
    let relabelled = FieldMatrix::new(2, vec![vec![1, 1, 0, 1, 1, 0], vec![1, 1, 0, 1, 0, 1], vec![1, 1, 1, 0, 0, 0]])?;
    let relabelled = enumerate_cyclic_flats(&Matroid::linear(relabelled))?.configuration()?;
    println!("{original:?}");
    println!("same configuration after relabelling: {}", original == relabelled);
    println!("distance read off the configuration: {:?}", original.minimum_distance());
    let simplex = enumerate_cyclic_flats(&fano())?.configuration()?;
    println!("simplex code: {} nodes, d = {:?}", simplex.labels.len(), simplex.minimum_distance());
    Ok(())
}
