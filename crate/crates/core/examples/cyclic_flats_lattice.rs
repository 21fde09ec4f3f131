//! Enumerates the lattice of cyclic flats, prints the labelled Hasse
//! diagram and writes it as Graphviz to the path given on the command line.

use matcyc::catalog::example_matroid;
use matcyc::enumerate_cyclic_flats;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = example_matroid();
    let z = enumerate_cyclic_flats(&m)?;
    for node in z.nodes() {
        println!("{:<16} rank {} nullity {}", node.set.to_string(), node.rank, node.nullity);
    }
    for (edge, label) in z.label_edges() {
        println!("{} < {}  {:?}", z.node(edge.lower).set, z.node(edge.upper).set, label);
    }
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, z.to_dot())?,
        None => print!("{}", z.to_dot()),
    }
    Ok(())
}
