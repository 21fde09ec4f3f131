use std::fmt::Write;

use super::CyclicFlatLattice;

impl CyclicFlatLattice {
    /// Graphviz rendering: one node per cyclic flat labelled with its set,
    /// rank and nullity, edges directed from bottom to top and labelled with
    /// the rank or nullity jump (an empty label when elementary).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cyclic_flats {\n  rankdir=BT;\n  node [shape=ellipse];\n");
        for (i, z) in self.nodes.iter().enumerate() {
            writeln!(
                out,
                "  n{i} [label=\"{}\\nρ={} η={}\"];",
                z.set, z.rank, z.nullity
            )
            .expect("write to string");
        }
        for e in &self.edges {
            writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.lower, e.upper, e.label())
                .expect("write to string");
        }
        out.push_str("}\n");
        out
    }
}
