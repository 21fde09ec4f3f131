//! Configurations: the isomorphism type of `Z(M)` with each node labelled by
//! its size and rank, in a canonical form that compares equal exactly for
//! isomorphic labelled lattices.

use serde::Serialize;

use super::CyclicFlatLattice;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_NODES: usize = 24;
const MAX_SEARCH_LEAVES: usize = 200_000;

/// Canonical form of a labelled Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    /// `(|Z|, ρ(Z))` per node, in canonical order.
    pub labels: Vec<(usize, usize)>,
    /// Covering edges `(lower, upper)` between canonical positions, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Configuration {
    /// Minimum distance of a non-degenerate code with this configuration,
    /// `η(1_Z) + 1 − max η(Z)` over the other nodes. `None` when the bottom
    /// node is nonempty or the lattice has a single node.
    pub fn minimum_distance(&self) -> Option<usize> {
        let has_upper = |i: usize| self.edges.iter().any(|&(lo, _)| lo == i);
        let has_lower = |i: usize| self.edges.iter().any(|&(_, hi)| hi == i);
        let nullity = |i: usize| self.labels[i].0 - self.labels[i].1;
        let top = (0..self.labels.len()).find(|&i| !has_upper(i))?;
        let bottom = (0..self.labels.len()).find(|&i| !has_lower(i))?;
        if self.labels[bottom].0 != 0 || top == bottom {
            return None;
        }
        let below = (0..self.labels.len()).filter(|&i| i != top).map(nullity).max()?;
        Some(nullity(top) + 1 - below)
    }
}

struct Graph {
    labels: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl CyclicFlatLattice {
    pub fn configuration(&self) -> Result<Configuration> {
        self.configuration_capped(DEFAULT_MAX_NODES)
    }

    /// Canonical configuration by colour refinement and individualisation,
    /// keeping the lexicographically smallest encoding over all leaves.
    pub fn configuration_capped(&self, max_nodes: usize) -> Result<Configuration> {
        let n = self.len();
        if n > max_nodes {
            return Err(Error::ResourceLimit(format!(
                "configuration canonicalisation is limited to {max_nodes} nodes, lattice has {n}"
            )));
        }
        let mut graph = Graph {
            labels: self.nodes.iter().map(|z| (z.set.len(), z.rank)).collect(),
            up: vec![Vec::new(); n],
            down: vec![Vec::new(); n],
        };
        for e in &self.edges {
            graph.up[e.lower].push(e.upper);
            graph.down[e.upper].push(e.lower);
        }
        for adj in graph.up.iter_mut().chain(graph.down.iter_mut()) {
            adj.sort_unstable();
        }
        let mut distinct = graph.labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colours = graph
            .labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("present"))
            .collect();
        let mut search = Search {
            graph: &graph,
            best: None,
            leaves: 0,
        };
        search.descend(refine(&graph, colours))?;
        Ok(search.best.expect("at least one leaf"))
    }
}

/// Renumbers colours densely by their sorted signatures.
fn rerank<T: Ord + Clone>(signatures: &[T]) -> Vec<usize> {
    let mut sorted = signatures.to_vec();
    sorted.sort();
    sorted.dedup();
    signatures
        .iter()
        .map(|s| sorted.binary_search(s).expect("present"))
        .collect()
}

fn class_count(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |m| m + 1)
}

/// Equitable refinement: split colour classes by the multisets of colours of
/// upper and lower covers until stable.
fn refine(graph: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    loop {
        let signatures: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colours.len())
            .map(|v| {
                let mut up: Vec<usize> = graph.up[v].iter().map(|&u| colours[u]).collect();
                let mut down: Vec<usize> = graph.down[v].iter().map(|&u| colours[u]).collect();
                up.sort_unstable();
                down.sort_unstable();
                (colours[v], up, down)
            })
            .collect();
        let next = rerank(&signatures);
        if class_count(&next) == class_count(&colours) {
            return next;
        }
        colours = next;
    }
}

struct Search<'a> {
    graph: &'a Graph,
    best: Option<Configuration>,
    leaves: usize,
}

impl Search<'_> {
    fn descend(&mut self, colours: Vec<usize>) -> Result<()> {
        let n = colours.len();
        if class_count(&colours) == n {
            self.leaves += 1;
            if self.leaves > MAX_SEARCH_LEAVES {
                return Err(Error::ResourceLimit("configuration search exploded".into()));
            }
            let candidate = self.encode(&colours);
            if self.best.as_ref().is_none_or(|b| candidate < *b) {
                self.best = Some(candidate);
            }
            return Ok(());
        }
        let target = (0..class_count(&colours))
            .find(|&c| colours.iter().filter(|&&x| x == c).count() > 1)
            .expect("a non-singleton class");
        let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
        // Interchangeable nodes (same label, same covers) lead to identical
        // leaves; try one per twin class.
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            let g = self.graph;
            if tried.iter().any(|&u| g.up[u] == g.up[v] && g.down[u] == g.down[v]) {
                continue;
            }
            tried.push(v);
            let split: Vec<(usize, usize)> = (0..n)
                .map(|u| (colours[u], usize::from(colours[u] == target && u != v)))
                .collect();
            self.descend(refine(self.graph, rerank(&split)))?;
        }
        Ok(())
    }

    fn encode(&self, colours: &[usize]) -> Configuration {
        let mut labels = vec![(0, 0); colours.len()];
        for (v, &c) in colours.iter().enumerate() {
            labels[c] = self.graph.labels[v];
        }
        let mut edges: Vec<(usize, usize)> = (0..colours.len())
            .flat_map(|v| self.graph.up[v].iter().map(move |&u| (colours[v], colours[u])))
            .collect();
        edges.sort_unstable();
        Configuration { labels, edges }
    }
}
