//! The lattice of cyclic flats `Z(M)`: enumeration, Hasse diagram with
//! rank/nullity edge labels, and cyclic flats of minors computed from `Z(M)`.

mod configuration;
mod dot;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MinorSpec};
use crate::set::ElementSet;

pub use configuration::Configuration;

/// A node of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicFlat {
    pub set: ElementSet,
    pub rank: usize,
    pub nullity: usize,
}

/// A covering relation `lower ⋖ upper`, by node index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoveringEdge {
    pub lower: usize,
    pub upper: usize,
    pub rank_gap: usize,
    pub nullity_gap: usize,
}

impl CoveringEdge {
    pub fn label(&self) -> EdgeLabel {
        EdgeLabel::classify(self.rank_gap, self.nullity_gap)
    }
}

/// Classification of a covering edge by its rank and nullity increments.
///
/// In a binary matroid every edge is a rank, nullity or elementary edge;
/// `Mixed` (both increments above one) only occurs in matroids with a
/// `U(4,2)` minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeLabel {
    Rank { gap: usize },
    Nullity { gap: usize },
    Elementary,
    Mixed { rank_gap: usize, nullity_gap: usize },
}

impl EdgeLabel {
    pub fn classify(rank_gap: usize, nullity_gap: usize) -> Self {
        match (rank_gap, nullity_gap) {
            (1, 1) => EdgeLabel::Elementary,
            (l, 1) if l > 1 => EdgeLabel::Rank { gap: l },
            (1, l) if l > 1 => EdgeLabel::Nullity { gap: l },
            (rank_gap, nullity_gap) => EdgeLabel::Mixed {
                rank_gap,
                nullity_gap,
            },
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Rank { gap } => write!(f, "ρ={gap}"),
            EdgeLabel::Nullity { gap } => write!(f, "η={gap}"),
            EdgeLabel::Elementary => Ok(()),
            EdgeLabel::Mixed {
                rank_gap,
                nullity_gap,
            } => write!(f, "ρ={rank_gap},η={nullity_gap}"),
        }
    }
}

/// `Z(M)` with ranks and its Hasse diagram.
///
/// Nodes are ordered by rank, then size, then lexicographically, so the
/// bottom element comes first and the top element last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicFlatLattice {
    ground: ElementSet,
    nodes: Vec<CyclicFlat>,
    edges: Vec<CoveringEdge>,
}

impl CyclicFlatLattice {
    /// Builds the lattice from cyclic flats and their ranks; duplicates are
    /// dropped and covering relations computed by inclusion.
    pub fn from_flats(ground: ElementSet, flats: impl IntoIterator<Item = (ElementSet, usize)>) -> Self {
        let mut nodes: Vec<CyclicFlat> = flats
            .into_iter()
            .map(|(set, rank)| CyclicFlat {
                set,
                rank,
                nullity: set.len() - rank,
            })
            .collect();
        nodes.sort_by_key(|n| (n.rank, n.set.len(), n.set));
        nodes.dedup_by_key(|n| n.set);
        let mut edges = Vec::new();
        for (i, lo) in nodes.iter().enumerate() {
            for (j, hi) in nodes.iter().enumerate() {
                if !lo.set.is_proper_subset(hi.set) {
                    continue;
                }
                let between = nodes
                    .iter()
                    .any(|z| lo.set.is_proper_subset(z.set) && z.set.is_proper_subset(hi.set));
                if !between {
                    edges.push(CoveringEdge {
                        lower: i,
                        upper: j,
                        rank_gap: hi.rank - lo.rank,
                        nullity_gap: hi.nullity - lo.nullity,
                    });
                }
            }
        }
        CyclicFlatLattice { ground, nodes, edges }
    }

    /// Ground set of the matroid the lattice belongs to.
    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn nodes(&self) -> &[CyclicFlat] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CoveringEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn sets(&self) -> Vec<ElementSet> {
        self.nodes.iter().map(|n| n.set).collect()
    }

    /// `0_Z`, the smallest cyclic flat.
    pub fn bottom(&self) -> &CyclicFlat {
        &self.nodes[0]
    }

    /// `1_Z`, the largest cyclic flat.
    pub fn top(&self) -> &CyclicFlat {
        self.nodes.last().expect("a lattice of cyclic flats is nonempty")
    }

    pub fn index_of(&self, set: ElementSet) -> Option<usize> {
        self.nodes.iter().position(|n| n.set == set)
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.index_of(set).is_some()
    }

    pub fn node(&self, index: usize) -> &CyclicFlat {
        &self.nodes[index]
    }

    /// The covering edge `lower ⋖ upper`, if these sets form one.
    pub fn edge_between(&self, lower: ElementSet, upper: ElementSet) -> Option<&CoveringEdge> {
        let (lo, hi) = (self.index_of(lower)?, self.index_of(upper)?);
        self.edges.iter().find(|e| e.lower == lo && e.upper == hi)
    }

    /// Edges `Y ⋖ node`.
    pub fn lower_covers(&self, node: usize) -> impl Iterator<Item = &CoveringEdge> {
        self.edges.iter().filter(move |e| e.upper == node)
    }

    /// Edges `node ⋖ Y`.
    pub fn upper_covers(&self, node: usize) -> impl Iterator<Item = &CoveringEdge> {
        self.edges.iter().filter(move |e| e.lower == node)
    }

    /// Every covering edge with its classification.
    pub fn label_edges(&self) -> Vec<(CoveringEdge, EdgeLabel)> {
        self.edges.iter().map(|e| (*e, e.label())).collect()
    }

    /// Least upper bound of two nodes, read off the inclusion order.
    pub fn join_in_order(&self, a: usize, b: usize) -> Option<usize> {
        let (sa, sb) = (self.nodes[a].set, self.nodes[b].set);
        let uppers: Vec<usize> = (0..self.len())
            .filter(|&i| sa.is_subset(self.nodes[i].set) && sb.is_subset(self.nodes[i].set))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u| uppers.iter().all(|&v| self.nodes[u].set.is_subset(self.nodes[v].set)))
    }

    /// Greatest lower bound of two nodes, read off the inclusion order.
    pub fn meet_in_order(&self, a: usize, b: usize) -> Option<usize> {
        let (sa, sb) = (self.nodes[a].set, self.nodes[b].set);
        let lowers: Vec<usize> = (0..self.len())
            .filter(|&i| self.nodes[i].set.is_subset(sa) && self.nodes[i].set.is_subset(sb))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&u| lowers.iter().all(|&v| self.nodes[v].set.is_subset(self.nodes[u].set)))
    }

    /// Cyclic flats strictly below the given one.
    pub fn strictly_below(&self, set: ElementSet) -> impl Iterator<Item = &CyclicFlat> {
        self.nodes.iter().filter(move |n| n.set.is_proper_subset(set))
    }
}

/// Join in `Z(M)`: `cl(X ∪ Y)`.
pub fn join(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    m.closure(a | b)
}

/// Meet in `Z(M)`: `cyc(X ∩ Y)`.
pub fn meet(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    m.cyc(a & b)
}

fn enumeration_budget(m: &Matroid) -> usize {
    let limits = m.limits();
    match m.as_linear() {
        Some(g) if g.q() == 2 => limits.max_enumeration_n_binary,
        _ => limits.max_enumeration_n,
    }
}

/// All flats, generated upwards from `cl(∅)` by closing `F ∪ {e}`. Falls
/// back to a scan of all subsets once the flat count passes `2^n / 4`.
pub fn enumerate_flats(m: &Matroid) -> Result<Vec<ElementSet>> {
    let n = m.size();
    let budget = enumeration_budget(m);
    if n > budget {
        return Err(Error::ResourceLimit(format!(
            "flat enumeration is limited to {budget} elements, matroid has {n}"
        )));
    }
    let threshold = (1usize << n) / 4;
    let ground = m.ground();
    let bottom = m.cl(ElementSet::EMPTY);
    let mut seen: HashSet<ElementSet> = HashSet::from([bottom]);
    let mut frontier = vec![bottom];
    let mut overflow = false;
    'bfs: while let Some(f) = frontier.pop() {
        let mut rest = ground - f;
        while let Some(e) = rest.min_label() {
            let g = m.cl(f.with(e));
            rest = rest - g;
            if seen.insert(g) {
                if seen.len() > threshold.max(1) {
                    overflow = true;
                    break 'bfs;
                }
                frontier.push(g);
            }
        }
    }
    let mut flats: Vec<ElementSet> = if overflow {
        ground.subsets().filter(|&x| m.flat(x)).collect()
    } else {
        seen.into_iter().collect()
    };
    flats.sort_by_key(|f| (m.r(*f), f.len(), *f));
    Ok(flats)
}

/// `Z(M)` with its Hasse diagram.
pub fn enumerate_cyclic_flats(m: &Matroid) -> Result<CyclicFlatLattice> {
    let flats = enumerate_flats(m)?;
    Ok(CyclicFlatLattice::from_flats(
        m.ground(),
        flats.into_iter().filter(|&f| m.cyclic(f)).map(|f| (f, m.r(f))),
    ))
}

/// `Z(M)` by testing every subset; the reference for
/// [`enumerate_cyclic_flats`].
pub fn cyclic_flats_exhaustive(m: &Matroid) -> Result<CyclicFlatLattice> {
    let n = m.size();
    let budget = enumeration_budget(m);
    if n > budget {
        return Err(Error::ResourceLimit(format!(
            "exhaustive scan is limited to {budget} elements, matroid has {n}"
        )));
    }
    Ok(CyclicFlatLattice::from_flats(
        m.ground(),
        m.ground()
            .subsets()
            .filter(|&x| m.cyclic_flat(x))
            .map(|x| (x, m.r(x))),
    ))
}

/// Which formula derives `Z(M|Y/X)` from `Z(M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorFormula {
    /// `Z(M|Y) = { cyc(Z ∩ Y) }`; needs `X = ∅`.
    Restriction,
    /// `Z(M/X) = { cl(X ∪ Z) − X }`; needs `Y = E`.
    Contraction,
    /// `Z(M|Y/X) = { cl(X ∪ cyc(Z ∩ Y)) ∩ (Y − X) }`.
    Combined,
    /// `Z(M|Y/X) = { cyc(cl(X ∪ Z) ∩ Y) − X }`.
    CombinedDual,
    /// `Z(M|Y/X) = { Z − X : X ⊆ Z ⊆ Y }`; needs `X` cyclic and `Y` a flat.
    Interval,
}

impl MinorFormula {
    pub fn applies(self, m: &Matroid, spec: &MinorSpec) -> bool {
        match self {
            MinorFormula::Restriction => spec.contract_by().is_empty(),
            MinorFormula::Contraction => spec.restrict_to() == m.ground(),
            MinorFormula::Combined | MinorFormula::CombinedDual => true,
            MinorFormula::Interval => m.cyclic(spec.contract_by()) && m.flat(spec.restrict_to()),
        }
    }
}

/// `Z(M|Y/X)` from `Z(M)` by the named formula, with ranks in the minor.
pub fn minor_cyclic_flats_by(
    m: &Matroid,
    lattice: &CyclicFlatLattice,
    spec: &MinorSpec,
    formula: MinorFormula,
) -> Result<CyclicFlatLattice> {
    m.check(spec.restrict_to())?;
    if !formula.applies(m, spec) {
        return Err(Error::InvalidMinorSpec(format!(
            "formula {formula:?} does not apply to |{}/{}",
            spec.restrict_to(),
            spec.contract_by()
        )));
    }
    let (y, x) = (spec.restrict_to(), spec.contract_by());
    let sets: Vec<ElementSet> = match formula {
        MinorFormula::Restriction => lattice.nodes().iter().map(|z| m.cyclic_part(z.set & y)).collect(),
        MinorFormula::Contraction => lattice.nodes().iter().map(|z| m.cl(x | z.set) - x).collect(),
        MinorFormula::Combined => lattice
            .nodes()
            .iter()
            .map(|z| m.cl(x | m.cyclic_part(z.set & y)) & (y - x))
            .collect(),
        MinorFormula::CombinedDual => lattice
            .nodes()
            .iter()
            .map(|z| m.cyclic_part(m.cl(x | z.set) & y) - x)
            .collect(),
        MinorFormula::Interval => lattice
            .nodes()
            .iter()
            .filter(|z| x.is_subset(z.set) && z.set.is_subset(y))
            .map(|z| z.set - x)
            .collect(),
    };
    let base = m.r(x);
    Ok(CyclicFlatLattice::from_flats(
        spec.ground(),
        sets.into_iter().map(|s| (s, m.r(s | x) - base)),
    ))
}

/// `Z(M|Y/X)` from `Z(M)`, choosing the interval shortcut when `X` is cyclic
/// and `Y` is a flat, and otherwise the restriction, contraction or combined
/// formula as the shape of the minor allows.
pub fn minor_cyclic_flats_from(
    m: &Matroid,
    lattice: &CyclicFlatLattice,
    spec: &MinorSpec,
) -> Result<CyclicFlatLattice> {
    let formula = [
        MinorFormula::Interval,
        MinorFormula::Restriction,
        MinorFormula::Contraction,
    ]
    .into_iter()
    .find(|f| f.applies(m, spec))
    .unwrap_or(MinorFormula::Combined);
    minor_cyclic_flats_by(m, lattice, spec, formula)
}

/// `Z(M|Y/X)`, enumerating `Z(M)` first.
pub fn minor_cyclic_flats(m: &Matroid, spec: &MinorSpec) -> Result<CyclicFlatLattice> {
    m.check(spec.restrict_to())?;
    let lattice = enumerate_cyclic_flats(m)?;
    minor_cyclic_flats_from(m, &lattice, spec)
}
