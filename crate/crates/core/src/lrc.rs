//! Storage-code parameters read off the lattice of cyclic flats: global and
//! punctured minimum distance, `(r, δ)`-locality with repair sets, the
//! structure conditions binary LRCs with `d > 2` must satisfy, and MDS
//! detection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_cyclic_flats, minor_cyclic_flats_by, CyclicFlatLattice, EdgeLabel, MinorFormula};
use crate::matroid::{Matroid, MinorSpec};
use crate::set::ElementSet;
use crate::uniform::UniformDetector;

/// Ground-set cap for the brute-force locality search.
pub const BRUTEFORCE_LOCALITY_MAX_N: usize = 12;

/// The best repair set found for one coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Locality {
    pub element: usize,
    /// Least `r` with `|R| ≤ r + δ − 1` and `d_R ≥ δ`.
    pub r: usize,
    pub repair_set: ElementSet,
    /// `d_R`.
    pub distance: usize,
}

/// Outcome of checking `(r, δ)`-locality of every coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrcReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// The requested locality.
    pub r: usize,
    pub delta: usize,
    pub nondegenerate: bool,
    /// Best locality of each coordinate that has any repair set.
    pub per_element: Vec<Locality>,
    /// `max_i r_i`, when every coordinate has a repair set.
    pub achieved_r: Option<usize>,
    /// Coordinates whose best locality exceeds `r` or that have none.
    pub failing: Vec<usize>,
    pub passes: bool,
    /// Set when the requested `r` is not below `k`.
    pub r_at_least_k: bool,
    pub binary_structure: Option<BinaryStructure>,
}

/// One condition of the binary LRC structure check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub condition: u8,
    pub applicable: bool,
    pub holds: bool,
    pub counterexamples: Vec<String>,
    pub note: Option<String>,
}

/// Lattice conditions satisfied by every binary `(n,k,d,r,δ)`-LRC with `d > 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryStructure {
    pub d: usize,
    pub r: usize,
    pub delta: usize,
    pub applicable: bool,
    pub reason: Option<String>,
    pub conditions: Vec<ConditionVerdict>,
}

impl BinaryStructure {
    /// True when every applicable condition holds.
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|c| !c.applicable || c.holds)
    }
}

impl BinaryStructure {
    /// The plain-text verdict block.
    pub fn render(&self) -> String {
        if !self.applicable {
            return format!("binary structure: {}\n", self.reason.as_deref().unwrap_or("not applicable"));
        }
        let mut out = format!(
            "binary structure (d={}, r={}, delta={}): {}\n",
            self.d,
            self.r,
            self.delta,
            if self.holds() { "holds" } else { "violated" }
        );
        for c in &self.conditions {
            let verdict = match (c.applicable, c.holds) {
                (false, _) => "not applicable".to_string(),
                (true, true) => "holds".to_string(),
                (true, false) => format!("fails at {}", c.counterexamples.join("; ")),
            };
            out.push_str(&format!("  condition {}: {verdict}", c.condition));
            if let Some(note) = c.note.as_deref().filter(|_| c.applicable) {
                out.push_str(&format!(" ({note})"));
            }
            out.push('\n');
        }
        out
    }
}

impl LrcReport {
    /// Plain-text report: parameters, one line per coordinate, then the
    /// binary structure block when present.
    pub fn render(&self) -> String {
        let mut out = format!("(n,k,d) = ({},{},{})\n", self.n, self.k, self.d);
        out.push_str(&format!(
            "(r,delta) = ({},{}): {}\n",
            self.r,
            self.delta,
            if self.passes { "pass" } else { "fail" }
        ));
        if !self.nondegenerate {
            out.push_str("note: the code is degenerate\n");
        }
        for i in 1..=self.n {
            match self.per_element.iter().find(|l| l.element == i) {
                Some(l) => out.push_str(&format!("{i}: r={} R={}\n", l.r, l.repair_set)),
                None => out.push_str(&format!("{i}: no repair set\n")),
            }
        }
        if !self.failing.is_empty() {
            let failing: Vec<String> = self.failing.iter().map(usize::to_string).collect();
            out.push_str(&format!("failing: {}\n", failing.join(",")));
        }
        if self.r_at_least_k {
            out.push_str("note: r >= k\n");
        }
        if let Some(b) = &self.binary_structure {
            out.push_str(&b.render());
        }
        out
    }
}

/// Brute-force `d_X` for any matroid: `|X|` minus the largest subset of `X`
/// of rank below `ρ(X)`. Independent of the lattice.
pub fn distance_by_hyperplanes(m: &Matroid, x: ElementSet) -> Result<usize> {
    m.check(x)?;
    let rank = m.r(x);
    if rank == 0 {
        return Err(Error::DegenerateCode(format!("{x} spans the zero code")));
    }
    let largest = x
        .subsets()
        .filter(|&a| m.r(a) < rank)
        .map(ElementSet::len)
        .max()
        .unwrap_or(0);
    Ok(x.len() - largest)
}

/// Lattice-based code analysis of one matroid.
pub struct CodeAnalysis {
    matroid: Matroid,
    lattice: CyclicFlatLattice,
}

impl CodeAnalysis {
    pub fn new(matroid: &Matroid) -> Result<Self> {
        let lattice = enumerate_cyclic_flats(matroid)?;
        Ok(Self::with_lattice(matroid, lattice))
    }

    pub fn with_lattice(matroid: &Matroid, lattice: CyclicFlatLattice) -> Self {
        CodeAnalysis {
            matroid: matroid.clone(),
            lattice,
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn lattice(&self) -> &CyclicFlatLattice {
        &self.lattice
    }

    /// `Z(M|X)` as `{cyc(Z ∩ X) : Z ∈ Z(M)}`.
    fn restricted_lattice(&self, x: ElementSet) -> Result<CyclicFlatLattice> {
        let spec = MinorSpec::new(x, ElementSet::EMPTY)?;
        minor_cyclic_flats_by(&self.matroid, &self.lattice, &spec, MinorFormula::Restriction)
    }

    /// Whether the punctured code `C|X` is non-degenerate: `Z(M|X)` has top
    /// `X` and bottom `∅`.
    pub fn is_nondegenerate(&self, x: ElementSet) -> Result<bool> {
        self.matroid.check(x)?;
        if x.is_empty() {
            return Err(Error::InvalidSubset("non-degeneracy needs a nonempty set".into()));
        }
        let z = self.restricted_lattice(x)?;
        Ok(z.top().set == x && z.bottom().set.is_empty())
    }

    /// `d_X` when `C|X` is non-degenerate.
    fn nondegenerate_distance(&self, x: ElementSet) -> Option<usize> {
        let m = &self.matroid;
        // Cheap rejections before building Z(M|X).
        if x.is_empty() || !(x & m.loops()).is_empty() || !m.cyclic(x) {
            return None;
        }
        let z = self.restricted_lattice(x).ok()?;
        let below = z.nodes().iter().filter(|w| w.set != x).map(|w| w.nullity).max()?;
        Some(m.eta(x) + 1 - below)
    }

    /// `(k_X, d_X)` of the punctured code: `k_X = ρ(1_{Z(M|X)})` and
    /// `d_X = η(X) + 1 − max{η(Y) : Y ∈ Z(M|X), Y ≠ X}`.
    pub fn punctured_params(&self, x: ElementSet) -> Result<(usize, usize)> {
        if !self.is_nondegenerate(x)? {
            return Err(Error::DegenerateCode(format!("the code punctured to {x} is degenerate")));
        }
        let z = self.restricted_lattice(x)?;
        let d = self
            .nondegenerate_distance(x)
            .ok_or_else(|| Error::DegenerateCode(format!("the code punctured to {x} is degenerate")))?;
        Ok((z.top().rank, d))
    }

    /// `d = η(E) + 1 − max{η(Z) : Z ∈ Z(M), Z ≠ E}`.
    pub fn global_distance(&self) -> Result<usize> {
        let (top, bottom) = (self.lattice.top(), self.lattice.bottom());
        if top.set != self.matroid.ground() || !bottom.set.is_empty() || self.lattice.len() < 2 {
            return Err(Error::DegenerateCode(format!(
                "lattice has bottom {} and top {}",
                bottom.set, top.set
            )));
        }
        let below = self
            .lattice
            .nodes()
            .iter()
            .filter(|z| z.set != top.set)
            .map(|z| z.nullity)
            .max()
            .expect("at least two nodes");
        Ok(top.nullity + 1 - below)
    }

    /// Minimum distance of the code, degenerate or not: zero coordinates are
    /// ignored and a coloop gives distance 1.
    pub fn code_distance(&self) -> Result<usize> {
        let m = &self.matroid;
        let support = m.ground() - m.loops();
        if support.is_empty() {
            return Err(Error::DegenerateCode("the zero code has no minimum distance".into()));
        }
        if !m.cyclic(support) {
            return Ok(1);
        }
        self.nondegenerate_distance(support)
            .ok_or_else(|| Error::Inconsistent("loop-free cyclic support must be non-degenerate".into()))
    }

    /// `s_X = |X| − d_X + 1` for a nonempty cyclic flat, cross-checked
    /// against `ρ(X) + max{η(Z) : Z ∈ Z(M), Z ⊊ X}`.
    pub fn s_value(&self, x: ElementSet) -> Result<usize> {
        self.matroid.check(x)?;
        if x.is_empty() || !self.lattice.contains(x) {
            return Err(Error::InvalidArgument(format!("{x} is not a nonempty cyclic flat")));
        }
        let d = self
            .nondegenerate_distance(x)
            .ok_or_else(|| Error::DegenerateCode(format!("the code punctured to {x} is degenerate")))?;
        let s = x.len() + 1 - d;
        let below = self.lattice.strictly_below(x).map(|z| z.nullity).max().unwrap_or(0);
        let alternative = self.matroid.r(x) + below;
        if s != alternative {
            return Err(Error::Inconsistent(format!(
                "s-value of {x}: |X| - d_X + 1 = {s} but ρ(X) + max η = {alternative}"
            )));
        }
        Ok(s)
    }

    /// Smallest repair set for coordinate `i` at local distance `δ`, ties
    /// broken by lexicographic order.
    ///
    /// Any repair set `R` has `d_{cl(R)} ≥ d_R`, so `R` lies inside a cyclic
    /// flat containing `i` whose (loop-free) distance is at least `δ`; the
    /// search runs over subsets of those flats by increasing size.
    pub fn locality_of_element(&self, i: usize, delta: usize) -> Result<Locality> {
        let m = &self.matroid;
        self.check_locality_args(i, delta)?;
        let loops = m.loops();
        let envelopes: Vec<ElementSet> = self
            .lattice
            .nodes()
            .iter()
            .filter(|z| z.set.contains(i))
            .map(|z| z.set - loops)
            .filter(|&f| self.nondegenerate_distance(f).is_some_and(|d| d >= delta))
            .collect();
        let largest = envelopes.iter().map(|f| f.len()).max().unwrap_or(0);
        for size in delta.max(1)..=largest {
            let mut best: Option<(ElementSet, usize)> = None;
            for &f in envelopes.iter().filter(|f| f.len() >= size) {
                for rest in f.without(i).subsets_of_size(size - 1) {
                    let candidate = rest.with(i);
                    if best.is_some_and(|(b, _)| b <= candidate) {
                        continue;
                    }
                    if let Some(d) = self.nondegenerate_distance(candidate).filter(|&d| d >= delta) {
                        best = Some((candidate, d));
                    }
                }
            }
            if let Some((repair_set, distance)) = best {
                return Ok(Locality {
                    element: i,
                    r: size + 1 - delta,
                    repair_set,
                    distance,
                });
            }
        }
        Err(Error::NoLocality(format!("no repair set for {i} reaches local distance {delta}")))
    }

    /// [`CodeAnalysis::locality_of_element`] by scanning every `R ∋ i` with
    /// distances from [`distance_by_hyperplanes`].
    pub fn locality_of_element_bruteforce(&self, i: usize, delta: usize) -> Result<Locality> {
        let m = &self.matroid;
        self.check_locality_args(i, delta)?;
        if m.size() > BRUTEFORCE_LOCALITY_MAX_N {
            return Err(Error::ResourceLimit(format!(
                "brute-force locality is limited to {BRUTEFORCE_LOCALITY_MAX_N} elements"
            )));
        }
        let others = m.ground().without(i);
        for size in delta.max(1)..=m.size() {
            let found = others.subsets_of_size(size - 1).map(|s| s.with(i)).find_map(|r_set| {
                let nondegenerate = (r_set & m.loops()).is_empty() && m.cyclic(r_set);
                let d = distance_by_hyperplanes(m, r_set).ok()?;
                (nondegenerate && d >= delta).then_some((r_set, d))
            });
            if let Some((repair_set, distance)) = found {
                return Ok(Locality {
                    element: i,
                    r: size + 1 - delta,
                    repair_set,
                    distance,
                });
            }
        }
        Err(Error::NoLocality(format!("no repair set for {i} reaches local distance {delta}")))
    }

    fn check_locality_args(&self, i: usize, delta: usize) -> Result<()> {
        if !self.matroid.ground().contains(i) {
            return Err(Error::InvalidSubset(format!("element {i} is not in the ground set")));
        }
        if delta < 2 {
            return Err(Error::InvalidArgument(format!("local distance must be at least 2, got {delta}")));
        }
        Ok(())
    }

    /// Best `r` for each `δ ∈ [2, d]`, as `(δ, max_i r_i)`.
    pub fn locality_profile(&self) -> Result<Vec<(usize, usize)>> {
        let d = self.code_distance()?;
        (2..=d)
            .map(|delta| {
                let r = self
                    .matroid
                    .ground()
                    .iter()
                    .map(|i| self.locality_of_element(i, delta).map(|l| l.r))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .max()
                    .unwrap_or(0);
                Ok((delta, r))
            })
            .collect()
    }

    /// Checks that every coordinate has `(r, δ)`-locality. Failures are
    /// report content, not errors.
    pub fn verify_lrc(&self, r: usize, delta: usize) -> Result<LrcReport> {
        if r < 1 || delta < 2 {
            return Err(Error::InvalidArgument(format!("need r >= 1 and delta >= 2, got ({r},{delta})")));
        }
        let m = &self.matroid;
        let ground = m.ground();
        let mut per_element = Vec::new();
        let mut failing = Vec::new();
        for i in ground.iter() {
            match self.locality_of_element(i, delta) {
                Ok(loc) => {
                    if loc.r > r {
                        failing.push(i);
                    }
                    per_element.push(loc);
                }
                Err(Error::NoLocality(_)) => failing.push(i),
                Err(e) => return Err(e),
            }
        }
        let achieved_r = (per_element.len() == ground.len())
            .then(|| per_element.iter().map(|l| l.r).max().unwrap_or(0));
        let nondegenerate = self.is_nondegenerate(ground)?;
        let binary_structure = match m.as_linear() {
            Some(g) if g.q() == 2 && nondegenerate => Some(self.binary_structure_check(r, delta)?),
            _ => None,
        };
        Ok(LrcReport {
            n: ground.len(),
            k: m.full_rank(),
            d: self.code_distance()?,
            r,
            delta,
            nondegenerate,
            per_element,
            achieved_r,
            passes: failing.is_empty(),
            failing,
            r_at_least_k: r >= m.full_rank(),
            binary_structure,
        })
    }

    fn is_binary(&self) -> Result<bool> {
        match self.matroid.as_linear() {
            Some(g) if g.q() == 2 => Ok(true),
            _ => Ok(UniformDetector::with_lattice(&self.matroid, self.lattice.clone())
                .tutte_binary_test()?
                .binary),
        }
    }

    /// Evaluates the lattice conditions of binary LRCs with `d > 2`:
    /// 1. `∅` and `E` are cyclic flats;
    /// 2. every edge `Z ⋖ E` is a nullity edge labelled at least `d − 1`;
    /// 3. for `δ = 2`, every element lies in a cyclic flat of rank at most `r`;
    /// 4. for `δ > 2`, every element lies in a cyclic flat `X` whose lower
    ///    covers are all nullity edges labelled at least `δ − 1` and all have
    ///    rank at most `r − 2`.
    pub fn binary_structure_check(&self, r: usize, delta: usize) -> Result<BinaryStructure> {
        if !self.is_binary()? {
            return Err(Error::InapplicableTheorem("the matroid has a U(4,2) minor, so it is not binary".into()));
        }
        let d = self.global_distance()?;
        if d <= 2 {
            return Ok(BinaryStructure {
                d,
                r,
                delta,
                applicable: false,
                reason: Some("theorem precondition d>2 not met".into()),
                conditions: Vec::new(),
            });
        }
        let z = &self.lattice;
        let ground = self.matroid.ground();
        let mut conditions = Vec::new();

        let bottom_top = z.contains(ElementSet::EMPTY) && z.contains(ground);
        conditions.push(ConditionVerdict {
            condition: 1,
            applicable: true,
            holds: bottom_top,
            counterexamples: if bottom_top {
                Vec::new()
            } else {
                vec![format!("bottom {} top {}", z.bottom().set, z.top().set)]
            },
            note: None,
        });

        let top = z.len() - 1;
        let bad_top_edges: Vec<String> = z
            .lower_covers(top)
            .filter(|e| !matches!(e.label(), EdgeLabel::Nullity { gap } if gap + 1 >= d))
            .map(|e| format!("{} < {} labelled {:?}", z.node(e.lower).set, z.node(e.upper).set, e.label()))
            .collect();
        conditions.push(ConditionVerdict {
            condition: 2,
            applicable: true,
            holds: bad_top_edges.is_empty(),
            counterexamples: bad_top_edges,
            note: None,
        });

        let uncovered = |good: &dyn Fn(usize) -> bool| -> Vec<String> {
            ground
                .iter()
                .filter(|&i| !(0..z.len()).any(|x| z.node(x).set.contains(i) && good(x)))
                .map(|i| i.to_string())
                .collect()
        };

        let low_rank = uncovered(&|x| z.node(x).rank <= r);
        conditions.push(ConditionVerdict {
            condition: 3,
            applicable: delta == 2,
            holds: delta != 2 || low_rank.is_empty(),
            counterexamples: if delta == 2 { low_rank } else { Vec::new() },
            note: None,
        });

        let well_covered = uncovered(&|x| {
            z.lower_covers(x).all(|e| {
                let nullity_ok = matches!(e.label(), EdgeLabel::Nullity { gap } if gap + 1 >= delta);
                let rank_ok = z.node(e.lower).rank as i64 <= r as i64 - 2;
                nullity_ok && rank_ok
            })
        });
        conditions.push(ConditionVerdict {
            condition: 4,
            applicable: delta > 2,
            holds: delta <= 2 || well_covered.is_empty(),
            counterexamples: if delta > 2 { well_covered } else { Vec::new() },
            note: Some("rank <= r-2 on covered flats, applied as stated".into()),
        });

        Ok(BinaryStructure {
            d,
            r,
            delta,
            applicable: true,
            reason: None,
            conditions,
        })
    }

    /// Whether the code is MDS, i.e. the matroid is `U(n, k)` with
    /// `0 < k < n`. For matrices, `d = n − k + 1` is confirmed by brute force.
    pub fn mds_check(&self) -> Result<bool> {
        let m = &self.matroid;
        let Some((n, k)) = m.uniform_test().filter(|&(n, k)| 0 < k && k < n) else {
            return Ok(false);
        };
        if let Some(g) = m.as_linear() {
            let d = g.min_distance_bruteforce(g.columns(), m.limits().max_codewords)?;
            if d != n - k + 1 {
                return Err(Error::Inconsistent(format!(
                    "uniform matroid U({n},{k}) but brute-force distance {d}"
                )));
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests;
