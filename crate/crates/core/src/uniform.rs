//! Detecting uniform minors from the lattice of cyclic flats.
//!
//! Each detector reduces the question "is `M|Y/X` uniform?" to conditions on
//! `Z(M)` and a handful of closure/cyclic-operator evaluations. Every witness
//! is re-checked against the rank function before it is returned.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::lattice::{enumerate_cyclic_flats, minor_cyclic_flats_by, CoveringEdge, CyclicFlatLattice, MinorFormula};
use crate::matroid::{uniform_has_uniform_minor, Matroid, MinorSpec};
use crate::set::ElementSet;

/// How a uniform minor was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A covering edge `lower ⋖ upper` of `Z(M)`.
    EdgeTheorem { lower: ElementSet, upper: ElementSet },
    RestrictionTheorem,
    ContractionTheorem,
    CombinedTheorem,
    BruteForce,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::EdgeTheorem { lower, upper } => write!(f, "edge({lower}<{upper})"),
            Certificate::RestrictionTheorem => f.write_str("restriction"),
            Certificate::ContractionTheorem => f.write_str("contraction"),
            Certificate::CombinedTheorem => f.write_str("combined"),
            Certificate::BruteForce => f.write_str("brute-force"),
        }
    }
}

/// A certified uniform minor `M|Y/X ≅ U(n', k')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniformWitness {
    pub restrict_to: ElementSet,
    pub contract_by: ElementSet,
    pub params: (usize, usize),
    pub certificate: Certificate,
}

impl UniformWitness {
    pub fn spec(&self) -> MinorSpec {
        MinorSpec::new(self.restrict_to, self.contract_by).expect("witness sets are nested")
    }

    /// `UNIFORM-MINOR U(n',k') restrict={..} contract={..} via=<certificate>`.
    pub fn report_line(&self) -> String {
        format!(
            "UNIFORM-MINOR U({},{}) restrict={} contract={} via={}",
            self.params.0, self.params.1, self.restrict_to, self.contract_by, self.certificate
        )
    }
}

impl fmt::Display for UniformWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.report_line())
    }
}

/// A covering edge whose rank and nullity jumps are large enough to force a
/// `U(n', k')` minor, with the minor it yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HasseViolation {
    pub lower: ElementSet,
    pub upper: ElementSet,
    pub witness: UniformWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryVerdict {
    pub binary: bool,
    /// A `U(4,2)` minor when the matroid is not binary.
    pub witness: Option<UniformWitness>,
}

/// Result of scanning for the uniform minors a GF(q)-representable matroid
/// must avoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub q: u32,
    /// The `(q+2, k)` parameters searched for.
    pub forbidden: Vec<(usize, usize)>,
    pub witnesses: Vec<UniformWitness>,
    pub note: String,
}

impl FieldCheck {
    pub fn clean(&self) -> bool {
        self.witnesses.is_empty()
    }
}

pub const FIELD_CHECK_CAVEAT: &str =
    "necessary, conditional: avoiding these minors is required for GF(q)-representability assuming the MDS conjecture, and is not sufficient";

/// The `k` with `U(q+2, k)` excluded from GF(q)-representable matroids:
/// `k = 2`, `4 ≤ k ≤ q − 2`, `k = q`, and for odd `q` also `k = 3, q − 1`.
pub fn forbidden_uniform_ranks(q: u32) -> Vec<usize> {
    let q = q as usize;
    let mut ks = vec![2, q];
    ks.extend(4..=q.saturating_sub(2));
    if q % 2 == 1 {
        ks.extend([3, q - 1]);
    }
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Uniform-minor detection for one matroid and its lattice of cyclic flats.
pub struct UniformDetector {
    matroid: Matroid,
    lattice: CyclicFlatLattice,
}

impl UniformDetector {
    pub fn new(matroid: &Matroid) -> Result<Self> {
        let lattice = enumerate_cyclic_flats(matroid)?;
        Ok(Self::with_lattice(matroid, lattice))
    }

    /// Uses an already enumerated `Z(M)`.
    pub fn with_lattice(matroid: &Matroid, lattice: CyclicFlatLattice) -> Self {
        UniformDetector {
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

    /// Surfaces a witness only if the minor really is `U(n', k')`.
    fn validated(&self, witness: UniformWitness) -> Result<UniformWitness> {
        let found = self
            .matroid
            .minor_uniform(witness.restrict_to, witness.contract_by);
        if found == Some(witness.params) {
            Ok(witness)
        } else {
            Err(Error::Inconsistent(format!(
                "witness {witness} rejected: minor tests as {found:?}"
            )))
        }
    }

    fn witness(&self, y: ElementSet, x: ElementSet, params: (usize, usize), certificate: Certificate) -> Result<UniformWitness> {
        self.validated(UniformWitness {
            restrict_to: y,
            contract_by: x,
            params,
            certificate,
        })
    }

    /// For a covering edge `X ⋖ Y`, the minor `M|Y/X ≅ U(|Y − X|, ρ(Y) − ρ(X))`.
    pub fn edge_minor(&self, lower: ElementSet, upper: ElementSet) -> Result<UniformWitness> {
        let edge = self
            .lattice
            .edge_between(lower, upper)
            .ok_or_else(|| Error::InvalidEdge(format!("{lower} ⋖ {upper} is not a covering pair of Z(M)")))?;
        self.edge_witness(edge)
    }

    fn edge_witness(&self, edge: &CoveringEdge) -> Result<UniformWitness> {
        let (lo, hi) = (self.lattice.node(edge.lower).set, self.lattice.node(edge.upper).set);
        self.witness(
            hi,
            lo,
            ((hi - lo).len(), edge.rank_gap),
            Certificate::EdgeTheorem { lower: lo, upper: hi },
        )
    }

    /// Covering edges with `Δρ ≥ k'` and `Δη ≥ n' − k'`; each carries a
    /// `U(n', k')` minor cut out of the edge's uniform interval.
    pub fn hasse_violations(&self, n_minor: usize, k_minor: usize) -> Result<Vec<HasseViolation>> {
        if k_minor > n_minor {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for edge in self.lattice.edges() {
            if edge.rank_gap < k_minor || edge.nullity_gap < n_minor - k_minor {
                continue;
            }
            let whole = self.edge_witness(edge)?;
            let (n_edge, k_edge) = whole.params;
            debug_assert!(uniform_has_uniform_minor(n_edge, k_edge, n_minor, k_minor));
            // In U(a, b): contracting b − k' elements leaves U(a − b + k', k'),
            // and keeping n' of the rest gives U(n', k').
            let free: Vec<usize> = (whole.restrict_to - whole.contract_by).to_vec();
            let contracted: ElementSet = free[..k_edge - k_minor].iter().copied().collect();
            let kept: ElementSet = free[k_edge - k_minor..k_edge - k_minor + n_minor]
                .iter()
                .copied()
                .collect();
            let x = whole.contract_by | contracted;
            let witness = self.witness(x | kept, x, (n_minor, k_minor), whole.certificate)?;
            out.push(HasseViolation {
                lower: self.lattice.node(edge.lower).set,
                upper: self.lattice.node(edge.upper).set,
                witness,
            });
        }
        Ok(out)
    }

    /// Whether `M|Y` is uniform, decided inside `M|cl(Y)` where `Y` spans:
    /// either `Y` is independent, or `Y` is cyclic and meets every cyclic
    /// flat of rank below `ρ(Y)` in an independent set.
    pub fn restriction_uniform(&self, y: ElementSet) -> Result<Option<UniformWitness>> {
        let m = &self.matroid;
        m.check(y)?;
        if m.independent(y) {
            return self
                .witness(y, ElementSet::EMPTY, (y.len(), y.len()), Certificate::RestrictionTheorem)
                .map(Some);
        }
        let span = m.cl(y);
        let spec = MinorSpec::new(span, ElementSet::EMPTY)?;
        let reduced = m.minor(&spec)?;
        let flats = minor_cyclic_flats_by(m, &self.lattice, &spec, MinorFormula::Interval)?;
        // The ground set of the reduced matroid has to be a cyclic flat.
        if flats.top().set != span {
            return Ok(None);
        }
        let k = reduced.r(y);
        if !reduced.cyclic(y) {
            return Ok(None);
        }
        let meets_independently = flats
            .nodes()
            .iter()
            .filter(|z| z.rank < k)
            .all(|z| reduced.independent(z.set & y));
        if !meets_independently {
            return Ok(None);
        }
        self.witness(y, ElementSet::EMPTY, (y.len(), k), Certificate::RestrictionTheorem)
            .map(Some)
    }

    /// Whether `M/X` is uniform, decided inside `M/cyc(X)` where the rest of
    /// `X` is independent: either `X` spans, or `X` is a flat and
    /// `cl(X ∪ Z) = E` for every cyclic flat `Z` of positive rank.
    pub fn contraction_uniform(&self, x: ElementSet) -> Result<Option<UniformWitness>> {
        let m = &self.matroid;
        m.check(x)?;
        let ground = m.ground();
        let n_minor = (ground - x).len();
        if m.r(x) == m.full_rank() {
            return self
                .witness(ground, x, (n_minor, 0), Certificate::ContractionTheorem)
                .map(Some);
        }
        let core = m.cyclic_part(x);
        let spec = MinorSpec::new(ground, core)?;
        let reduced = m.minor(&spec)?;
        let flats = minor_cyclic_flats_by(m, &self.lattice, &spec, MinorFormula::Interval)?;
        // The empty set has to be a cyclic flat of the reduced matroid.
        if !flats.bottom().set.is_empty() {
            return Ok(None);
        }
        let rest = x - core;
        let reduced_ground = reduced.ground();
        if reduced.cl(rest) != rest {
            return Ok(None);
        }
        let spanning = flats
            .nodes()
            .iter()
            .filter(|z| z.rank > 0)
            .all(|z| reduced.cl(rest | z.set) == reduced_ground);
        if !spanning {
            return Ok(None);
        }
        let k = m.full_rank() - m.r(x);
        self.witness(ground, x, (n_minor, k), Certificate::ContractionTheorem)
            .map(Some)
    }

    /// Whether `M|Y/X` is uniform, decided inside `M|cl(Y)/cyc(X)`. Outside
    /// the two direct cases (`Y` independent there, or `X` spanning), the
    /// minor is `U(|Y − X|, ρ(Y) − ρ(X))` iff `cl(X) ∩ Y = X`,
    /// `Y − X ⊆ cyc(Y)`, and every cyclic flat `Z` has `Z ∩ Y` independent or
    /// `cl(X ∪ cyc(Z ∩ Y))` equal to the whole reduced ground set.
    pub fn combined_uniform(&self, x: ElementSet, y: ElementSet) -> Result<Option<UniformWitness>> {
        let m = &self.matroid;
        let outer = MinorSpec::new(y, x)?;
        m.check(y)
            .map_err(|e| Error::InvalidMinorSpec(e.to_string()))?;
        let n_minor = outer.ground().len();
        let spec = MinorSpec::new(m.cl(y), m.cyclic_part(x))?;
        let reduced = m.minor(&spec)?;
        let (xr, yr) = (x - spec.contract_by(), y - spec.contract_by());
        if reduced.independent(yr) {
            return self
                .witness(y, x, (n_minor, n_minor), Certificate::CombinedTheorem)
                .map(Some);
        }
        let k = reduced.full_rank() - reduced.r(xr);
        if k == 0 {
            return self
                .witness(y, x, (n_minor, 0), Certificate::CombinedTheorem)
                .map(Some);
        }
        if reduced.cl(xr) & yr != xr {
            return Ok(None);
        }
        if !(yr - xr).is_subset(reduced.cyclic_part(yr)) {
            return Ok(None);
        }
        let flats = minor_cyclic_flats_by(m, &self.lattice, &spec, MinorFormula::Interval)?;
        let reduced_ground = reduced.ground();
        let third = flats.nodes().iter().all(|z| {
            let meet = z.set & yr;
            reduced.independent(meet) || reduced.cl(xr | reduced.cyclic_part(meet)) == reduced_ground
        });
        if !third {
            return Ok(None);
        }
        self.witness(y, x, (n_minor, k), Certificate::CombinedTheorem)
            .map(Some)
    }

    /// Binary iff there is no `U(4,2)` minor. A mixed Hasse edge settles the
    /// question at once; otherwise the exhaustive search decides.
    pub fn tutte_binary_test(&self) -> Result<BinaryVerdict> {
        if let Some(v) = self.hasse_violations(4, 2)?.into_iter().next() {
            return Ok(BinaryVerdict {
                binary: false,
                witness: Some(v.witness),
            });
        }
        let witness = self.matroid.uniform_minor_bruteforce(4, 2)?;
        Ok(BinaryVerdict {
            binary: witness.is_none(),
            witness,
        })
    }

    /// Searches for every `U(q+2, k)` minor excluded from GF(q)-representable
    /// matroids. An empty result is necessary, not sufficient.
    pub fn field_necessary_check(&self, q: u32) -> Result<FieldCheck> {
        if !is_prime(q) {
            return Err(Error::InvalidArgument(format!("{q} is not prime")));
        }
        let n_minor = q as usize + 2;
        let forbidden: Vec<(usize, usize)> = forbidden_uniform_ranks(q)
            .into_iter()
            .map(|k| (n_minor, k))
            .collect();
        if n_minor > self.matroid.size() {
            return Ok(FieldCheck {
                q,
                forbidden,
                witnesses: Vec::new(),
                note: format!(
                    "ground set has fewer than {n_minor} elements, so no U({n_minor},k) minor exists; {FIELD_CHECK_CAVEAT}"
                ),
            });
        }
        let mut witnesses = Vec::new();
        for &(n, k) in &forbidden {
            let from_edge = self.hasse_violations(n, k)?.into_iter().next().map(|v| v.witness);
            let found = match from_edge {
                Some(w) => Some(w),
                None => self.matroid.uniform_minor_bruteforce(n, k)?,
            };
            witnesses.extend(found);
        }
        Ok(FieldCheck {
            q,
            forbidden,
            witnesses,
            note: FIELD_CHECK_CAVEAT.to_string(),
        })
    }
}
