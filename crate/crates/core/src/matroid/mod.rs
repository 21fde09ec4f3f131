//! The matroid abstraction.
//!
//! A [`Matroid`] is a ground set together with a rank oracle. Oracles come
//! from a generator matrix, a uniform matroid, an explicit rank table or a
//! list of bases; duals and minors wrap their parent's oracle. Rank queries
//! are memoised per matroid, and clones share both oracle and memo.

mod memo;
mod search;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldMatrix, DEFAULT_CODEWORD_CAP};
use crate::set::ElementSet;

use memo::Memo;

pub use search::uniform_has_uniform_minor;

/// Largest ground set for explicit rank tables and basis lists.
pub const MAX_EXPLICIT_N: usize = 16;

/// Resource caps consulted by the exhaustive algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for which cyclic flats are enumerated.
    pub max_enumeration_n: usize,
    /// Same, for matroids given by a binary matrix.
    pub max_enumeration_n_binary: usize,
    /// Largest ground set for brute-force minor searches.
    pub max_bruteforce_n: usize,
    /// Largest number of codewords a brute-force distance may enumerate.
    pub max_codewords: u64,
    /// Largest lattice for configuration canonicalisation.
    pub max_configuration_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration_n: 16,
            max_enumeration_n_binary: 20,
            max_bruteforce_n: 16,
            max_codewords: DEFAULT_CODEWORD_CAP,
            max_configuration_nodes: 24,
        }
    }
}

impl Limits {
    /// Applies a single ground-set cap to every size-based limit.
    pub fn with_max_n(mut self, n: usize) -> Self {
        self.max_enumeration_n = n;
        self.max_enumeration_n_binary = n;
        self.max_bruteforce_n = n;
        self
    }
}

/// A minor `M|Y/X`: restrict to `Y`, then contract `X ⊆ Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    restrict_to: ElementSet,
    contract_by: ElementSet,
}

impl MinorSpec {
    pub fn new(restrict_to: ElementSet, contract_by: ElementSet) -> Result<Self> {
        if !contract_by.is_subset(restrict_to) {
            return Err(Error::InvalidMinorSpec(format!(
                "contraction set {contract_by} is not inside the restriction {restrict_to}"
            )));
        }
        Ok(MinorSpec {
            restrict_to,
            contract_by,
        })
    }

    pub fn restrict_to(&self) -> ElementSet {
        self.restrict_to
    }

    pub fn contract_by(&self) -> ElementSet {
        self.contract_by
    }

    /// Ground set of the minor, `Y − X`.
    pub fn ground(&self) -> ElementSet {
        self.restrict_to - self.contract_by
    }
}

#[derive(Clone)]
enum Oracle {
    Linear(FieldMatrix),
    Uniform { k: usize },
    /// Ranks indexed by subset bitmask; the ground set is `1..=n`.
    Table(Vec<u8>),
    Bases(Vec<ElementSet>),
    Dual(Matroid),
    /// `ρ(A) = ρ_parent(A ∪ C) − ρ_parent(C)`.
    Minor { parent: Matroid, contract: ElementSet },
}

struct Inner {
    ground: ElementSet,
    oracle: Oracle,
    memo: Memo,
    provenance: String,
    limits: Limits,
}

/// A finite matroid given by a rank oracle.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid({} on {})", self.inner.provenance, self.inner.ground)
    }
}

impl Matroid {
    fn build(ground: ElementSet, oracle: Oracle, provenance: String, limits: Limits) -> Self {
        let memo = match oracle {
            Oracle::Uniform { .. } | Oracle::Table(_) => Memo::none(),
            _ => Memo::for_ground_size(ground.len()),
        };
        Matroid {
            inner: Arc::new(Inner {
                ground,
                oracle,
                memo,
                provenance,
                limits,
            }),
        }
    }

    /// The column matroid of a generator matrix.
    pub fn linear(matrix: FieldMatrix) -> Self {
        let provenance = format!("GF({}) matrix {}x{}", matrix.q(), matrix.rows(), matrix.cols());
        Self::build(matrix.columns(), Oracle::Linear(matrix), provenance, Limits::default())
    }

    /// The uniform matroid `U(n, k)` on `1..=n`.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidMatroid(format!("U({n},{k}) needs k <= n")));
        }
        if n > crate::set::MAX_LABEL {
            return Err(Error::InvalidMatroid(format!("ground set of size {n} is too large")));
        }
        Ok(Self::build(
            ElementSet::full(n),
            Oracle::Uniform { k },
            format!("U({n},{k})"),
            Limits::default(),
        ))
    }

    /// A matroid from the rank of every subset of `1..=n`, indexed by bitmask.
    /// The rank axioms are checked exhaustively.
    pub fn from_rank_table(n: usize, ranks: Vec<usize>) -> Result<Self> {
        if n > MAX_EXPLICIT_N {
            return Err(Error::InvalidMatroid(format!(
                "explicit rank tables are limited to n <= {MAX_EXPLICIT_N}"
            )));
        }
        if ranks.len() != 1 << n {
            return Err(Error::InvalidMatroid(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << n
            )));
        }
        validate_rank_axioms(n, |bits| ranks[bits as usize])?;
        let table = ranks.into_iter().map(|r| r as u8).collect();
        Ok(Self::build(
            ElementSet::full(n),
            Oracle::Table(table),
            format!("rank table on {n} elements"),
            Limits::default(),
        ))
    }

    /// A matroid on `1..=n` from its complete list of bases.
    pub fn from_bases(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        if n > MAX_EXPLICIT_N {
            return Err(Error::InvalidMatroid(format!(
                "basis lists are limited to n <= {MAX_EXPLICIT_N}"
            )));
        }
        let ground = ElementSet::full(n);
        let Some(first) = bases.first() else {
            return Err(Error::InvalidMatroid("a matroid has at least one basis".into()));
        };
        let k = first.len();
        if let Some(b) = bases.iter().find(|b| !b.is_subset(ground)) {
            return Err(Error::InvalidMatroid(format!("basis {b} leaves the ground set")));
        }
        if let Some(b) = bases.iter().find(|b| b.len() != k) {
            return Err(Error::InvalidMatroid(format!(
                "basis {b} has size {}, expected {k}",
                b.len()
            )));
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        let rank = |bits: u64| {
            let x = ElementSet::from_bits(bits);
            bases.iter().map(|&b| (x & b).len()).max().unwrap_or(0)
        };
        validate_rank_axioms(n, rank)?;
        // Max-intersection ranks of an incomplete list may still form a
        // matroid, but one with more bases than were listed.
        let complete = ground.subsets_of_size(k).filter(|s| rank(s.bits()) == k).count();
        if complete != bases.len() {
            return Err(Error::InvalidMatroid(format!(
                "basis list is not closed under exchange ({} listed, {complete} implied)",
                bases.len()
            )));
        }
        Ok(Self::build(
            ground,
            Oracle::Bases(bases),
            format!("bases on {n} elements"),
            Limits::default(),
        ))
    }

    /// A copy of this matroid with different resource caps; the memo is not
    /// shared with the original.
    pub fn with_limits(&self, limits: Limits) -> Self {
        Self::build(
            self.inner.ground,
            self.inner.oracle.clone(),
            self.inner.provenance.clone(),
            limits,
        )
    }

    pub fn ground(&self) -> ElementSet {
        self.inner.ground
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn limits(&self) -> &Limits {
        &self.inner.limits
    }

    pub fn provenance(&self) -> &str {
        &self.inner.provenance
    }

    /// The generator matrix, when this matroid was built from one directly.
    pub fn as_linear(&self) -> Option<&FieldMatrix> {
        match &self.inner.oracle {
            Oracle::Linear(m) => Some(m),
            _ => None,
        }
    }

    /// The uniform parameters, when this matroid was built as `U(n, k)`.
    pub fn as_uniform(&self) -> Option<(usize, usize)> {
        match self.inner.oracle {
            Oracle::Uniform { k } => Some((self.size(), k)),
            _ => None,
        }
    }

    pub(crate) fn check(&self, x: ElementSet) -> Result<()> {
        if x.is_subset(self.inner.ground) {
            Ok(())
        } else {
            Err(Error::InvalidSubset(format!(
                "{x} is not a subset of the ground set {}",
                self.inner.ground
            )))
        }
    }

    pub fn rank(&self, x: ElementSet) -> Result<usize> {
        self.check(x)?;
        Ok(self.r(x))
    }

    /// Rank without the ground-set check.
    pub(crate) fn r(&self, x: ElementSet) -> usize {
        let inner = &*self.inner;
        inner.memo.get_or_insert_with(x.bits(), || match &inner.oracle {
            Oracle::Linear(m) => m.column_rank(x),
            Oracle::Uniform { k } => x.len().min(*k),
            Oracle::Table(t) => usize::from(t[x.bits() as usize]),
            Oracle::Bases(bases) => bases.iter().map(|&b| (x & b).len()).max().unwrap_or(0),
            Oracle::Dual(p) => x.len() + p.r(inner.ground - x) - p.r(inner.ground),
            Oracle::Minor { parent, contract } => parent.r(x | *contract) - parent.r(*contract),
        })
    }

    pub fn full_rank(&self) -> usize {
        self.r(self.inner.ground)
    }

    pub fn nullity(&self, x: ElementSet) -> Result<usize> {
        self.check(x)?;
        Ok(self.eta(x))
    }

    pub(crate) fn eta(&self, x: ElementSet) -> usize {
        x.len() - self.r(x)
    }

    pub fn is_independent(&self, x: ElementSet) -> Result<bool> {
        self.check(x)?;
        Ok(self.r(x) == x.len())
    }

    pub(crate) fn independent(&self, x: ElementSet) -> bool {
        self.r(x) == x.len()
    }

    /// `cl(X)`: `X` together with every element whose addition keeps the rank.
    pub fn closure(&self, x: ElementSet) -> Result<ElementSet> {
        self.check(x)?;
        Ok(self.cl(x))
    }

    pub(crate) fn cl(&self, x: ElementSet) -> ElementSet {
        let rank = self.r(x);
        (self.inner.ground - x)
            .iter()
            .filter(|&e| self.r(x.with(e)) == rank)
            .fold(x, ElementSet::with)
    }

    /// `cyc(X)`: the elements of `X` whose removal keeps the rank, i.e. the
    /// union of the circuits inside `X`.
    pub fn cyc(&self, x: ElementSet) -> Result<ElementSet> {
        self.check(x)?;
        Ok(self.cyclic_part(x))
    }

    pub(crate) fn cyclic_part(&self, x: ElementSet) -> ElementSet {
        let rank = self.r(x);
        x.iter().filter(|&e| self.r(x.without(e)) == rank).collect()
    }

    pub fn is_flat(&self, x: ElementSet) -> Result<bool> {
        self.check(x)?;
        Ok(self.flat(x))
    }

    pub(crate) fn flat(&self, x: ElementSet) -> bool {
        let rank = self.r(x);
        (self.inner.ground - x).iter().all(|e| self.r(x.with(e)) > rank)
    }

    pub fn is_cyclic_set(&self, x: ElementSet) -> Result<bool> {
        self.check(x)?;
        Ok(self.cyclic(x))
    }

    pub(crate) fn cyclic(&self, x: ElementSet) -> bool {
        let rank = self.r(x);
        x.iter().all(|e| self.r(x.without(e)) == rank)
    }

    pub fn is_cyclic_flat(&self, x: ElementSet) -> Result<bool> {
        self.check(x)?;
        Ok(self.cyclic_flat(x))
    }

    pub(crate) fn cyclic_flat(&self, x: ElementSet) -> bool {
        self.cyclic(x) && self.flat(x)
    }

    /// Elements of rank zero, `cl(∅)`.
    pub fn loops(&self) -> ElementSet {
        self.cl(ElementSet::EMPTY)
    }

    /// Elements in every basis, `E − cyc(E)`.
    pub fn coloops(&self) -> ElementSet {
        self.inner.ground - self.cyclic_part(self.inner.ground)
    }

    /// The dual matroid, `ρ*(A) = |A| + ρ(E − A) − ρ(E)`.
    pub fn dual(&self) -> Matroid {
        Self::build(
            self.inner.ground,
            Oracle::Dual(self.clone()),
            format!("dual of {}", self.inner.provenance),
            self.inner.limits,
        )
    }

    /// `M|Y`.
    pub fn restrict(&self, y: ElementSet) -> Result<Matroid> {
        self.minor(&MinorSpec::new(y, ElementSet::EMPTY)?)
    }

    /// `M/X`.
    pub fn contract(&self, x: ElementSet) -> Result<Matroid> {
        self.check(x)?;
        self.minor(&MinorSpec::new(self.inner.ground, x)?)
    }

    /// `M|Y/X`. Nested minors are flattened onto the original oracle.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Matroid> {
        self.check(spec.restrict_to).map_err(|_| {
            Error::InvalidMinorSpec(format!(
                "restriction {} is not inside the ground set {}",
                spec.restrict_to, self.inner.ground
            ))
        })?;
        let ground = spec.ground();
        let (parent, contract) = match &self.inner.oracle {
            Oracle::Minor { parent, contract } => (parent.clone(), *contract | spec.contract_by),
            _ => (self.clone(), spec.contract_by),
        };
        let provenance = format!(
            "minor |{}/{} of {}",
            spec.restrict_to, spec.contract_by, self.inner.provenance
        );
        Ok(Self::build(
            ground,
            Oracle::Minor { parent, contract },
            provenance,
            self.inner.limits,
        ))
    }

    /// `Some((n, k))` iff this matroid is `U(n, k)`, with `n = |E|`.
    ///
    /// With `k = ρ(E)` the matroid is uniform exactly when every `k`-subset is
    /// independent: smaller sets are then independent as subsets of those, and
    /// larger sets have rank `k` by monotonicity and the cap `ρ(E) = k`.
    pub fn uniform_test(&self) -> Option<(usize, usize)> {
        let n = self.size();
        let k = self.full_rank();
        if let Oracle::Uniform { .. } = self.inner.oracle {
            return Some((n, k));
        }
        self.inner
            .ground
            .subsets_of_size(k)
            .all(|s| self.r(s) == k)
            .then_some((n, k))
    }
}

/// Checks (R.1)–(R.3) through the equivalent local conditions: `ρ(∅) = 0`,
/// unit increments, and `ρ(X∪a) + ρ(X∪b) ≥ ρ(X∪a∪b) + ρ(X)`.
fn validate_rank_axioms(n: usize, rank: impl Fn(u64) -> usize) -> Result<()> {
    if rank(0) != 0 {
        return Err(Error::InvalidMatroid("rank of the empty set must be 0".into()));
    }
    for x in 0u64..1 << n {
        let rx = rank(x);
        for a in (0..n).filter(|a| x >> a & 1 == 0) {
            let xa = x | 1 << a;
            let rxa = rank(xa);
            if rxa < rx || rxa > rx + 1 {
                return Err(Error::InvalidMatroid(format!(
                    "adding element {} to {} changes the rank by {}",
                    a + 1,
                    ElementSet::from_bits(x),
                    rxa as i64 - rx as i64
                )));
            }
            for b in (a + 1..n).filter(|b| x >> b & 1 == 0) {
                let xb = x | 1 << b;
                if rxa + rank(xb) < rank(xa | xb) + rx {
                    return Err(Error::InvalidMatroid(format!(
                        "submodularity fails at {} with elements {} and {}",
                        ElementSet::from_bits(x),
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
