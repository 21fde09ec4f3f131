//! Exhaustive uniform-minor search, the ground truth the lattice criteria are
//! checked against.

use super::{Matroid, MinorSpec};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::uniform::{Certificate, UniformWitness};

/// Whether `U(n, k)` has a `U(n', k')` minor: `k' ≤ k` and `n' − k' ≤ n − k`.
pub fn uniform_has_uniform_minor(n: usize, k: usize, n_minor: usize, k_minor: usize) -> bool {
    k <= n && k_minor <= n_minor && k_minor <= k && n_minor - k_minor <= n - k
}

impl Matroid {
    /// [`Matroid::uniform_test`] on `M|Y/X` without materialising the minor.
    pub fn minor_uniform_test(&self, spec: &MinorSpec) -> Result<Option<(usize, usize)>> {
        self.check(spec.restrict_to())?;
        Ok(self.minor_uniform(spec.restrict_to(), spec.contract_by()))
    }

    pub(crate) fn minor_uniform(&self, y: ElementSet, x: ElementSet) -> Option<(usize, usize)> {
        let base = self.r(x);
        let k = self.r(y) - base;
        let ground = y - x;
        ground
            .subsets_of_size(k)
            .all(|a| self.r(a | x) - base == k)
            .then_some((ground.len(), k))
    }

    /// First pair `X ⊆ Y` (ordered by `|Y|`, then `Y`, then `X`
    /// lexicographically) with `M|Y/X ≅ U(n', k')`.
    ///
    /// Only independent `X` are tried: a minimal witness never contracts a
    /// dependent set, because `M|Y/X = M|(Y − (X − B))/B` for a basis `B` of `X`.
    pub fn uniform_minor_bruteforce(&self, n_minor: usize, k_minor: usize) -> Result<Option<UniformWitness>> {
        let n = self.size();
        if n > self.limits().max_bruteforce_n {
            return Err(Error::ResourceLimit(format!(
                "brute-force minor search is limited to {} elements, matroid has {n}",
                self.limits().max_bruteforce_n
            )));
        }
        if k_minor > n_minor || n_minor > n {
            return Ok(None);
        }
        for size in n_minor..=n {
            let contracted = size - n_minor;
            for y in self.ground().subsets_of_size(size) {
                if self.r(y) != k_minor + contracted {
                    continue;
                }
                for x in y.subsets_of_size(contracted) {
                    if !self.independent(x) {
                        continue;
                    }
                    if self.minor_uniform(y, x) == Some((n_minor, k_minor)) {
                        return Ok(Some(UniformWitness {
                            restrict_to: y,
                            contract_by: x,
                            params: (n_minor, k_minor),
                            certificate: Certificate::BruteForce,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}
