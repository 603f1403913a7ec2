//! Root multiplicities: Peterson's recursion, the Berman-Moody closed form,
//! the coarse `l^height` bound, and truncated checks of the denominator identity.

mod berman_moody;
mod cache;
mod denominator;
mod peterson;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

pub use berman_moody::{mult_berman_moody, solution_set, TupleSet};
pub use cache::{LoadStatus, TableCache, CACHE_DIR_ENV, CACHE_VERSION};
pub use denominator::{verify_denominator_identity, DenominatorReport, LatticeSeries, Mismatch};
pub use peterson::{mult_peterson, mult_peterson_with};

use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;
use peterson::Supported;

/// Memoized multiplicities for one matrix.
///
/// Every positive root of height `<= frontier` is present; vectors that were
/// queried and turned out not to be roots are stored as explicit zeros.
#[derive(Clone, Debug)]
pub struct MultTable {
    gcm: Gcm,
    gcm_hash: String,
    frontier: i64,
    entries: HashMap<RootVector, BigUint>,
    /// `shells[h]`: vectors of height `h` with `c != 0`.
    shells: Vec<Vec<Supported>>,
}

impl MultTable {
    pub fn new(g: &Gcm) -> Self {
        MultTable {
            gcm: g.clone(),
            gcm_hash: g.content_hash(),
            frontier: 0,
            entries: HashMap::new(),
            shells: vec![Vec::new()],
        }
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn gcm_hash(&self) -> &str {
        &self.gcm_hash
    }

    /// Largest height up to which every vector is resolved.
    pub fn frontier(&self) -> i64 {
        self.frontier
    }

    /// Stored multiplicity; `None` above the frontier or for unqueried non-roots.
    pub fn get(&self, alpha: &RootVector) -> Option<&BigUint> {
        self.entries.get(alpha)
    }

    /// Multiplicity of a vector at or below the frontier (0 for non-roots).
    pub fn mult(&self, alpha: &RootVector) -> Option<BigUint> {
        if alpha.height() > self.frontier || !alpha.is_positive() {
            return None;
        }
        Some(self.entries.get(alpha).cloned().unwrap_or_default())
    }

    /// Stored entries sorted by (height, coordinates).
    pub fn entries(&self) -> Vec<(&RootVector, &BigUint)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.height().cmp(&b.0.height()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// Positive roots (nonzero entries) of height `<= max_height`, sorted.
    pub fn roots(&self, max_height: i64) -> Vec<(RootVector, BigUint)> {
        self.entries()
            .into_iter()
            .filter(|(k, m)| k.height() <= max_height && **m != BigUint::default())
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect()
    }

    pub(crate) fn check_matches(&self, g: &Gcm) -> Result<()> {
        if &self.gcm != g {
            return Err(Error::Cache(format!("table belongs to matrix {}, not {g}", self.gcm)));
        }
        Ok(())
    }

    /// Rebuilds a table from stored roots, recomputing the `c` support.
    pub(crate) fn from_entries(g: &Gcm, frontier: i64, entries: HashMap<RootVector, BigUint>) -> Result<Self> {
        let d = g.symmetrizer().ok_or(Error::NotSymmetrizable)?;
        let mut c: HashMap<RootVector, BigRational> = HashMap::new();
        for (root, m) in &entries {
            if m == &BigUint::default() {
                continue;
            }
            let h = root.height();
            let mut k = 1;
            while k * h <= frontier {
                *c.entry(root * k).or_default() += BigRational::new(BigInt::from(m.clone()), BigInt::from(k));
                k += 1;
            }
        }
        let mut shells: Vec<Vec<Supported>> = vec![Vec::new(); frontier as usize + 1];
        let mut sorted: Vec<_> = c.into_iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        for (beta, c) in sorted {
            shells[beta.height() as usize].push(Supported {
                image: peterson::image(g, d, &beta),
                beta,
                c,
            });
        }
        Ok(MultTable {
            gcm: g.clone(),
            gcm_hash: g.content_hash(),
            frontier,
            entries,
            shells,
        })
    }
}

/// `l^{|height(alpha)|}` with `l` the number of simple roots.
pub fn coarse_bound(g: &Gcm, alpha: &RootVector) -> BigUint {
    let exp = alpha.height().unsigned_abs();
    num_traits::pow::pow(BigUint::from(g.rank()), exp as usize)
}
