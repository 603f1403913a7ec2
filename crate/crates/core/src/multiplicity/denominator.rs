//! Truncated denominator identity
//! `prod_{alpha > 0} (1 - e(-alpha))^mult(alpha) = sum_w (-1)^l(w) e(-s(w))`,
//! with `e(-beta)` stored under the key `beta`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::MultTable;
use crate::cartan::Gcm;
use crate::error::Result;
use crate::lattice::RootVector;
use crate::roots::enumerate_weyl_sums;

/// Finitely supported integer combination of `e(-beta)`, `beta in Q+`,
/// truncated at height `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSeries {
    rank: usize,
    bound: i64,
    terms: BTreeMap<RootVector, BigInt>,
}

impl LatticeSeries {
    pub fn one(rank: usize, bound: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(RootVector::zero(rank), BigInt::one());
        LatticeSeries { rank, bound, terms }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn coefficient(&self, beta: &RootVector) -> BigInt {
        self.terms.get(beta).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RootVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, beta: RootVector, c: BigInt) {
        if beta.height() > self.bound || c.is_zero() {
            return;
        }
        let e = self.terms.entry(beta.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&beta);
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &LatticeSeries) -> LatticeSeries {
        let bound = self.bound.min(other.bound);
        let mut out = LatticeSeries {
            rank: self.rank,
            bound,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.height() + b.height() <= bound {
                    *out.terms.entry(a + b).or_default() += x * y;
                }
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// Multiplies in place by `(1 - e(-alpha))^m`.
    pub fn mul_binomial_power(&mut self, alpha: &RootVector, m: &BigInt) {
        let h = alpha.height();
        let kmax = if h > 0 { self.bound / h } else { 0 };
        // (1 - x)^m = sum_k (-1)^k C(m, k) x^k
        let mut coeffs = vec![BigInt::one()];
        for k in 1..=kmax {
            let prev = coeffs.last().unwrap();
            let next = -(prev * (m - BigInt::from(k - 1))) / BigInt::from(k);
            if next.is_zero() {
                break;
            }
            coeffs.push(next);
        }
        if coeffs.len() == 1 {
            return;
        }
        let mut out: BTreeMap<RootVector, BigInt> = BTreeMap::new();
        for (beta, x) in &self.terms {
            for (k, c) in coeffs.iter().enumerate() {
                let shift = alpha * k as i64;
                if beta.height() + shift.height() > self.bound {
                    break;
                }
                *out.entry(beta + &shift).or_default() += x * c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        self.terms = out;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub vector: RootVector,
    pub product_side: String,
    pub sum_side: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorReport {
    pub height: i64,
    pub product_terms: usize,
    pub sum_terms: usize,
    pub mismatches: Vec<Mismatch>,
}

impl DenominatorReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Both sides of the denominator identity up to height `max_height`, the
/// product side from Peterson multiplicities in `table` and the sum side from
/// the Weyl sums, and every coefficient where they differ.
pub fn verify_denominator_identity(g: &Gcm, max_height: i64, table: &mut MultTable) -> Result<DenominatorReport> {
    table.check_matches(g)?;
    table.extend_to(max_height)?;
    let n = g.rank();

    let mut product = LatticeSeries::one(n, max_height);
    for (root, m) in table.roots(max_height) {
        product.mul_binomial_power(&root, &BigInt::from(m));
    }

    let mut sum = LatticeSeries::one(n, max_height);
    for w in enumerate_weyl_sums(g, max_height) {
        // (-1)^l(w) = -epsilon(s(w))
        sum.add_term(w.sw.clone(), BigInt::from(-w.epsilon()));
    }

    let mut keys: Vec<&RootVector> = product.terms.keys().chain(sum.terms.keys()).collect();
    keys.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    keys.dedup();
    let mismatches = keys
        .into_iter()
        .filter_map(|k| {
            let (l, r) = (product.coefficient(k), sum.coefficient(k));
            (l != r).then(|| Mismatch {
                vector: k.clone(),
                product_side: l.to_string(),
                sum_side: r.to_string(),
            })
        })
        .collect();
    Ok(DenominatorReport {
        height: max_height,
        product_terms: product.terms.len(),
        sum_terms: sum.terms.len(),
        mismatches,
    })
}
