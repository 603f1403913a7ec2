//! Multiplicity bounds of Frenkel, Borcherds and Niemann, and reports that
//! compare them with computed multiplicities.
//!
//! With `n = 1 - (a|a)/2`:
//!
//! ```text
//! frenkel   p^(d-2)(n)
//! borcherds p^(d-1)(n) - p^(d-1)(n - 1)
//! niemann   p_sigma(n)                      (rank-3 algebra F only)
//! ```
//!
//! Only symmetric matrices are accepted, so `(a_i|a_i) = 2` throughout.

use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;
use crate::multiplicity::MultTable;
use crate::presets;
use crate::qseries::{colored_partitions, p_sigma_series, xi_series, PowerSeries};
use crate::roots::norm;

/// Serializes a big integer as a JSON number when it fits in 64 bits and as a
/// decimal string otherwise.
pub(crate) fn serialize_big<S: Serializer, T: ToString + Clone + TryInto<i64>>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    match v.clone().try_into() {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_big_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => serialize_big(x, s),
        None => s.serialize_none(),
    }
}

/// `n = 1 - (a|a)/2`, rejecting odd norms and norms above 2.
pub fn bound_index(norm: i64) -> Result<usize> {
    if norm % 2 != 0 || norm > 2 {
        return Err(Error::OddNorm(norm));
    }
    Ok((1 - norm / 2) as usize)
}

fn check_dimension(d: u32) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidDimension(d));
    }
    Ok(())
}

fn symmetric_norm(g: &Gcm, alpha: &RootVector) -> Result<i64> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    norm(g, alpha)
}

pub fn is_f(g: &Gcm) -> bool {
    *g == presets::f()
}

fn coeff_or_zero(s: &PowerSeries, n: i64) -> BigInt {
    if n < 0 {
        BigInt::default()
    } else {
        s.coeff(n as usize).clone()
    }
}

/// `p^(d-2)(1 - (a|a)/2)`.
pub fn frenkel_bound(alpha: &RootVector, d: u32, g: &Gcm) -> Result<BigInt> {
    check_dimension(d)?;
    let n = bound_index(symmetric_norm(g, alpha)?)?;
    Ok(colored_partitions(d - 2, n).coeff(n).clone())
}

/// `p^(d-1)(1 - (a|a)/2) - p^(d-1)(-(a|a)/2)`, with `p(-1) = 0` for real roots.
pub fn borcherds_bound(alpha: &RootVector, d: u32, g: &Gcm) -> Result<BigInt> {
    check_dimension(d)?;
    let n = bound_index(symmetric_norm(g, alpha)?)?;
    let p = colored_partitions(d - 1, n);
    Ok(coeff_or_zero(&p, n as i64) - coeff_or_zero(&p, n as i64 - 1))
}

/// Generic branch `p_sigma(1 - (a|a)/2)` of Niemann's bound for F.
pub fn niemann_bound(alpha: &RootVector, g: &Gcm) -> Result<BigInt> {
    if !is_f(g) {
        return Err(Error::WrongAlgebra);
    }
    let n = bound_index(norm(g, alpha)?)?;
    Ok(p_sigma_series(n).coeff(n).clone())
}

/// Roots whose norm is divisible by 46, where the second branch of Niemann's
/// bound (not evaluated here) could apply.
pub fn niemann_branch_flag(norm: i64) -> bool {
    norm < 0 && norm % 46 == 0
}

/// Series for evaluating many bounds at once; grown on demand.
#[derive(Clone, Debug)]
pub struct BoundTables {
    d: u32,
    order: usize,
    frenkel: PowerSeries,
    borcherds: PowerSeries,
    niemann: Option<PowerSeries>,
}

impl BoundTables {
    pub fn new(g: &Gcm, d: u32, order: usize) -> Result<Self> {
        check_dimension(d)?;
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(BoundTables {
            d,
            order,
            frenkel: colored_partitions(d - 2, order),
            borcherds: colored_partitions(d - 1, order),
            niemann: is_f(g).then(|| p_sigma_series(order)),
        })
    }

    fn ensure(&mut self, n: usize) {
        if n > self.order {
            let order = n.max(2 * self.order);
            self.frenkel = colored_partitions(self.d - 2, order);
            self.borcherds = colored_partitions(self.d - 1, order);
            if self.niemann.is_some() {
                self.niemann = Some(p_sigma_series(order));
            }
            self.order = order;
        }
    }

    pub fn row(&mut self, alpha: &RootVector, norm: i64, mult: &BigUint) -> Result<BoundRow> {
        let n = bound_index(norm)?;
        self.ensure(n);
        let frenkel = self.frenkel.coeff(n).clone();
        let borcherds = (norm <= 0)
            .then(|| coeff_or_zero(&self.borcherds, n as i64) - coeff_or_zero(&self.borcherds, n as i64 - 1));
        let niemann = match &self.niemann {
            Some(s) if norm <= 0 => Some(s.coeff(n).clone()),
            _ => None,
        };
        let m = BigInt::from(mult.clone());
        let mut violations = Vec::new();
        if m > frenkel {
            violations.push("frenkel");
        }
        if borcherds.as_ref().is_some_and(|b| &m > b) {
            violations.push("borcherds");
        }
        if niemann.as_ref().is_some_and(|b| &m > b) {
            violations.push("niemann");
        }
        Ok(BoundRow {
            alpha: alpha.clone(),
            norm,
            saturated: m == frenkel,
            violated: !violations.is_empty(),
            niemann_branch: self.niemann.is_some() && niemann_branch_flag(norm),
            mult: mult.clone(),
            frenkel,
            borcherds,
            niemann,
            violations,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub alpha: RootVector,
    pub norm: i64,
    #[serde(serialize_with = "serialize_biguint")]
    pub mult: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub frenkel: BigInt,
    #[serde(serialize_with = "serialize_big_opt")]
    pub borcherds: Option<BigInt>,
    #[serde(serialize_with = "serialize_big_opt")]
    pub niemann: Option<BigInt>,
    pub saturated: bool,
    pub violated: bool,
    /// Names of the bounds exceeded.
    pub violations: Vec<&'static str>,
    /// The norm is one where Niemann's unevaluated second branch might apply.
    pub niemann_branch: bool,
}

pub(crate) fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BoundSummary {
    pub roots: usize,
    pub violations: usize,
    pub saturated: usize,
    pub niemann_branch_flagged: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub gcm_id: String,
    pub d: u32,
    pub height: i64,
    pub rows: Vec<BoundRow>,
    pub summary: BoundSummary,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundRow> {
        self.rows.iter().filter(|r| r.violated)
    }
}

/// Compares every positive imaginary root of height `<= max_height` with the
/// bounds, computing multiplicities by Peterson's recursion in `table`.
pub fn check_frenkel(g: &Gcm, d: u32, max_height: i64, table: &mut MultTable) -> Result<BoundReport> {
    let mut tables = BoundTables::new(g, d, 64)?;
    table.extend_to(max_height)?;
    let mut rows = Vec::new();
    for (alpha, m) in table.roots(max_height) {
        let nrm = norm(g, &alpha)?;
        if nrm > 0 {
            continue;
        }
        rows.push(tables.row(&alpha, nrm, &m)?);
    }
    let summary = BoundSummary {
        roots: rows.len(),
        violations: rows.iter().filter(|r| r.violated).count(),
        saturated: rows.iter().filter(|r| r.saturated).count(),
        niemann_branch_flagged: rows.iter().filter(|r| r.niemann_branch).count(),
    };
    Ok(BoundReport {
        gcm_id: g.content_hash(),
        d,
        height: max_height,
        rows,
        summary,
    })
}

/// Level-two comparison for `E10`: `xi(3 - (a|a)/2)` against the Frenkel
/// bound `p^(8)(1 - (a|a)/2)`, evaluated on the series alone.
#[derive(Clone, Debug, Serialize)]
pub struct E10LevelTwo {
    pub norm: i64,
    #[serde(serialize_with = "serialize_big")]
    pub xi: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub frenkel: BigInt,
    pub violated: bool,
}

pub fn e10_level_two(norm: i64) -> Result<E10LevelTwo> {
    let n = bound_index(norm)?;
    let xi = xi_series(n + 2).coeff(n + 2).clone();
    let frenkel = colored_partitions(8, n).coeff(n).clone();
    Ok(E10LevelTwo {
        norm,
        violated: xi > frenkel,
        xi,
        frenkel,
    })
}
