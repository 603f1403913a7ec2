//! Main terms of the Hardy-Ramanujan-Rademacher expansions for `p_sigma(n)`
//! and `p(n)`, in double precision.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::serialize_big_opt;
use crate::error::{Error, Result};
use crate::qseries::{p_sigma_series, partitions};

/// Arguments up to this value use the ascending series, larger ones the
/// large-argument expansion. Both agree to about 1e-14 relative here.
pub const BESSEL_SWITCHOVER: f64 = 30.0;

/// Modified Bessel function of the first kind `I_nu(x)` for integer `nu >= 0`
/// and `x >= 0`. Returns `+inf` once `e^x` overflows.
pub fn bessel_i(nu: u32, x: f64) -> f64 {
    assert!(x >= 0.0, "bessel_i is evaluated for x >= 0 only");
    if x <= BESSEL_SWITCHOVER {
        ascending(nu, x)
    } else {
        large_argument(nu, x)
    }
}

/// `sum_m (x/2)^{2m+nu} / (m! (m+nu)!)`; every term is positive, so there is
/// no cancellation.
fn ascending(nu: u32, x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = (1..=nu).fold(1.0, |t, k| t * half / k as f64);
    let mut sum = term;
    let q = half * half;
    for m in 1.. {
        term *= q / (m as f64 * (m + nu) as f64);
        sum += term;
        if term <= sum * 1e-17 {
            break;
        }
    }
    sum
}

/// `e^x / sqrt(2 pi x) * sum_k (-1)^k prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! (8x)^k)`,
/// stopped at the smallest term.
fn large_argument(nu: u32, x: f64) -> f64 {
    let mu = 4.0 * (nu as f64).powi(2);
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for k in 1..60 {
        let next = -term * (mu - ((2 * k - 1) as f64).powi(2)) / (k as f64 * 8.0 * x);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    let scale = x.exp() / (2.0 * PI * x).sqrt();
    if scale.is_infinite() {
        return f64::INFINITY;
    }
    scale * sum
}

pub fn bessel_i2(x: f64) -> f64 {
    bessel_i(2, x)
}

/// `2 pi / (n sqrt 23) * I_2(4 pi sqrt(n) / sqrt 23)`, the main term for `p_sigma(n + 1)`.
pub fn hrr_main_term(n: u64) -> f64 {
    assert!(n >= 1, "the main term is defined for n >= 1");
    let n = n as f64;
    let s23 = 23f64.sqrt();
    2.0 * PI / (n * s23) * bessel_i2(4.0 * PI * n.sqrt() / s23)
}

/// `n^{-1/2} I_2(2 pi sqrt(n) / sqrt 23)`, the size of the error term (no constant).
pub fn hrr_error_scale(n: u64) -> f64 {
    assert!(n >= 1, "the error scale is defined for n >= 1");
    let n = n as f64;
    bessel_i2(2.0 * PI * n.sqrt() / 23f64.sqrt()) / n.sqrt()
}

/// `e^{pi sqrt(2n/3)} / (4 n sqrt 3)`.
pub fn classical_partition_main(n: u64) -> f64 {
    assert!(n >= 1, "the asymptotic is defined for n >= 1");
    let n = n as f64;
    (PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * n * 3f64.sqrt())
}

/// Index `n = -(a|a)/2` whose main term estimates `p_sigma(n + 1)`, the
/// Niemann bound at a root of norm `(a|a)`.
pub fn index_from_norm(norm: i64) -> Result<u64> {
    if norm % 2 != 0 || norm >= 0 {
        return Err(Error::OddNorm(norm));
    }
    Ok((-norm / 2) as u64)
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticEstimate {
    pub n: u64,
    pub main_term: f64,
    #[serde(serialize_with = "serialize_big_opt")]
    pub exact: Option<BigInt>,
    pub relative_error: Option<f64>,
    /// Magnitude of the neglected error term, as a diagnostic.
    pub error_scale: Option<f64>,
}

fn relative(main: f64, exact: &BigInt) -> Option<f64> {
    let e = exact.to_f64()?;
    (e != 0.0).then(|| (main - e).abs() / e)
}

/// Main term for `p_sigma(n + 1)`, with the exact value when `n + 1 <= order`.
pub fn estimate_p_sigma(n: u64, order: usize) -> AsymptoticEstimate {
    let main_term = hrr_main_term(n);
    let idx = n as usize + 1;
    let exact = (idx <= order).then(|| p_sigma_series(idx).coeff(idx).clone());
    AsymptoticEstimate {
        n,
        main_term,
        relative_error: exact.as_ref().and_then(|e| relative(main_term, e)),
        exact,
        error_scale: Some(hrr_error_scale(n)),
    }
}

/// Classical main term for `p(n)`, with the exact value when `n <= order`.
pub fn estimate_partitions(n: u64, order: usize) -> AsymptoticEstimate {
    let main_term = classical_partition_main(n);
    let idx = n as usize;
    let exact = (idx <= order).then(|| partitions(idx).coeff(idx).clone());
    AsymptoticEstimate {
        n,
        main_term,
        relative_error: exact.as_ref().and_then(|e| relative(main_term, e)),
        exact,
        error_scale: None,
    }
}
