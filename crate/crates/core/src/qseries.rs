//! Truncated integer power series in `q` and the named coefficient sequences
//! built from the Euler product `phi(q) = prod_{n >= 1} (1 - q^n)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub const DEFAULT_ORDER: usize = 256;

/// `sum_{n=0}^{order} coeffs[n] q^n + O(q^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `c q^k`, or zero when `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`; panics above the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(n <= self.order, "q^{n} is beyond the truncation order {}", self.order);
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        PowerSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Inverse when the constant term is a unit (`+-1`).
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return None;
        }
        let n = self.order;
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone();
        // sparse inputs (phi, its powers) make skipping zeros worthwhile
        let nz: Vec<usize> = (1..=n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for &k in nz.iter().take_while(|&&k| k <= m) {
                acc += &self.coeffs[k] * &inv[m - k];
            }
            inv[m] = -(acc * c0);
        }
        Some(PowerSeries { order: n, coeffs: inv })
    }

    /// `f(q^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution q -> q^0 is not a power series operation");
        let mut s = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > self.order {
                break;
            }
            s.coeffs[i * k] = c.clone();
        }
        s
    }

    /// `q^k f(q)`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            if i + k <= self.order {
                s.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        s
    }

    /// `q^{-k} f(q)`; the result has order `order - k`. `None` if a dropped
    /// coefficient (below `q^k`) is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if k > self.order || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(PowerSeries {
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(PowerSeries {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries {
            order,
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        PowerSeries {
            order,
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { order, coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `phi(q)` from the pentagonal number theorem:
/// `sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`.
pub fn phi_series(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    s.coeffs[0] = BigInt::one();
    for k in 1usize.. {
        let a = k * (3 * k - 1) / 2;
        if a > order {
            break;
        }
        let sign = if k % 2 == 1 { -1 } else { 1 };
        s.coeffs[a] += sign;
        let b = k * (3 * k + 1) / 2;
        if b <= order {
            s.coeffs[b] += sign;
        }
    }
    s
}

/// `1/phi(q)`, the partition generating function.
pub fn partitions(order: usize) -> PowerSeries {
    phi_series(order).inverse().expect("phi has constant term 1")
}

/// `1/phi(q)^l`: partitions into parts of `l` colors.
pub fn colored_partitions(colors: u32, order: usize) -> PowerSeries {
    partitions(order).pow(colors)
}

/// `1/phi(q)^8 * (1 - phi(q^2)/phi(q^4))`.
pub fn xi_series(order: usize) -> PowerSeries {
    let phi = phi_series(order);
    let ratio = &phi.compose_power(2) * &phi.compose_power(4).inverse().expect("unit constant term");
    let bracket = &PowerSeries::one(order) - &ratio;
    &colored_partitions(8, order) * &bracket
}

/// The prefactor `(1 - q^20 + q^22 - q^24 + q^26 - 2q^28 + ...)` that turns
/// `sum p(n) q^n` into the level-two series, as printed through `q^28`.
pub const FF_LEVEL2_PREFIX: [(usize, i64); 6] = [(0, 1), (20, -1), (22, 1), (24, -1), (26, 1), (28, -2)];

/// Level-two multiplicity series of the rank-3 hyperbolic algebra:
///
/// ```text
/// sum M(n-1) q^n = q^{-3}/2 * P(q) * prod (1 - q^{4j-2})
///                  * (prod (1 + q^{2j-1}) - prod (1 - q^{2j-1}) - 2q)
/// ```
///
/// with `P(q) = sum p(n) q^n`. The product is formed to order `order + 3`, its
/// first three coefficients must vanish and all others must be even.
pub fn ff_level2_series(order: usize) -> PowerSeries {
    let n = order + 3;
    let phi = phi_series(n);
    let p = partitions(n);
    // prod (1 - q^{4j-2}) = phi(q^2) / phi(q^4)
    let even = &phi.compose_power(2) * &phi.compose_power(4).inverse().expect("unit");
    // prod (1 - q^{2j-1}) = phi(q) / phi(q^2), prod (1 + q^{2j-1}) = phi(q^2)^2 / (phi(q) phi(q^4))
    let phi2_inv = phi.compose_power(2).inverse().expect("unit");
    let minus = &phi * &phi2_inv;
    let plus = &(&phi.compose_power(2).pow(2) * &p) * &phi.compose_power(4).inverse().expect("unit");
    let bracket = &(&plus - &minus) - &PowerSeries::monomial(n, 1, BigInt::from(2));
    let full = &(&p * &even) * &bracket;
    let shifted = full.shift_down(3).expect("the level-two product starts at q^3");
    let out = shifted
        .div_exact(&BigInt::from(2))
        .expect("the level-two product has even coefficients");
    debug_assert!(matches_ff_prefix(&out));
    out
}

/// Whether `s` agrees with `FF_LEVEL2_PREFIX * P(q)` through `q^28` (or its order).
pub fn matches_ff_prefix(s: &PowerSeries) -> bool {
    let top = s.order().min(28);
    let mut prefix = PowerSeries::zero(top);
    for (k, c) in FF_LEVEL2_PREFIX {
        if k <= top {
            prefix.coeffs[k] = BigInt::from(c);
        }
    }
    &prefix * &partitions(top) == s.truncate(top)
}

/// `1/(phi(q) phi(q^23))`: the `q^{1/24} q^{23/24}` from the two eta factors
/// cancels the leading `q`, leaving an integral series.
pub fn p_sigma_series(order: usize) -> PowerSeries {
    let phi = phi_series(order);
    (&phi * &phi.compose_power(23)).inverse().expect("unit constant term")
}

/// `q phi(q)^24 = sum tau(n) q^n`.
pub fn tau_series(order: usize) -> PowerSeries {
    phi_series(order).pow(24).shift_up(1)
}

/// Named sequences as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    P,
    ColoredP(u32),
    Xi,
    FfLevel2,
    PSigma,
    Tau,
}

impl SeriesName {
    pub fn parse(name: &str, colors: u32) -> Option<Self> {
        Some(match name {
            "p" => SeriesName::P,
            "p_l" => SeriesName::ColoredP(colors),
            "xi" => SeriesName::Xi,
            "ff_level2" => SeriesName::FfLevel2,
            "p_sigma" => SeriesName::PSigma,
            "tau" => SeriesName::Tau,
            _ => return None,
        })
    }

    pub fn label(&self) -> String {
        match self {
            SeriesName::P => "p".into(),
            SeriesName::ColoredP(l) => format!("p_l({l})"),
            SeriesName::Xi => "xi".into(),
            SeriesName::FfLevel2 => "ff_level2".into(),
            SeriesName::PSigma => "p_sigma".into(),
            SeriesName::Tau => "tau".into(),
        }
    }

    pub fn compute(&self, order: usize) -> PowerSeries {
        match *self {
            SeriesName::P => partitions(order),
            SeriesName::ColoredP(l) => colored_partitions(l, order),
            SeriesName::Xi => xi_series(order),
            SeriesName::FfLevel2 => ff_level2_series(order),
            SeriesName::PSigma => p_sigma_series(order),
            SeriesName::Tau => tau_series(order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries, n: usize) -> Vec<i64> {
        s.coeffs()[..n].iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn pentagonal() {
        assert_eq!(
            ints(&phi_series(16), 17),
            vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0]
        );
    }

    #[test]
    fn partition_numbers() {
        let p = partitions(100);
        assert_eq!(ints(&p, 12), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]);
        assert_eq!(p.coeff(100).to_string(), "190569292");
    }

    #[test]
    fn colored() {
        assert_eq!(colored_partitions(1, 10).coeff(4), &BigInt::from(5));
        assert_eq!(colored_partitions(8, 10).coeff(4), &BigInt::from(726));
        assert_eq!(colored_partitions(24, 10).coeff(1), &BigInt::from(24));
        assert_eq!(ints(&colored_partitions(2, 11), 12), vec![1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, 752]);
    }

    #[test]
    fn xi_values() {
        let xi = xi_series(10);
        assert_eq!(ints(&xi, 7), vec![0, 0, 1, 8, 44, 192, 727]);
    }

    #[test]
    fn tau_values() {
        let t = tau_series(8);
        assert_eq!(ints(&t, 8), vec![0, 1, -24, 252, -1472, 4830, -6048, -16744]);
    }

    #[test]
    fn p_sigma_values() {
        let s = p_sigma_series(40);
        let p = partitions(40);
        assert_eq!(s.coeffs()[..23], p.coeffs()[..23]);
        assert_eq!(s.coeff(26), &BigInt::from(2439));
        assert_eq!(s.coeff(29), &BigInt::from(4576));
    }

    #[test]
    fn ff_level2_prefix() {
        let s = ff_level2_series(40);
        assert!(matches_ff_prefix(&s));
        assert_eq!(s.coeff(11), &BigInt::from(56));
        assert!(s.is_nonnegative());
    }

    #[test]
    fn shifts_and_composition() {
        let s = PowerSeries::from_coeffs(5, [1, 2, 3]);
        assert_eq!(ints(&s.compose_power(2), 6), vec![1, 0, 2, 0, 3, 0]);
        assert_eq!(ints(&s.shift_up(2), 6), vec![0, 0, 1, 2, 3, 0]);
        assert_eq!(s.shift_up(2).shift_down(2).unwrap().order(), 3);
        assert!(s.shift_down(1).is_none());
        assert!(PowerSeries::from_coeffs(3, [2, 1]).inverse().is_none());
    }

    #[test]
    fn display() {
        let s = PowerSeries::from_coeffs(3, [1, -2, 0, 1]);
        assert_eq!(s.to_string(), "1 - 2q^1 + q^3 + O(q^4)");
    }
}
