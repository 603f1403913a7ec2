//! Peterson's recursion, filled height shell by height shell.
//!
//! With `c_beta = sum_{k >= 1} mult(beta / k) / k` the denominator identity gives
//!
//! ```text
//! ((beta | beta) - 2 (rho | beta)) c_beta = sum_{beta' + beta'' = beta} (beta' | beta'') c_beta' c_beta''
//! ```
//!
//! over ordered pairs in `Q+`. `c` is supported on positive multiples of roots,
//! so the right-hand side is accumulated sparsely from pairs of supported
//! vectors of lower height; any vector that no pair reaches has `c = 0`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::MultTable;
use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;
use crate::roots::{bilinear_with, is_real_root};

type Found = (RootVector, BigUint);

/// A vector with `c_beta != 0`.
#[derive(Clone, Debug)]
pub(crate) struct Supported {
    pub beta: RootVector,
    /// `B beta`, so that `(beta | gamma) = <B beta, gamma>`.
    pub image: Vec<i64>,
    pub c: BigRational,
}

/// Pair sums destined for one target vector; integral products are kept apart
/// from fractional ones to avoid rational normalization on the common path.
#[derive(Default)]
struct Accum {
    int: BigInt,
    frac: Option<BigRational>,
}

impl Accum {
    fn add(&mut self, factor: i64, a: &BigRational, b: &BigRational) {
        if a.is_integer() && b.is_integer() {
            self.int += a.numer() * b.numer() * factor;
        } else {
            let t = a * b * BigInt::from(factor);
            match &mut self.frac {
                Some(f) => *f += t,
                None => self.frac = Some(t),
            }
        }
    }

    fn merge(&mut self, other: Accum) {
        self.int += other.int;
        if let Some(t) = other.frac {
            match &mut self.frac {
                Some(f) => *f += t,
                None => self.frac = Some(t),
            }
        }
    }

    fn total(self) -> BigRational {
        let int = BigRational::from_integer(self.int);
        match self.frac {
            Some(f) => int + f,
            None => int,
        }
    }
}

type ShellSums = HashMap<RootVector, Accum>;

fn merge_maps(mut a: ShellSums, b: ShellSums) -> ShellSums {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, v) in b {
        a.entry(k).or_default().merge(v);
    }
    a
}

pub(crate) fn image(g: &Gcm, d: &[i64], beta: &RootVector) -> Vec<i64> {
    let n = g.rank();
    (0..n)
        .map(|j| (0..n).map(|i| beta[i] * d[i] * g.entry(i, j)).sum())
        .collect()
}

#[inline]
fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Right-hand sides of the recursion for every vector of height `h` reached by a pair.
fn pair_sums(shells: &[Vec<Supported>], h: usize) -> ShellSums {
    let tasks: Vec<(usize, usize)> = (1..=h / 2)
        .flat_map(|h1| (0..shells[h1].len()).map(move |i| (h1, i)))
        .collect();
    let work = |mut acc: ShellSums, &(h1, i): &(usize, usize)| {
        let h2 = h - h1;
        let x = &shells[h1][i];
        let start = if h1 == h2 { i } else { 0 };
        for (j, y) in shells[h2].iter().enumerate().skip(start) {
            let form = dot(&x.image, y.beta.coords());
            if form == 0 {
                continue;
            }
            // ordered pairs: off-diagonal terms twice, the diagonal pair once
            let f = if h1 == h2 && j == i { 1 } else { 2 };
            acc.entry(&x.beta + &y.beta).or_default().add(f * form, &x.c, &y.c);
        }
        acc
    };
    if tasks.len() < 64 {
        tasks.iter().fold(ShellSums::new(), work)
    } else {
        tasks
            .par_iter()
            .fold(ShellSums::new, work)
            .reduce(ShellSums::new, merge_maps)
    }
}

/// `sum_{k >= 2, k | beta} mult(beta / k) / k`.
fn divisor_part(entries: &HashMap<RootVector, BigUint>, beta: &RootVector) -> BigRational {
    let content = beta.content();
    let mut s = BigRational::zero();
    for k in 2..=content {
        if content % k != 0 {
            continue;
        }
        if let Some(m) = beta.divide(k).and_then(|v| entries.get(&v)) {
            if !m.is_zero() {
                s += BigRational::new(BigInt::from(m.clone()), BigInt::from(k));
            }
        }
    }
    s
}

fn to_multiplicity(beta: &RootVector, value: BigRational) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Integrality {
            vector: beta.clone(),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

impl MultTable {
    /// Extends the table until every vector of height `<= max_height` is
    /// resolved, invoking `after_shell` once each new shell is complete.
    pub fn extend_to_with<F>(&mut self, max_height: i64, mut after_shell: F) -> Result<()>
    where
        F: FnMut(&MultTable) -> Result<()>,
    {
        let g = self.gcm.clone();
        let d = g.symmetrizer().ok_or(Error::NotSymmetrizable)?.to_vec();
        g.require_indecomposable()?;
        while self.frontier < max_height {
            let h = (self.frontier + 1) as usize;
            self.compute_shell(&g, &d, h)?;
            after_shell(self)?;
        }
        Ok(())
    }

    pub fn extend_to(&mut self, max_height: i64) -> Result<()> {
        self.extend_to_with(max_height, |_| Ok(()))
    }

    pub(crate) fn compute_shell(&mut self, g: &Gcm, d: &[i64], h: usize) -> Result<()> {
        let (support, roots) = self.solve_shell(g, d, h)?;
        self.shells.truncate(h);
        self.shells.resize(h, Vec::new());
        self.shells.push(support);
        self.entries.retain(|k, _| k.height() < h as i64);
        self.entries.extend(roots);
        self.frontier = h as i64;
        Ok(())
    }

    /// Computes shell `h` from the supported vectors of lower height without
    /// modifying the table. Returns the new support and the roots found.
    pub(crate) fn solve_shell(
        &self,
        g: &Gcm,
        d: &[i64],
        h: usize,
    ) -> Result<(Vec<Supported>, Vec<Found>)> {
        let n = g.rank();
        if h == 1 {
            let support = (0..n)
                .map(|i| {
                    let beta = RootVector::simple(n, i);
                    Supported {
                        image: image(g, d, &beta),
                        beta,
                        c: BigRational::from_integer(1.into()),
                    }
                })
                .collect::<Vec<_>>();
            let roots = support.iter().map(|s| (s.beta.clone(), BigUint::from(1u32))).collect();
            return Ok((support, roots));
        }
        let sums = pair_sums(&self.shells, h);
        let mut solved: Vec<(RootVector, BigRational, BigUint)> = sums
            .into_par_iter()
            .map(|(beta, acc)| {
                let rhs = acc.total();
                let norm = bilinear_with(g, d, beta.coords(), beta.coords());
                let rho: i64 = beta.coords().iter().zip(d).map(|(c, di)| c * di).sum();
                let divisor = norm - 2 * rho;
                let lower = divisor_part(&self.entries, &beta);
                let (c, mult) = if divisor != 0 {
                    let c = rhs / BigInt::from(divisor);
                    let m = to_multiplicity(&beta, &c - &lower)?;
                    (c, m)
                } else {
                    // The identity forces rhs = 0 here; mult(beta) comes from the
                    // root test instead (imaginary roots never hit a zero divisor).
                    if !rhs.is_zero() {
                        return Err(Error::DegenerateDivisor(beta));
                    }
                    let m = BigUint::from(is_real_root(g, &beta) as u32);
                    let c = BigRational::from_integer(BigInt::from(m.clone())) + lower;
                    (c, m)
                };
                Ok((beta, c, mult))
            })
            .collect::<Result<_>>()?;
        solved.sort_by(|a, b| a.0.cmp(&b.0));
        let mut support = Vec::new();
        let mut roots = Vec::new();
        for (beta, c, mult) in solved {
            if !mult.is_zero() {
                roots.push((beta.clone(), mult));
            }
            if !c.is_zero() {
                support.push(Supported {
                    image: image(g, d, &beta),
                    beta,
                    c,
                });
            }
        }
        Ok((support, roots))
    }
}

/// Multiplicity of `alpha` by Peterson's recursion, extending `table` as needed.
/// Non-roots of `Q+` get 0 and are recorded as explicit zeros.
pub fn mult_peterson(g: &Gcm, alpha: &RootVector, table: &mut MultTable) -> Result<BigUint> {
    mult_peterson_with(g, alpha, table, |_| Ok(()))
}

/// As [`mult_peterson`], calling `after_shell` after each newly completed shell.
pub fn mult_peterson_with<F>(g: &Gcm, alpha: &RootVector, table: &mut MultTable, after_shell: F) -> Result<BigUint>
where
    F: FnMut(&MultTable) -> Result<()>,
{
    table.check_matches(g)?;
    g.check_vector(alpha)?;
    if !alpha.is_positive() {
        return Err(Error::NotPositive(alpha.clone()));
    }
    table.extend_to_with(alpha.height(), after_shell)?;
    Ok(table.entries.entry(alpha.clone()).or_default().clone())
}
