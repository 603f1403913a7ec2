//! Berman-Moody closed form:
//!
//! ```text
//! mult(alpha) = sum_{lambda | alpha} mu(alpha/lambda) (lambda/alpha)
//!               sum_{(n) in S(lambda)} prod eps(s_i)^{n_i} ((sum n_i) - 1)! / prod n_i!
//! ```
//!
//! where `s_1, s_2, ...` are the Weyl sums `s(w)`, `w != 1`, in increasing
//! height and `S(lambda)` is the set of nonnegative solutions of
//! `sum n_i s_i = lambda`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;
use crate::roots::{enumerate_weyl_sums, WeylElement};

/// `S(lambda)` as coefficient tuples over the listed Weyl sums.
#[derive(Clone, Debug)]
pub struct TupleSet {
    pub sums: Vec<WeylElement>,
    pub tuples: Vec<Vec<u64>>,
}

/// Calls `emit` with the coefficient of every Weyl sum for each solution of
/// `sum n_i s_i = lambda`. Simple roots form a basis, so only the non-simple
/// sums are searched; the residual then fixes the simple coefficients.
fn for_each_solution(sums: &[WeylElement], lambda: &RootVector, mut emit: impl FnMut(&[u64])) {
    let simple_slot: Vec<(usize, usize)> = sums
        .iter()
        .enumerate()
        .filter_map(|(k, w)| w.sw.simple_index().map(|i| (k, i)))
        .collect();
    let nonsimple: Vec<usize> = (0..sums.len())
        .filter(|&k| sums[k].length > 1 && sums[k].sw.le_componentwise(lambda))
        .collect();

    fn rec(
        sums: &[WeylElement],
        nonsimple: &[usize],
        simple_slot: &[(usize, usize)],
        residual: &RootVector,
        counts: &mut Vec<u64>,
        emit: &mut dyn FnMut(&[u64]),
    ) {
        let Some((&k, rest)) = nonsimple.split_first() else {
            for &(slot, i) in simple_slot {
                counts[slot] = residual[i] as u64;
            }
            emit(counts);
            return;
        };
        let s = &sums[k].sw;
        let mut r = residual.clone();
        let mut n = 0;
        loop {
            counts[k] = n;
            rec(sums, rest, simple_slot, &r, counts, emit);
            r = &r - s;
            if !r.coords().iter().all(|&c| c >= 0) {
                break;
            }
            n += 1;
        }
        counts[k] = 0;
    }

    let mut counts = vec![0u64; sums.len()];
    rec(sums, &nonsimple, &simple_slot, lambda, &mut counts, &mut emit);
}

fn weyl_sums_below(g: &Gcm, lambda: &RootVector) -> Vec<WeylElement> {
    enumerate_weyl_sums(g, lambda.height())
}

/// `S(lambda)` over all Weyl sums of height `<= height(lambda)`.
pub fn solution_set(g: &Gcm, lambda: &RootVector) -> Result<TupleSet> {
    g.check_vector(lambda)?;
    if !lambda.is_positive() {
        return Err(Error::NotPositive(lambda.clone()));
    }
    let sums = weyl_sums_below(g, lambda);
    let mut tuples = Vec::new();
    for_each_solution(&sums, lambda, |t| tuples.push(t.to_vec()));
    tuples.sort_by(|a, b| b.cmp(a));
    Ok(TupleSet { sums, tuples })
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        f[k] = &f[k - 1] * BigInt::from(k);
    }
    f
}

/// Inner sum of the formula for one `lambda`.
fn weighted_count(sums: &[WeylElement], lambda: &RootVector, fact: &[BigInt]) -> BigRational {
    let mut total = BigRational::zero();
    for_each_solution(sums, lambda, |counts| {
        let parts: u64 = counts.iter().sum();
        let mut den = BigInt::one();
        let mut negative = false;
        for (k, &n) in counts.iter().enumerate() {
            if n == 0 {
                continue;
            }
            den *= &fact[n as usize];
            if sums[k].epsilon() < 0 && n % 2 == 1 {
                negative = !negative;
            }
        }
        let term = BigRational::new(fact[parts as usize - 1].clone(), den);
        if negative {
            total -= term;
        } else {
            total += term;
        }
    });
    total
}

fn mobius(mut n: i64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Multiplicity of `alpha` by the Berman-Moody formula.
pub fn mult_berman_moody(g: &Gcm, alpha: &RootVector) -> Result<BigUint> {
    if !g.is_symmetrizable() {
        return Err(Error::NotSymmetrizable);
    }
    g.require_indecomposable()?;
    g.check_vector(alpha)?;
    if !alpha.is_positive() {
        return Err(Error::NotPositive(alpha.clone()));
    }
    let sums = weyl_sums_below(g, alpha);
    let fact = factorials(alpha.height() as usize);
    let content = alpha.content();
    let mut total = BigRational::zero();
    for r in 1..=content {
        if content % r != 0 {
            continue;
        }
        let mu = mobius(r);
        if mu == 0 {
            continue;
        }
        let lambda = alpha.divide(r).expect("r divides the content");
        let inner = weighted_count(&sums, &lambda, &fact);
        total += inner * BigRational::new(BigInt::from(mu), BigInt::from(r));
    }
    if !total.is_integer() || total.is_negative() {
        return Err(Error::Integrality {
            vector: alpha.clone(),
            value: total.to_string(),
        });
    }
    Ok(total.to_integer().to_biguint().expect("nonnegative"))
}
