//! Integer vectors over the simple-root basis.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Coordinates of a root-lattice element with respect to the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    /// The simple root `alpha_i` in a lattice of the given rank.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates nonnegative, i.e. an element of `Q+ \ {0}`.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && !self.is_zero()
    }

    /// Index `i` when the vector is exactly `alpha_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// `self / k` when every coordinate is divisible by `k`.
    pub fn divide(&self, k: i64) -> Option<RootVector> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(RootVector(self.0.iter().map(|c| c / k).collect()))
    }

    /// Indices with a nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl Index<usize> for RootVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, rhs: RootVector) -> RootVector {
        &self + &rhs
    }
}

impl AddAssign<&RootVector> for RootVector {
    fn add_assign(&mut self, rhs: &RootVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, rhs: RootVector) -> RootVector {
        &self - &rhs
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(mut self) -> RootVector {
        for c in &mut self.0 {
            *c = -*c;
        }
        self
    }
}

impl Mul<i64> for &RootVector {
    type Output = RootVector;
    fn mul(self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|c| c * k).collect())
    }
}

impl From<Vec<i64>> for RootVector {
    fn from(v: Vec<i64>) -> Self {
        RootVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for RootVector {
    fn from(v: [i64; N]) -> Self {
        RootVector(v.to_vec())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `(1,2,3)`, `1,2,3`, or a JSON array `[1,2,3]`.
impl FromStr for RootVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t);
        if inner.trim().is_empty() {
            return Err(Error::ParseVector(s.to_string()));
        }
        inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(RootVector)
            .map_err(|_| Error::ParseVector(s.to_string()))
    }
}

/// All vectors of `Q+` with the given height, in lexicographically increasing order.
pub fn vectors_of_height(rank: usize, height: i64) -> Vec<RootVector> {
    fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVector>) {
        if cur.len() + 1 == rank {
            cur.push(left);
            out.push(RootVector(cur.clone()));
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(rank, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 || height < 0 {
        return out;
    }
    rec(rank, height, &mut Vec::with_capacity(rank), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let v: RootVector = "(7,7,2)".parse().unwrap();
        assert_eq!(v, RootVector::from([7, 7, 2]));
        assert_eq!("4, 5".parse::<RootVector>().unwrap().coords(), &[4, 5]);
        assert_eq!("[1,0,-1]".parse::<RootVector>().unwrap().coords(), &[1, 0, -1]);
        assert!("(a,b)".parse::<RootVector>().is_err());
        assert!("()".parse::<RootVector>().is_err());
        assert_eq!(v.to_string(), "(7,7,2)");
    }

    #[test]
    fn basic_predicates() {
        let v = RootVector::from([2, 4, 0]);
        assert_eq!(v.height(), 6);
        assert_eq!(v.content(), 2);
        assert_eq!(v.divide(2), Some(RootVector::from([1, 2, 0])));
        assert_eq!(v.divide(3), None);
        assert!(v.is_positive());
        assert!(!RootVector::zero(3).is_positive());
        assert_eq!(RootVector::simple(3, 1).simple_index(), Some(1));
        assert_eq!(v.simple_index(), None);
        assert_eq!(v.support(), vec![0, 1]);
    }

    #[test]
    fn height_shell_enumeration() {
        let shell = vectors_of_height(3, 4);
        assert_eq!(shell.len(), 15);
        assert!(shell.windows(2).all(|w| w[0] < w[1]));
        assert!(shell.iter().all(|v| v.height() == 4 && v.is_positive()));
    }
}
