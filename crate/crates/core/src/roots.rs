//! Root-lattice arithmetic: the invariant form, simple reflections, real and
//! imaginary root tests, and the Weyl sums `s(w) = rho - w(rho)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::lattice::RootVector;

/// `(alpha | beta) = alpha^T diag(d) A beta`. With the coprime integer
/// symmetrizer the form is integral and `(alpha_i | alpha_i) = 2 d_i`.
pub fn bilinear(g: &Gcm, alpha: &RootVector, beta: &RootVector) -> Result<i64> {
    let d = g.symmetrizer().ok_or(Error::NotSymmetrizable)?;
    g.check_vector(alpha)?;
    g.check_vector(beta)?;
    Ok(bilinear_with(g, d, alpha.coords(), beta.coords()))
}

#[inline]
pub(crate) fn bilinear_with(g: &Gcm, d: &[i64], alpha: &[i64], beta: &[i64]) -> i64 {
    let n = g.rank();
    let mut s = 0;
    for i in 0..n {
        if alpha[i] == 0 {
            continue;
        }
        let row = g.row(i);
        let mut t = 0;
        for j in 0..n {
            t += row[j] * beta[j];
        }
        s += d[i] * alpha[i] * t;
    }
    s
}

/// `(alpha | alpha)`.
pub fn norm(g: &Gcm, alpha: &RootVector) -> Result<i64> {
    bilinear(g, alpha, alpha)
}

/// `(rho | alpha) = sum_i c_i d_i`, using `(rho | alpha_i) = (alpha_i | alpha_i) / 2`.
pub fn rho_pairing(g: &Gcm, alpha: &RootVector) -> Result<i64> {
    let d = g.symmetrizer().ok_or(Error::NotSymmetrizable)?;
    g.check_vector(alpha)?;
    Ok(alpha.coords().iter().zip(d).map(|(c, di)| c * di).sum())
}

/// `<alpha, alpha_i^vee> = sum_j a[i][j] c_j`.
#[inline]
pub fn coroot_pairing(g: &Gcm, i: usize, alpha: &RootVector) -> i64 {
    g.row(i).iter().zip(alpha.coords()).map(|(a, c)| a * c).sum()
}

/// Simple reflection `r_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i`.
pub fn reflect(g: &Gcm, i: usize, alpha: &RootVector) -> RootVector {
    let p = coroot_pairing(g, i, alpha);
    let mut out = alpha.clone();
    out.coords_mut()[i] -= p;
    out
}

/// Applies `w = r_{i_1} ... r_{i_k}` to `alpha` (rightmost reflection first).
pub fn apply_word(g: &Gcm, word: &[usize], alpha: &RootVector) -> RootVector {
    word.iter().rev().fold(alpha.clone(), |v, &i| reflect(g, i, &v))
}

/// Outcome of reflecting a positive vector down towards the fundamental region.
enum Descent {
    /// Reached a simple root: the vector is a real root.
    Real,
    /// Left `Q+` without passing through a simple root: not a root.
    Escaped,
    /// Stopped at `beta` with `<beta, alpha_i^vee> <= 0` for all `i`.
    Dominant(RootVector),
}

fn descend(g: &Gcm, alpha: &RootVector) -> Descent {
    let mut v = alpha.clone();
    loop {
        if v.simple_index().is_some() {
            return Descent::Real;
        }
        let Some(i) = (0..g.rank()).find(|&i| coroot_pairing(g, i, &v) > 0) else {
            return Descent::Dominant(v);
        };
        v = reflect(g, i, &v);
        if !v.is_positive() {
            return Descent::Escaped;
        }
    }
}

fn support_connected(g: &Gcm, v: &RootVector) -> bool {
    let supp = v.support();
    !supp.is_empty() && g.principal(&supp).is_indecomposable()
}

/// Real iff height-reducing reflections carry `±alpha` to a simple root.
pub fn is_real_root(g: &Gcm, alpha: &RootVector) -> bool {
    if alpha.rank() != g.rank() {
        return false;
    }
    let v = if alpha.is_negative() { -alpha.clone() } else { alpha.clone() };
    v.is_positive() && matches!(descend(g, &v), Descent::Real)
}

/// Positive imaginary iff the descent ends in the fundamental set
/// `K = { beta in Q+ : <beta, alpha_i^vee> <= 0 for all i, supp(beta) connected }`.
pub fn is_positive_imaginary_root(g: &Gcm, alpha: &RootVector) -> bool {
    if alpha.rank() != g.rank() || !alpha.is_positive() {
        return false;
    }
    match descend(g, alpha) {
        Descent::Dominant(beta) => support_connected(g, &beta),
        _ => false,
    }
}

pub fn is_root(g: &Gcm, alpha: &RootVector) -> bool {
    is_real_root(g, alpha) || is_positive_imaginary_root(g, alpha) || is_positive_imaginary_root(g, &-alpha.clone())
}

/// A Weyl group element together with its sum `s(w) = rho - w(rho)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    /// A reduced word `w = r_{word[0]} r_{word[1]} ...`.
    pub word: Vec<usize>,
    pub length: usize,
    pub sw: RootVector,
}

impl WeylElement {
    /// `epsilon(s(w)) = (-1)^{l(w)+1}`.
    pub fn epsilon(&self) -> i64 {
        if self.length % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// All `w != 1` with `height(s(w)) <= max_height`, sorted by height and then
/// lexicographically decreasing on `s(w)` (so `alpha_1` precedes `alpha_2`).
///
/// Breadth-first over right multiplication, tracking the images `w(alpha_j)`:
/// `s(w r_i) = s(w) + w(alpha_i)`, and the product is longer exactly when
/// `w(alpha_i)` is positive, in which case the height strictly increases.
pub fn enumerate_weyl_sums(g: &Gcm, max_height: i64) -> Vec<WeylElement> {
    struct State {
        word: Vec<usize>,
        sw: RootVector,
        images: Vec<RootVector>,
    }
    let n = g.rank();
    let mut out = Vec::new();
    let mut seen: HashSet<RootVector> = HashSet::new();
    let identity = State {
        word: Vec::new(),
        sw: RootVector::zero(n),
        images: (0..n).map(|j| RootVector::simple(n, j)).collect(),
    };
    let mut layer = vec![identity];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for st in &layer {
            for i in 0..n {
                let wi = &st.images[i];
                if !wi.is_positive() {
                    continue;
                }
                let sw = &st.sw + wi;
                if sw.height() > max_height || !seen.insert(sw.clone()) {
                    continue;
                }
                // (w r_i)(alpha_j) = w(alpha_j) - a_ij w(alpha_i)
                let images = (0..n)
                    .map(|j| {
                        let a = g.entry(i, j);
                        if a == 0 {
                            st.images[j].clone()
                        } else {
                            &st.images[j] - &(wi * a)
                        }
                    })
                    .collect();
                let mut word = st.word.clone();
                word.push(i);
                out.push(WeylElement {
                    length: word.len(),
                    word,
                    sw: sw.clone(),
                });
                next.push(State { word: out.last().unwrap().word.clone(), sw, images });
            }
        }
        layer = next;
    }
    out.sort_by(|a, b| a.sw.height().cmp(&b.sw.height()).then_with(|| b.sw.cmp(&a.sw)));
    out
}
