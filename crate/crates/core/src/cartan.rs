//! Generalized Cartan matrices: validation, symmetrization, type classification,
//! and the affine / Lorentzian diagram extensions.
//!
//! Conventions: `a[i][j] = <alpha_i^vee, alpha_j>`, so the simple reflection `r_i`
//! lowers coordinate `i` of a root by `sum_j a[i][j] * c_j`. The symmetrizer `d`
//! is a coprime vector of positive integers (per connected component) with
//! `d[i] * a[i][j] = d[j] * a[j][i]`, and the invariant form is `B = diag(d) A`,
//! so `(alpha_i | alpha_i) = 2 d[i]`.
//!
//! All classification is exact: signs of determinants and of characteristic
//! polynomial coefficients over big integers, never floating-point eigenvalues.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lattice::RootVector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gcm {
    rank: usize,
    a: Vec<i64>,
    d: Option<Vec<i64>>,
}

impl Gcm {
    /// Validates a square integer matrix as a generalized Cartan matrix and
    /// computes its symmetrizer when one exists.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry a[{i}][{i}] = {}", rows[i][i])));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    return Err(Error::NotGcm(format!("positive off-diagonal a[{i}][{j}] = {}", rows[i][j])));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(Error::NotGcm(format!("zero pattern differs at ({i},{j})")));
                }
            }
        }
        let a: Vec<i64> = rows.into_iter().flatten().collect();
        let mut g = Gcm { rank: n, a, d: None };
        g.d = g.compute_symmetrizer();
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.rank + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[i * self.rank..(i + 1) * self.rank]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn symmetrizer(&self) -> Option<&[i64]> {
        self.d.as_deref()
    }

    pub fn is_symmetrizable(&self) -> bool {
        self.d.is_some()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// `B = diag(d) A`.
    pub fn symmetrized(&self) -> Result<Vec<Vec<i64>>> {
        let d = self.d.as_ref().ok_or(Error::NotSymmetrizable)?;
        Ok((0..self.rank)
            .map(|i| self.row(i).iter().map(|&x| d[i] * x).collect())
            .collect())
    }

    /// Hex SHA-256 of the canonical text form; identifies cache files.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_string().as_bytes()))
    }

    /// Connected components of the Dynkin diagram, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in 0..n {
                    if !seen[w] && self.entry(v, w) != 0 {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    pub fn require_indecomposable(&self) -> Result<()> {
        match self.components().len() {
            1 => Ok(()),
            k => Err(Error::Decomposable(k)),
        }
    }

    /// Principal submatrix on the given vertices (in the given order).
    pub fn principal(&self, vertices: &[usize]) -> Gcm {
        let rows = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        Gcm::new(rows).expect("principal submatrix of a GCM is a GCM")
    }

    /// Simultaneous row/column permutation: vertex `k` of the result is vertex `perm[k]` here.
    pub fn permuted(&self, perm: &[usize]) -> Gcm {
        self.principal(perm)
    }

    pub fn det(&self) -> BigInt {
        determinant(&self.rows())
    }

    pub(crate) fn check_vector(&self, v: &RootVector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                vector: v.clone(),
                expected: self.rank,
                found: v.rank(),
            });
        }
        Ok(())
    }

    fn compute_symmetrizer(&self) -> Option<Vec<i64>> {
        let n = self.rank;
        let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
        for comp in self.components() {
            d[comp[0]] = Some(Ratio::one());
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                let di = d[i].unwrap();
                for j in 0..n {
                    if i == j || self.entry(i, j) == 0 {
                        continue;
                    }
                    // d_j a_ji = d_i a_ij
                    let want = di * Ratio::new(self.entry(i, j), self.entry(j, i));
                    match d[j] {
                        None => {
                            d[j] = Some(want);
                            stack.push(j);
                        }
                        Some(existing) if existing != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut out = vec![0i64; n];
        for comp in self.components() {
            let lcm = comp.iter().fold(1i64, |l, &i| l.lcm(d[i].unwrap().denom()));
            let ints: Vec<i64> = comp.iter().map(|&i| (d[i].unwrap() * lcm).to_integer()).collect();
            let g = ints.iter().fold(0i64, |g, &x| g.gcd(&x));
            for (&i, x) in comp.iter().zip(ints) {
                out[i] = x / g;
            }
        }
        Some(out)
    }
}

impl fmt::Display for Gcm {
    /// Rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gcm[{self}]")
    }
}

/// Parses the `;`/`,` text form, e.g. `2,-2,0;-2,2,-1;0,-1,2`.
impl FromStr for Gcm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::InvalidMatrix(format!("bad entry '{}'", e.trim())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Gcm::new(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    matrix: Vec<Vec<i64>>,
}

impl Gcm {
    /// Parses `{"matrix": [[...], ...]}`.
    pub fn from_json(s: &str) -> Result<Self> {
        let m: MatrixJson = serde_json::from_str(s)?;
        Gcm::new(m.matrix)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson { matrix: self.rows() }).expect("matrix serializes")
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Coefficients `c_0..c_n` of `det(xI - M)` (Faddeev-LeVerrier; every division is exact).
pub fn characteristic_polynomial(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        c[n - k] = -tr / BigInt::from(k);
    }
    c
}

/// Inertia of a symmetric integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Exact inertia from the characteristic polynomial: a real-rooted polynomial has
/// exactly as many positive roots as sign changes in its coefficients.
pub fn inertia(sym: &[Vec<i64>]) -> Inertia {
    let n = sym.len();
    let c = characteristic_polynomial(sym);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap_or(n);
    let changes = |coeffs: &mut dyn Iterator<Item = BigInt>| {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for x in coeffs {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            if last.is_some_and(|l| l != neg) {
                count += 1;
            }
            last = Some(neg);
        }
        count
    };
    let positive = changes(&mut c.iter().cloned());
    let negative = changes(&mut c.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() }));
    debug_assert_eq!(positive + negative + zero, n);
    Inertia { positive, negative, zero }
}

// ---------------------------------------------------------------------------
// Classification

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraKind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Finite => "finite",
            AlgebraKind::Affine => "affine",
            AlgebraKind::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeFlags {
    pub hyperbolic: bool,
    pub compact_hyperbolic: bool,
    pub lorentzian: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraType {
    pub kind: AlgebraKind,
    pub flags: TypeFlags,
}

impl AlgebraType {
    pub fn is_hyperbolic(&self) -> bool {
        self.flags.hyperbolic
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.flags.hyperbolic {
            let c = if self.flags.compact_hyperbolic { "compact" } else { "noncompact" };
            write!(f, ", hyperbolic ({c})")?;
        }
        if self.flags.lorentzian {
            write!(f, ", lorentzian")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentClass {
    pub vertices: Vec<usize>,
    pub algebra_type: AlgebraType,
    /// Sign of the component's determinant: -1, 0 or 1.
    pub det_sign: i8,
    pub inertia: Option<Inertia>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub det: String,
    pub symmetrizable: bool,
    pub symmetric: bool,
    pub components: Vec<ComponentClass>,
}

impl Classification {
    /// The type of an indecomposable matrix.
    pub fn single(&self) -> Option<&AlgebraType> {
        match self.components.as_slice() {
            [c] => Some(&c.algebra_type),
            _ => None,
        }
    }
}

/// Classifies each connected component of the diagram.
pub fn classify(g: &Gcm) -> Classification {
    let components = g
        .components()
        .into_iter()
        .map(|vertices| {
            let sub = g.principal(&vertices);
            let (algebra_type, inertia) = classify_component(&sub);
            ComponentClass {
                vertices,
                algebra_type,
                det_sign: sign_of(&sub.det()),
                inertia,
            }
        })
        .collect();
    Classification {
        det: g.det().to_string(),
        symmetrizable: g.is_symmetrizable(),
        symmetric: g.is_symmetric(),
        components,
    }
}

/// Type of an indecomposable matrix.
pub fn classify_indecomposable(g: &Gcm) -> Result<AlgebraType> {
    g.require_indecomposable()?;
    Ok(classify_component(g).0)
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn kind_of(g: &Gcm) -> (AlgebraKind, Option<Inertia>) {
    // Finite and affine matrices are always symmetrizable.
    let Ok(b) = g.symmetrized() else {
        return (AlgebraKind::Indefinite, None);
    };
    let inr = inertia(&b);
    let kind = match (inr.negative, inr.zero) {
        (0, 0) => AlgebraKind::Finite,
        (0, _) => AlgebraKind::Affine,
        _ => AlgebraKind::Indefinite,
    };
    (kind, Some(inr))
}

fn classify_component(g: &Gcm) -> (AlgebraType, Option<Inertia>) {
    let (kind, inr) = kind_of(g);
    let mut flags = TypeFlags {
        hyperbolic: false,
        compact_hyperbolic: false,
        lorentzian: false,
    };
    if kind == AlgebraKind::Indefinite {
        // Every proper connected subdiagram lies inside a component of some
        // one-vertex deletion, and principal submatrices of finite or affine
        // indecomposable matrices are again finite or affine.
        let n = g.rank();
        let mut all_small = n > 1;
        let mut all_finite = true;
        'outer: for v in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&i| i != v).collect();
            let sub = g.principal(&rest);
            for comp in sub.components() {
                let (k, _) = kind_of(&sub.principal(&comp));
                match k {
                    AlgebraKind::Finite => {}
                    AlgebraKind::Affine => all_finite = false,
                    AlgebraKind::Indefinite => {
                        all_small = false;
                        break 'outer;
                    }
                }
            }
        }
        flags.hyperbolic = all_small;
        flags.compact_hyperbolic = all_small && all_finite;
    }
    if let Some(i) = inr {
        flags.lorentzian = i.zero == 0 && i.negative == 1;
    }
    (AlgebraType { kind, flags }, inr)
}

// ---------------------------------------------------------------------------
// Highest root and extensions

/// Positive roots of a finite-type matrix, by saturating simple roots upward
/// under the simple reflections. Sorted by (height, coordinates).
pub fn finite_positive_roots(g: &Gcm) -> Result<Vec<RootVector>> {
    let t = classify_indecomposable(g)?;
    if t.kind != AlgebraKind::Finite {
        return Err(Error::WrongType {
            expected: "finite".into(),
            found: t.kind.to_string(),
        });
    }
    let n = g.rank();
    let mut seen: HashSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut queue: Vec<RootVector> = seen.iter().cloned().collect();
    while let Some(beta) = queue.pop() {
        for i in 0..n {
            let r = crate::roots::reflect(g, i, &beta);
            if r.is_positive() && r.height() > beta.height() && seen.insert(r.clone()) {
                queue.push(r);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// The highest root of a finite indecomposable matrix.
pub fn highest_root(g: &Gcm) -> Result<RootVector> {
    Ok(finite_positive_roots(g)?.pop().expect("nonempty root system"))
}

/// Untwisted affinization: appends the node `alpha_0 = delta - theta` as the
/// last vertex, with `a[0][j] = -<theta^vee, alpha_j>` and `a[j][0] = -<alpha_j^vee, theta>`.
pub fn extend(g: &Gcm) -> Result<Gcm> {
    let theta = highest_root(g)?;
    let n = g.rank();
    let d = g.symmetrizer().expect("finite type is symmetrizable");
    // (theta | alpha_j) = sum_k theta_k d_k a_kj ; <theta^vee, alpha_j> = 2 (theta|alpha_j) / (theta|theta)
    let pair: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|k| theta[k] * d[k] * g.entry(k, j)).sum())
        .collect();
    let norm: i64 = (0..n).map(|j| theta[j] * pair[j]).sum();
    let mut rows = g.rows();
    for (j, row) in rows.iter_mut().enumerate() {
        let a_j0: i64 = -(0..n).map(|k| g.entry(j, k) * theta[k]).sum::<i64>();
        row.push(a_j0);
    }
    let mut last: Vec<i64> = pair.iter().map(|&p| -(2 * p) / norm).collect();
    last.push(2);
    rows.push(last);
    Gcm::new(rows)
}

/// Appends a vertex joined to `attach` by a single edge (entries -1/-1).
pub fn extend_at(g: &Gcm, attach: usize) -> Result<Gcm> {
    let n = g.rank();
    if attach >= n {
        return Err(Error::IndexOutOfRange { index: attach, rank: n });
    }
    let mut rows = g.rows();
    for (j, row) in rows.iter_mut().enumerate() {
        row.push(if j == attach { -1 } else { 0 });
    }
    let mut last = vec![0; n + 1];
    last[attach] = -1;
    last[n] = 2;
    rows.push(last);
    Gcm::new(rows)
}

/// A vertex `v` of an untwisted affine diagram such that deleting `v` leaves a
/// finite diagram whose affinization is the input. Searches from the last
/// vertex down, so the node added by [`extend`] is found first.
pub fn zero_node(g: &Gcm) -> Option<usize> {
    if classify_indecomposable(g).ok()?.kind != AlgebraKind::Affine {
        return None;
    }
    let n = g.rank();
    (0..n).rev().find(|&v| {
        let rest: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let sub = g.principal(&rest);
        if !sub.is_indecomposable() {
            return false;
        }
        let Ok(aff) = extend(&sub) else { return false };
        let mut order = rest.clone();
        order.push(v);
        aff == g.permuted(&order)
    })
}

/// The Lorentzian (over-)extension `X^{++}`: a new vertex joined to the 0-node
/// of an untwisted affine diagram by a single edge.
pub fn overextend(g: &Gcm) -> Result<Gcm> {
    match zero_node(g) {
        Some(v) => extend_at(g, v),
        None => Err(Error::WrongType {
            expected: "untwisted affine".into(),
            found: classify(g)
                .single()
                .map(|t| t.to_string())
                .unwrap_or_else(|| "decomposable".into()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn gcm(s: &str) -> Gcm {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        let g = gcm("2,-2;-2,2");
        assert_eq!(g.symmetrizer(), Some(&[1, 1][..]));
        let g = gcm("2,-3;-3,2");
        assert_eq!(g.symmetrizer(), Some(&[1, 1][..]));
        assert!(matches!("2,1;1,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
        assert!(matches!("3,-1;-1,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
        assert!(matches!("2,0;-1,2".parse::<Gcm>(), Err(Error::NotGcm(_))));
        assert!(matches!("2,-1;-1".parse::<Gcm>(), Err(Error::InvalidMatrix(_))));
        assert!(matches!("2,x;-1,2".parse::<Gcm>(), Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn symmetrizer_non_simply_laced() {
        // B2: d2 a21 = d1 a12 -> d = (1, 2)
        let g = gcm("2,-2;-1,2");
        assert_eq!(g.symmetrizer(), Some(&[1, 2][..]));
        let g = gcm("2,-2;-3,2");
        assert_eq!(g.symmetrizer(), Some(&[3, 2][..]));
        let b = g.symmetrized().unwrap();
        assert_eq!(b[0][1], b[1][0]);
        // a 3-cycle with inconsistent ratios
        let g = gcm("2,-1,-1;-2,2,-1;-1,-1,2");
        assert!(g.symmetrizer().is_none());
        assert_eq!(classify_indecomposable(&g).unwrap().kind, AlgebraKind::Indefinite);
    }

    #[test]
    fn text_and_json_forms() {
        let g = presets::f();
        assert_eq!(g.to_string(), "2,-2,0;-2,2,-1;0,-1,2");
        assert_eq!(Gcm::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(Gcm::from_json(r#"{"matrix": [[2,-3],[-3,2]]}"#).unwrap(), gcm("2,-3;-3,2"));
        assert_eq!(g.content_hash().len(), 64);
    }

    #[test]
    fn determinant_and_charpoly() {
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(presets::f().det(), BigInt::from(-2));
        assert_eq!(presets::finite('E', 8).unwrap().det(), BigInt::one());
        // det(xI - A) for A2 = x^2 - 4x + 3
        let c = characteristic_polynomial(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(c, vec![BigInt::from(3), BigInt::from(-4), BigInt::one()]);
    }

    #[test]
    fn classify_examples() {
        let t = classify_indecomposable(&gcm("2,-2;-2,2")).unwrap();
        assert_eq!(t.kind, AlgebraKind::Affine);
        assert!(!t.flags.hyperbolic);

        let t = classify_indecomposable(&gcm("2,-3;-3,2")).unwrap();
        assert_eq!(t.kind, AlgebraKind::Indefinite);
        assert!(t.flags.hyperbolic && t.flags.compact_hyperbolic && t.flags.lorentzian);

        let t = classify_indecomposable(&presets::f()).unwrap();
        assert_eq!(t.kind, AlgebraKind::Indefinite);
        assert!(t.flags.hyperbolic);
        assert!(!t.flags.compact_hyperbolic);
        assert!(t.flags.lorentzian);
    }

    #[test]
    fn rank_two_criterion() {
        for a in 1..=6 {
            for b in 1..=6 {
                let g = Gcm::new(vec![vec![2, -b], vec![-a, 2]]).unwrap();
                let t = classify_indecomposable(&g).unwrap();
                let ab = a * b;
                assert_eq!(t.kind == AlgebraKind::Finite, ab <= 3, "{a},{b}");
                assert_eq!(t.kind == AlgebraKind::Affine, ab == 4, "{a},{b}");
                assert_eq!(t.flags.hyperbolic, ab > 4, "{a},{b}");
            }
        }
    }

    #[test]
    fn decomposable_componentwise() {
        let g = gcm("2,-1,0,0;-1,2,0,0;0,0,2,-2;0,0,-2,2");
        let c = classify(&g);
        assert_eq!(c.components.len(), 2);
        assert_eq!(c.components[0].vertices, vec![0, 1]);
        assert_eq!(c.components[0].algebra_type.kind, AlgebraKind::Finite);
        assert_eq!(c.components[1].algebra_type.kind, AlgebraKind::Affine);
        assert!(c.single().is_none());
        assert!(matches!(classify_indecomposable(&g), Err(Error::Decomposable(2))));
    }

    #[test]
    fn finite_types_and_their_affinizations() {
        let cases = [('A', 1), ('A', 4), ('B', 3), ('C', 3), ('D', 5), ('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)];
        for (s, n) in cases {
            let g = presets::finite(s, n).unwrap();
            let t = classify_indecomposable(&g).unwrap();
            assert_eq!(t.kind, AlgebraKind::Finite, "{s}{n}");
            assert!(g.det() > BigInt::zero());
            let aff = extend(&g).unwrap();
            assert_eq!(classify_indecomposable(&aff).unwrap().kind, AlgebraKind::Affine, "{s}{n}");
            assert!(aff.det().is_zero());
            assert_eq!(zero_node(&aff), Some(n), "{s}{n}");
            let over = overextend(&aff).unwrap();
            let t = classify_indecomposable(&over).unwrap();
            assert!(t.flags.hyperbolic && t.flags.lorentzian, "{s}{n}++");
            assert!(over.det() < BigInt::zero());
            assert_eq!(classify(&over).components[0].inertia.unwrap().negative, 1);
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(&presets::finite('A', 3).unwrap()).unwrap(), RootVector::from([1, 1, 1]));
        assert_eq!(highest_root(&presets::finite('G', 2).unwrap()).unwrap().height(), 5);
        assert_eq!(highest_root(&presets::finite('E', 8).unwrap()).unwrap().height(), 29);
        assert_eq!(finite_positive_roots(&presets::finite('E', 8).unwrap()).unwrap().len(), 120);
        assert_eq!(finite_positive_roots(&presets::finite('F', 4).unwrap()).unwrap().len(), 24);
    }

    #[test]
    fn a1_extensions() {
        let a1 = gcm("2");
        let aff = extend(&a1).unwrap();
        assert_eq!(aff, gcm("2,-2;-2,2"));
        let over = overextend(&aff).unwrap();
        assert_eq!(over, presets::f());
        assert!(matches!(overextend(&a1), Err(Error::WrongType { .. })));
        assert!(matches!(extend(&aff), Err(Error::WrongType { .. })));
    }

    #[test]
    fn twisted_affine_is_affine_but_not_overextendable() {
        // A_2^(2): [[2,-4],[-1,2]]
        let g = gcm("2,-4;-1,2");
        assert_eq!(classify_indecomposable(&g).unwrap().kind, AlgebraKind::Affine);
        assert_eq!(zero_node(&g), None);
        assert!(overextend(&g).is_err());
    }

    #[test]
    fn e_series_chain() {
        let e10 = presets::e10();
        let e11 = presets::e11();
        assert_eq!(e10.rank(), 10);
        assert_eq!(e11.rank(), 11);
        let t10 = classify_indecomposable(&e10).unwrap();
        assert!(t10.flags.hyperbolic && !t10.flags.compact_hyperbolic);
        assert_eq!(e10.det(), BigInt::from(-1));
        let t11 = classify_indecomposable(&e11).unwrap();
        assert_eq!(t11.kind, AlgebraKind::Indefinite);
        assert!(!t11.flags.hyperbolic);
        assert!(t11.flags.lorentzian);
    }
}
