//! Named matrices: the finite Dynkin types (Bourbaki numbering), their
//! affinizations and over-extensions, and the algebras F, E10, E11.

use crate::cartan::{extend, extend_at, overextend, Gcm};
use crate::error::{Error, Result};

/// Cartan matrix of a finite Dynkin type, e.g. `finite('E', 8)`.
pub fn finite(series: char, n: usize) -> Result<Gcm> {
    let name = format!("{series}{n}");
    let bad = || Error::UnknownPreset(name.clone());
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match (series.to_ascii_uppercase(), n) {
        ('A', n) if n >= 1 => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        ('B', n) if n >= 2 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        ('C', n) if n >= 2 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        ('D', n) if n >= 4 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        ('E', 6..=8) => {
            // 1-3-4-5-...-n with 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        ('F', 4) => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        ('G', 2) => link(0, 1, -1, -3),
        _ => return Err(bad()),
    }
    Gcm::new(a)
}

/// The rank-3 hyperbolic algebra of type `HA_1^(1)`.
pub fn f() -> Gcm {
    Gcm::new(vec![vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]]).expect("valid")
}

/// `E9 = E8^(1)`, with the affine node last.
pub fn e9() -> Gcm {
    extend(&finite('E', 8).expect("E8")).expect("E8 is finite")
}

/// `E10 = E8^{++}`, with the over-extending node last.
pub fn e10() -> Gcm {
    overextend(&e9()).expect("E9 is untwisted affine")
}

/// `E11 = E8^{+++}`: one more single-edge vertex on the over-extending node.
pub fn e11() -> Gcm {
    let e10 = e10();
    extend_at(&e10, e10.rank() - 1).expect("valid vertex")
}

/// `IA_1(a, b) = [[2, -b], [-a, 2]]`.
pub fn a1(a: i64, b: i64) -> Result<Gcm> {
    Gcm::new(vec![vec![2, -b], vec![-a, 2]])
}

/// Resolves a preset name: `F`, `E9`, `E10`, `E11`, `A1(a,b)`, a finite type
/// such as `D5`, or a finite type with suffix `^(1)` or `^++`.
pub fn preset(name: &str) -> Result<Gcm> {
    let name = name.trim();
    let unknown = || Error::UnknownPreset(name.to_string());
    match name {
        "F" | "HA1^(1)" => return Ok(f()),
        "E9" => return Ok(e9()),
        "E10" => return Ok(e10()),
        "E11" => return Ok(e11()),
        _ => {}
    }
    if let Some(args) = name.strip_prefix("A1(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<i64> = args
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| unknown()))
            .collect::<Result<_>>()?;
        let [a, b] = parts[..] else { return Err(unknown()) };
        if a <= 0 || b <= 0 {
            return Err(unknown());
        }
        return a1(a, b);
    }
    let (base, suffix) = if let Some(b) = name.strip_suffix("^(1)") {
        (b, 1)
    } else if let Some(b) = name.strip_suffix("^++") {
        (b, 2)
    } else {
        (name, 0)
    };
    let mut chars = base.chars();
    let series = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let g = finite(series, n).map_err(|_| unknown())?;
    match suffix {
        0 => Ok(g),
        1 => extend(&g),
        _ => overextend(&extend(&g)?),
    }
}

/// Accepts a preset name, a JSON object `{"matrix": ...}`, or the `;`/`,` text form.
pub fn parse_gcm(input: &str) -> Result<Gcm> {
    let t = input.trim();
    if t.starts_with('{') {
        return Gcm::from_json(t);
    }
    if t.contains(',') && !t.starts_with("A1(") || t.chars().all(|c| c.is_ascii_digit() || c == '-') {
        return t.parse();
    }
    preset(t)
}
