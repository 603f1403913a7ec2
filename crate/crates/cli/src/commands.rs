use hyperroot::asymptotics::{estimate_p_sigma, index_from_norm};
use hyperroot::bounds::{check_frenkel, BoundReport, BoundTables};
use hyperroot::cartan::{classify, extend, extend_at, overextend};
use hyperroot::multiplicity::{
    mult_berman_moody, mult_peterson_with, verify_denominator_identity, LoadStatus, MultTable, TableCache,
};
use hyperroot::qseries::SeriesName;
use hyperroot::roots::{is_positive_imaginary_root, is_real_root, norm};
use hyperroot::{parse_gcm, presets, Gcm, RootVector};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::output::{cell, Report, Table};
use crate::{Cli, Command, Engine, ExtendMode, Failure, MatrixArg};

type Outcome = Result<Report, Failure>;

fn resolve(arg: &MatrixArg) -> Result<Gcm, Failure> {
    let g = match (&arg.preset, &arg.matrix) {
        (Some(p), _) => presets::preset(p)?,
        (None, Some(m)) => parse_gcm(m)?,
        (None, None) => return Err(Failure::Input("a matrix or --preset is required".into())),
    };
    Ok(g)
}

fn big(m: &BigUint) -> Value {
    match u64::try_from(m) {
        Ok(x) => json!(x),
        Err(_) => json!(m.to_string()),
    }
}

fn matrix_json(g: &Gcm) -> Value {
    json!(g.rows())
}

/// Cached table access: loads on entry and saves after every completed shell.
struct Tables {
    cache: Option<TableCache>,
}

impl Tables {
    fn new(cli: &Cli) -> Self {
        Tables {
            cache: (!cli.no_cache).then(|| TableCache::new(&cli.cache_dir)),
        }
    }

    fn load(&self, g: &Gcm) -> Result<MultTable, Failure> {
        let Some(cache) = &self.cache else {
            return Ok(MultTable::new(g));
        };
        let (table, status) = cache.load(g)?;
        match status {
            LoadStatus::Truncated { from, to } => {
                eprintln!("warning: cached table inconsistent above height {to} (recorded {from}); recomputing")
            }
            LoadStatus::Discarded(why) => eprintln!("warning: ignoring cache file: {why}"),
            LoadStatus::Missing | LoadStatus::Loaded { .. } => {}
        }
        Ok(table)
    }

    fn extend(&self, table: &mut MultTable, height: i64) -> Result<(), Failure> {
        match &self.cache {
            Some(cache) if height > table.frontier() => {
                table.extend_to_with(height, |t| cache.save(t))?;
            }
            _ => table.extend_to(height)?,
        }
        Ok(())
    }

    fn peterson(&self, g: &Gcm, table: &mut MultTable, alpha: &RootVector) -> Result<BigUint, Failure> {
        Ok(match &self.cache {
            Some(cache) => mult_peterson_with(g, alpha, table, |t| cache.save(t))?,
            None => mult_peterson_with(g, alpha, table, |_| Ok(()))?,
        })
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { gcm } => cmd_classify(&resolve(gcm)?),
        Command::Extend { gcm, mode, attach } => cmd_extend(&resolve(gcm)?, *mode, *attach),
        Command::Mult { gcm, root, engine } => cmd_mult(cli, &resolve(gcm)?, root, *engine),
        Command::Table { gcm, height, d } => cmd_table(cli, &resolve(gcm)?, height.unwrap_or(cli.height_limit), *d),
        Command::Check { gcm, height, d } => cmd_check(cli, &resolve(gcm)?, height.unwrap_or(cli.height_limit), *d),
        Command::Series { name, colors } => cmd_series(name, *colors, cli.order as usize),
        Command::Asympt { n, norm } => cmd_asympt(*n, *norm, cli.order as usize),
        Command::VerifyDenominator { gcm, height } => {
            cmd_verify(cli, &resolve(gcm)?, height.unwrap_or(cli.height_limit))
        }
    }
}

fn cmd_classify(g: &Gcm) -> Outcome {
    let c = classify(g);
    let mut summary = vec![format!("matrix: {g}"), format!("det: {}", c.det)];
    match g.symmetrizer() {
        Some(d) => summary.push(format!("symmetrizer: {d:?}{}", if c.symmetric { " (symmetric)" } else { "" })),
        None => summary.push("symmetrizer: none".into()),
    }
    let mut table = Table::new(["vertices", "type", "hyperbolic", "compact", "lorentzian", "det_sign"]);
    for comp in &c.components {
        let t = comp.algebra_type;
        table.push(vec![
            format!("{:?}", comp.vertices),
            t.kind.to_string(),
            t.flags.hyperbolic.to_string(),
            t.flags.compact_hyperbolic.to_string(),
            t.flags.lorentzian.to_string(),
            comp.det_sign.to_string(),
        ]);
    }
    if let Some(t) = c.single() {
        summary.push(format!("type: {t}"));
    } else {
        summary.push(format!("decomposable: {} components", c.components.len()));
    }
    let mut json = serde_json::to_value(&c).map_err(|e| Failure::Compute(e.to_string()))?;
    json["matrix"] = matrix_json(g);
    json["symmetrizer"] = json!(g.symmetrizer());
    Ok(Report {
        json,
        table: Some(table),
        summary,
    })
}

fn cmd_extend(g: &Gcm, mode: ExtendMode, attach: Option<usize>) -> Outcome {
    let out = match (mode, attach) {
        (ExtendMode::Affine, None) => extend(g)?,
        (ExtendMode::Over, None) => overextend(g)?,
        (ExtendMode::Node, Some(i)) => extend_at(g, i)?,
        (ExtendMode::Node, None) => return Err(Failure::Input("--mode node needs --attach".into())),
        (_, Some(_)) => return Err(Failure::Input("--attach is only used with --mode node".into())),
    };
    let t = classify(&out);
    let type_text = t.single().map(|t| t.to_string()).unwrap_or_else(|| "decomposable".into());
    let mut table = Table::new((0..out.rank()).map(|i| format!("{i}")));
    for row in out.rows() {
        table.push(row.iter().map(|x| x.to_string()).collect());
    }
    Ok(Report {
        json: json!({ "matrix": matrix_json(&out), "text": out.to_string(), "type": type_text }),
        table: Some(table),
        summary: vec![format!("matrix: {out}"), format!("type: {type_text}")],
    })
}

fn cmd_mult(cli: &Cli, g: &Gcm, root: &str, engine: Engine) -> Outcome {
    let alpha: RootVector = root.parse()?;
    if alpha.rank() != g.rank() {
        return Err(Failure::Input(format!(
            "root {alpha} has {} coordinates, matrix has rank {}",
            alpha.rank(),
            g.rank()
        )));
    }
    if !alpha.is_positive() {
        return Err(Failure::Domain(format!("{alpha} is not in the positive root lattice")));
    }
    let tables = Tables::new(cli);
    let peterson = match engine {
        Engine::Peterson | Engine::Both => {
            let mut table = tables.load(g)?;
            Some(tables.peterson(g, &mut table, &alpha)?)
        }
        Engine::Bm => None,
    };
    let bm = match engine {
        Engine::Bm | Engine::Both => Some(mult_berman_moody(g, &alpha)?),
        Engine::Peterson => None,
    };
    let agree = match (&peterson, &bm) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let nrm = norm(g, &alpha)?;
    let kind = if is_real_root(g, &alpha) {
        "real"
    } else if is_positive_imaginary_root(g, &alpha) {
        "imaginary"
    } else {
        "not a root"
    };
    let mult = peterson.as_ref().or(bm.as_ref()).expect("some engine ran");
    let mut summary = vec![format!("mult{alpha} = {mult}")];
    if let (Some(p), Some(b), Some(ok)) = (&peterson, &bm, agree) {
        summary = vec![format!("mult{alpha}: peterson {p} / berman-moody {b} / {}", if ok { "match" } else { "MISMATCH" })];
    }
    summary.push(format!("height {}, norm {nrm}, {kind}", alpha.height()));
    let json = json!({
        "root": alpha,
        "height": alpha.height(),
        "norm": nrm,
        "kind": kind,
        "mult": big(mult),
        "peterson": peterson.as_ref().map(big),
        "berman_moody": bm.as_ref().map(big),
        "match": agree,
    });
    if agree == Some(false) {
        return Err(Failure::Compute(format!("engines disagree at {alpha}: {}", summary[0])));
    }
    Ok(Report {
        json,
        table: None,
        summary,
    })
}

/// Bound tables for the table view: always with an explicit `d`, otherwise
/// only for symmetric matrices of rank at least 3.
fn bound_tables(g: &Gcm, d: Option<u32>) -> Result<Option<BoundTables>, Failure> {
    match d {
        Some(d) => Ok(Some(BoundTables::new(g, d, 64)?)),
        None => {
            let d = g.rank() as u32;
            Ok((g.is_symmetric() && d >= 3).then(|| BoundTables::new(g, d, 64)).transpose()?)
        }
    }
}

fn cmd_table(cli: &Cli, g: &Gcm, height: i64, d: Option<u32>) -> Outcome {
    let tables = Tables::new(cli);
    let mut table = tables.load(g)?;
    tables.extend(&mut table, height)?;
    let mut bounds = bound_tables(g, d)?;
    let header = ["alpha", "height", "norm", "mult", "frenkel", "borcherds", "niemann"];
    let mut out = Table::new(header);
    let mut rows = Vec::new();
    for (alpha, m) in table.roots(height) {
        let nrm = norm(g, &alpha)?;
        let mut row = json!({
            "alpha": alpha,
            "height": alpha.height(),
            "norm": nrm,
            "mult": big(&m),
        });
        if let Some(b) = bounds.as_mut() {
            let r = serde_json::to_value(b.row(&alpha, nrm, &m)?).map_err(|e| Failure::Compute(e.to_string()))?;
            for k in ["frenkel", "borcherds", "niemann"] {
                if !r[k].is_null() {
                    row[k] = r[k].clone();
                }
            }
        }
        out.push(header.iter().map(|k| cell(&row[*k])).collect());
        rows.push(row);
    }
    let summary = vec![format!("{g}: {} positive roots of height <= {height}", rows.len())];
    Ok(Report {
        json: json!({ "matrix": matrix_json(g), "height": height, "roots": rows }),
        table: Some(out),
        summary,
    })
}

fn cmd_check(cli: &Cli, g: &Gcm, height: i64, d: Option<u32>) -> Outcome {
    let d = d.unwrap_or(g.rank() as u32);
    let tables = Tables::new(cli);
    let mut table = tables.load(g)?;
    // validate before the possibly long computation
    BoundTables::new(g, d, 1)?;
    tables.extend(&mut table, height)?;
    let report: BoundReport = check_frenkel(g, d, height, &mut table)?;
    let header = ["alpha", "norm", "mult", "frenkel", "borcherds", "niemann", "saturated", "violated"];
    let json = serde_json::to_value(&report).map_err(|e| Failure::Compute(e.to_string()))?;
    let mut out = Table::new(header.iter().copied().chain(["niemann_branch"]));
    for row in json["rows"].as_array().into_iter().flatten() {
        out.push(header.iter().chain(&["niemann_branch"]).map(|k| cell(&row[*k])).collect());
    }
    let s = &report.summary;
    let summary = vec![
        format!("{g}, d = {d}, height <= {height}"),
        format!(
            "{} imaginary roots, {} violations, {} saturated, {} on Niemann's unevaluated branch",
            s.roots, s.violations, s.saturated, s.niemann_branch_flagged
        ),
    ];
    Ok(Report {
        json,
        table: Some(out),
        summary,
    })
}

fn cmd_series(name: &str, colors: u32, order: usize) -> Outcome {
    let series = SeriesName::parse(name, colors)
        .ok_or_else(|| Failure::Input(format!("unknown series '{name}' (p, p_l, xi, ff_level2, p_sigma, tau)")))?;
    if colors == 0 {
        return Err(Failure::Input("--colors must be at least 1".into()));
    }
    let s = series.compute(order);
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    let mut table = Table::new(["n", "coeff"]);
    for (n, c) in coeffs.iter().enumerate() {
        table.push(vec![n.to_string(), c.clone()]);
    }
    let json_coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string())))
        .collect();
    Ok(Report {
        json: json!({ "name": series.label(), "order": order, "coeffs": json_coeffs }),
        table: Some(table),
        summary: vec![format!("{} to order {order}", series.label())],
    })
}

fn cmd_asympt(n: Option<u64>, norm: Option<i64>, order: usize) -> Outcome {
    let n = match (n, norm) {
        (Some(n), _) => n,
        (None, Some(x)) => index_from_norm(x)?,
        (None, None) => return Err(Failure::Input("--n or --norm is required".into())),
    };
    if n == 0 {
        return Err(Failure::Domain("the main term needs n >= 1".into()));
    }
    let e = estimate_p_sigma(n, order);
    let mut summary = vec![format!("main term for p_sigma({}): {:.2}", n + 1, e.main_term)];
    match (&e.exact, e.relative_error) {
        (Some(x), Some(r)) => summary.push(format!("exact p_sigma({}) = {x}, relative error {:.4}%", n + 1, r * 100.0)),
        _ => summary.push(format!("exact value beyond order {order}")),
    }
    let json = serde_json::to_value(&e).map_err(|err| Failure::Compute(err.to_string()))?;
    Ok(Report {
        json,
        table: None,
        summary,
    })
}

fn cmd_verify(cli: &Cli, g: &Gcm, height: i64) -> Outcome {
    let tables = Tables::new(cli);
    let mut table = tables.load(g)?;
    tables.extend(&mut table, height)?;
    let r = verify_denominator_identity(g, height, &mut table)?;
    let json = serde_json::to_value(&r).map_err(|e| Failure::Compute(e.to_string()))?;
    let mut out = Table::new(["vector", "product_side", "sum_side"]);
    for m in &r.mismatches {
        out.push(vec![m.vector.to_string(), m.product_side.clone(), m.sum_side.clone()]);
    }
    let verdict = if r.is_consistent() { "consistent" } else { "INCONSISTENT" };
    let summary = vec![format!(
        "{g}, height <= {height}: {verdict} ({} product terms, {} sum terms, {} mismatches)",
        r.product_terms,
        r.sum_terms,
        r.mismatches.len()
    )];
    if !r.is_consistent() {
        return Err(Failure::Compute(summary[0].clone()));
    }
    Ok(Report {
        json,
        table: (!r.mismatches.is_empty()).then_some(out),
        summary,
    })
}
