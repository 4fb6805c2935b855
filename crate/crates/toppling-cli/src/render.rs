//! Output formats for every command.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};
use toppling::oracle::brute::brute_force_class_count;
use toppling::oracle::hochster::hochster_table;
use toppling::oracle::schreyer::{minimalize, schreyer_resolution, BasisOrder};
use toppling::poly::SchreyerOrder;
use toppling::resolution::{assemble_resolution, buchberger_check, hilbert_check, verify_resolution, Binomial};
use toppling::{betti_table, BettiTable, Divisor, FlagBasis, FreeResolution, PointedGraph, Polynomial};

use crate::{Format, Grading, Oracle, Options, Output, Result};

pub fn betti(t: &BettiTable, grading: Grading, format: Format) -> String {
    match (format, grading) {
        (Format::Json, Grading::Z) => {
            let rows: Vec<Value> = t.z_graded.iter().map(|((i, j), c)| json!([i, j, c])).collect();
            format!("{}\n", json!({ "grading": "Z", "betti": rows }))
        }
        (Format::Json, Grading::Pic) => {
            let rows: Vec<Value> = t.pic_graded.iter().map(|((i, p), c)| json!([i, p.rep.0, c])).collect();
            format!("{}\n", json!({ "grading": "Pic", "betti": rows }))
        }
        (Format::Text, _) => betti_grid(t),
        (_, Grading::Z) => t.to_tsv(),
        (_, Grading::Pic) => t.pic_to_tsv(),
    }
}

/// Rows by `j − i`, columns by `i`, zeros as dots.
fn betti_grid(t: &BettiTable) -> String {
    let totals = t.totals();
    let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (&(i, j), &c) in &t.z_graded {
        rows.entry(j - i as i64).or_insert_with(|| vec![0; totals.len()])[i] = c;
    }
    let width = totals.iter().map(|c| c.to_string().len()).max().unwrap_or(1).max(2) + 1;
    let mut s = String::from("      ");
    for i in 0..totals.len() {
        let _ = write!(s, "{:>width$}", i);
    }
    s.push_str("\ntotal:");
    for c in &totals {
        let _ = write!(s, "{:>width$}", c);
    }
    s.push('\n');
    for (r, cs) in rows {
        let _ = write!(s, "{:>5}:", r);
        for c in cs {
            let cell = if c == 0 { ".".to_string() } else { c.to_string() };
            let _ = write!(s, "{:>width$}", cell);
        }
        s.push('\n');
    }
    s
}

/// `phi <k> <rows> <cols>` blocks of `row col polynomial` lines, indices 0-based
/// and matching the order printed by `flags`.
pub fn resolution(g: &PointedGraph, res: &FreeResolution, format: Format) -> String {
    let order = g.term_order();
    let entries = |k: usize| -> Vec<(usize, usize, String)> {
        let mut out = Vec::new();
        for (c, col) in res.phis[k].cols.iter().enumerate() {
            for (r, p) in col {
                out.push((*r, c, p.render(&order)));
            }
        }
        out
    };
    if format == Format::Json {
        let bases: Vec<Vec<String>> =
            res.bases.iter().map(|b| b.flags().iter().map(|u| u.to_string()).collect()).collect();
        let phis: Vec<Value> = (0..res.phis.len())
            .map(|k| {
                json!({
                    "k": k,
                    "rows": res.phis[k].rows,
                    "cols": res.phis[k].ncols(),
                    "entries": entries(k),
                })
            })
            .collect();
        return format!("{}\n", json!({ "ranks": res.ranks(), "bases": bases, "phis": phis }));
    }
    let mut s = String::new();
    for k in 0..res.phis.len() {
        let _ = writeln!(s, "phi {} {} {}", k, res.phis[k].rows, res.phis[k].ncols());
        for (r, c, p) in entries(k) {
            let _ = writeln!(s, "{} {} {}", r, c, p);
        }
    }
    s
}

pub fn groebner(g: &PointedGraph, gb: &[Binomial], format: Format) -> String {
    let order = g.term_order();
    let field = toppling::Field::Rational;
    let lines: Vec<String> = gb.iter().map(|b| b.to_polynomial(field).render(&order)).collect();
    match format {
        Format::Json => format!("{}\n", json!(lines)),
        _ => lines.iter().map(|l| format!("{}\n", l)).collect(),
    }
}

/// One line per flag: `k`, index within `S_k`, the flag and `D(U)`.
pub fn flags(g: &PointedGraph, bases: &[FlagBasis], format: Format) -> String {
    let rows: Vec<(usize, usize, String, Divisor)> = bases
        .iter()
        .flat_map(|b| b.flags().iter().enumerate().map(move |(i, u)| (b.k(), i, u.to_string(), u.divisor(g))))
        .collect();
    match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(k, i, u, d)| json!({ "k": k, "index": i, "flag": u, "divisor": d.0 }))
                .collect();
            format!("{}\n", Value::Array(v))
        }
        Format::Text => rows.iter().map(|(k, i, u, d)| format!("S{}[{}]  {}  D = {}\n", k, i, u, d)).collect(),
        _ => rows.iter().map(|(k, i, u, d)| format!("{}\t{}\t{}\t{}\n", k, i, u, d)).collect(),
    }
}

pub fn divisors(ds: &[Divisor], format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", json!(ds.iter().map(|d| &d.0).collect::<Vec<_>>())),
        _ => ds.iter().map(|d| format!("{}\n", d)).collect(),
    }
}

pub fn orientations(g: &PointedGraph, es: &[Divisor], format: Format) -> String {
    if format != Format::Dot {
        return divisors(es, format);
    }
    es.iter()
        .filter_map(|e| toppling::divisor::orientation_of_maximal_reduced(g, e))
        .map(|o| o.to_dot())
        .collect()
}

struct Check {
    name: &'static str,
    failure: Option<String>,
}

fn check(name: &'static str, failure: Option<String>) -> Check {
    Check { name, failure }
}

fn tables_differ(what: &str, a: &BettiTable, b: &BettiTable) -> Option<String> {
    if a == b {
        None
    } else {
        Some(format!("{} {:?} vs flag count {:?}", what, a.totals(), b.totals()))
    }
}

/// Runs the selected checks; a failed check yields `ok = false` (exit 2).
pub fn verify(g: &PointedGraph, opts: &Options, oracle: Oracle) -> Result<Output> {
    let want = |o: Oracle| oracle == Oracle::All || oracle == o;
    let field = opts.field;
    let table = betti_table(g)?;
    let gens: Vec<Polynomial> = toppling::groebner_basis(g)?.iter().map(|b| b.to_polynomial(field)).collect();
    let mut checks = Vec::new();

    if want(Oracle::Complex) {
        let res = assemble_resolution(g, opts.variant.into(), field)?;
        for c in verify_resolution(g, &res).checks {
            checks.push(check(c.name, c.failure));
        }
        let ok = buchberger_check(&gens, &SchreyerOrder::new(g.term_order()));
        checks.push(check("Buchberger", (!ok).then(|| "an S-pair has a nonzero remainder".to_string())));
    }
    if want(Oracle::Schreyer) {
        let res = schreyer_resolution(&gens, g.term_order(), BasisOrder::Sorted, g.n() + 2)?;
        checks.push(check("Schreyer-oracle", tables_differ("Schreyer", &minimalize(g, &res), &table)));
    }
    if want(Oracle::Hochster) {
        let top = table.z_graded.keys().map(|(_, j)| *j).max().unwrap_or(0);
        checks.push(check("Hochster", tables_differ("Hochster", &hochster_table(g, top, field), &table)));
    }
    if want(Oracle::Flags) {
        let mut failure = None;
        for k in 1..=g.n() {
            let (brute, listed) = (brute_force_class_count(g, k), toppling::enumerate_minimal_flags(g, k)?.len());
            if brute != listed {
                failure = Some(format!("k = {}: {} classes by brute force, {} listed", k, brute, listed));
                break;
            }
        }
        let aos = toppling::divisor::acyclic_orientations_unique_source(g).len();
        if failure.is_none() && table.total(g.n() - 1) != aos {
            failure = Some(format!("top Betti number {} but {} orientations", table.total(g.n() - 1), aos));
        }
        checks.push(check("flags", failure));
    }
    if want(Oracle::Hilbert) {
        let failure = match hilbert_check(g, g.edge_count() as usize + 2) {
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        };
        checks.push(check("Hilbert", failure));
    }

    let ok = checks.iter().all(|c| c.failure.is_none());
    let text = if opts.format == Some(Format::Json) {
        let v: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "passed": c.failure.is_none(), "detail": c.failure }))
            .collect();
        format!("{}\n", json!({ "passed": ok, "checks": v }))
    } else {
        let parts: Vec<String> = checks
            .iter()
            .map(|c| match &c.failure {
                None => format!("{} ✓", c.name),
                Some(why) => format!("{} ✗ ({})", c.name, why),
            })
            .collect();
        format!("{}\n", parts.join(", "))
    };
    Ok(Output { text, ok })
}
