//! Text and JSON rendering of invariant reports.

use std::fmt::Write as _;

use crate::diagram::Side;
use crate::invariant::{Analysis, InvariantReport};
use crate::linalg::SignatureTriple;

pub fn to_json(report: &InvariantReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn side_tag(side: Side) -> char {
    match side {
        Side::Left => 'L',
        Side::Right => 'R',
    }
}

fn matrix(out: &mut String, title: &str, rows: &[Vec<i64>]) {
    let _ = writeln!(out, "{title} ({0}x{0}):", rows.len());
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
}

fn vectors(out: &mut String, title: &str, vs: &[Vec<i64>]) {
    let _ = writeln!(out, "{title}:");
    for v in vs {
        let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  ({})", cells.join(", "));
    }
}

fn triple(t: &SignatureTriple) -> String {
    format!("(p={}, q={}, z={}) signature {}", t.p, t.q, t.z, t.signature())
}

pub fn to_text(report: &InvariantReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", report.name);
    let _ = writeln!(out, "crossings: {}", report.n);
    let _ = writeln!(out, "alternating: {}", report.alternating);
    let _ = writeln!(out, "e: {}", report.e);
    let _ = writeln!(out, "gsig: {}", report.gsig);
    let _ = writeln!(out, "sigma_tilde: {}", report.sigma_tilde);
    let _ = writeln!(out, "bg4_lower: {}", report.bg4_lower);
    out
}

/// Report followed by faces, shading, forms and eigenspace bases.
pub fn to_explained_text(a: &Analysis) -> String {
    let mut out = to_text(&a.report);
    let r = &a.report.intermediates;
    let fc = &a.faces.complex;
    let _ = writeln!(out, "\nfaces ({}):", fc.len());
    for (f, sides) in fc.faces().iter().enumerate() {
        let cyc: Vec<String> = sides
            .iter()
            .map(|&(s, side)| format!("{s}{}", side_tag(side)))
            .collect();
        let shade = if a.faces.shading.is_shaded(f) {
            "shaded"
        } else if f == a.faces.shading.r_infinity() {
            "unshaded, h'"
        } else {
            "unshaded"
        };
        let _ = writeln!(
            out,
            "  f{f} [{shade}] -> f{}: {}",
            a.faces.involution.image(f),
            cyc.join(" ")
        );
    }
    let etas: Vec<String> = r
        .eta
        .iter()
        .enumerate()
        .map(|(k, e)| format!("{}:{:+}", k + 1, e))
        .collect();
    let _ = writeln!(out, "eta: {}", etas.join(" "));
    let basis: Vec<String> = r
        .basis
        .iter()
        .zip(&r.basis_labels)
        .map(|(f, s)| format!("f{f}@{s}"))
        .collect();
    let _ = writeln!(out, "goeritz basis: {}", basis.join(" "));
    if !r.invariant_regions.is_empty() {
        let inv: Vec<String> = r.invariant_regions.iter().map(|f| format!("f{f}")).collect();
        let _ = writeln!(out, "invariant regions besides h': {}", inv.join(" "));
    }
    matrix(&mut out, "G", &r.goeritz);
    let _ = writeln!(out, "  {}", triple(&r.goeritz_signature));
    vectors(&mut out, "E+ basis", &r.plus_basis);
    matrix(&mut out, "M+", &r.m_plus);
    let _ = writeln!(out, "  {}", triple(&r.plus_signature));
    vectors(&mut out, "E- basis", &r.minus_basis);
    matrix(&mut out, "M-", &r.m_minus);
    let _ = writeln!(out, "  {}", triple(&r.minus_signature));
    let _ = writeln!(out, "crosscheck e: {}", r.crosscheck_e);
    if let Some(f) = r.fast_path {
        let _ = writeln!(out, "alternating fast path: {f}");
    }
    out
}
