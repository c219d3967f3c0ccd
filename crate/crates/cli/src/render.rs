//! Aligned plain-text reports.

use jstrata::gallery::GalleryEntry;
use jstrata::strata::{format_point, GammaJ};
use jstrata::{CohomClass, Elem, ModuleRep, StratumReport};
use serde_json::Value;

fn point_list(points: &[Vec<Elem>]) -> String {
    if points.is_empty() {
        return "{}".to_string();
    }
    points.iter().map(|p| format_point(p)).collect::<Vec<_>>().join(" ")
}

fn aligned(rows: &[(String, String)], indent: &str) -> String {
    let width = rows.iter().map(|(a, _)| a.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(a, b)| format!("{indent}{a:<width$}  {b}").trim_end().to_string()).collect::<Vec<_>>().join("\n")
}

fn equations(report: &StratumReport, g: &GammaJ) -> Option<String> {
    let cert = g.certificate.as_ref()?.to_json(&report.params);
    Some(match cert["kind"].as_str().unwrap_or("") {
        "minors" => {
            let gens: Vec<&str> = cert["generators"].as_array()?.iter().filter_map(Value::as_str).collect();
            format!("minors <{}>", gens.join(", "))
        }
        "chart-divisors" => {
            let side = |c: &Value| {
                let s = |k: &str| c[k].as_str().unwrap_or("").to_string();
                format!("{}, {}=t: {}", s("chart"), s("variable"), s("divisor"))
            };
            format!("chart divisors {}; {}", side(&cert["affine"]), side(&cert["at_infinity"]))
        }
        _ => format!("omitted ({} minors)", cert["minor_count"].as_str().unwrap_or("?")),
    })
}

fn gamma_rows(report: &StratumReport, g: &GammaJ) -> Vec<(String, String)> {
    let mut rows = vec![(format!("j={} R={}", g.j, g.max_rank), point_list(&g.points))];
    if let Some(eq) = equations(report, g) {
        rows.push((String::new(), eq));
    }
    rows
}

pub fn strata_table(report: &StratumReport) -> String {
    let generic = report.generic_type.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "-".into());
    let ranks: Vec<String> = report.max_jranks.iter().map(|r| r.to_string()).collect();
    let header = [
        ("module".to_string(), report.module.clone()),
        ("field".to_string(), report.field.to_string()),
        ("dim".to_string(), report.dim.to_string()),
        ("generic".to_string(), generic),
        ("max ranks".to_string(), ranks.join(" ")),
        ("symbolic".to_string(), report.symbolic.to_string()),
    ];
    let strata: Vec<(String, String)> = report.strata.iter().map(|(t, p)| (t.to_string(), point_list(p))).collect();
    let gamma: Vec<(String, String)> = report.gamma.iter().flat_map(|g| gamma_rows(report, g)).collect();
    format!("{}\nstrata\n{}\ngamma\n{}", aligned(&header, ""), aligned(&strata, "  "), aligned(&gamma, "  "))
}

pub fn gamma_table(report: &StratumReport, g: &GammaJ) -> String {
    aligned(&gamma_rows(report, g), "")
}

pub fn ext1_table(m: &ModuleRep, basis: &[CohomClass]) -> String {
    let mut rows = vec![("dimension".to_string(), basis.len().to_string())];
    for (i, z) in basis.iter().enumerate() {
        let h = z.hom();
        let cols: Vec<String> = (0..h.cols())
            .map(|c| {
                let col: Vec<String> = (0..h.rows()).map(|r| h.get(r, c).to_string()).collect();
                format!("({})", col.join(","))
            })
            .collect();
        rows.push((format!("class {i}"), cols.join(" ")));
    }
    format!("H^1 of {}\n{}", m.name().unwrap_or("module"), aligned(&rows, ""))
}

pub fn points_table(points: &[Vec<Elem>], split: Option<bool>) -> String {
    let mut rows = vec![("points".to_string(), point_list(points))];
    if let Some(s) = split {
        rows.push(("locally split".to_string(), s.to_string()));
    }
    aligned(&rows, "")
}

pub fn gallery_table(entries: &[GalleryEntry]) -> String {
    let rows: Vec<(String, String)> =
        entries.iter().map(|e| (e.name.to_string(), format!("{}: {}", e.params, e.summary))).collect();
    aligned(&rows, "")
}
