//! Fixed-width text tables.

use crate::rational::fmt_rational;
use crate::report::document::{AnalysisDocument, ChamberRow, LocationDoc, SliceObjectDoc, Q};

/// Color only for terminals, and never when `NO_COLOR` is set to a
/// nonempty value.
pub fn color_enabled(is_terminal: bool, no_color: Option<&std::ffi::OsStr>) -> bool {
    is_terminal && no_color.map_or(true, |v| v.is_empty())
}

fn pair(p: &[Q; 2]) -> String {
    format!("({},{})", fmt_rational(&p[0].0), fmt_rational(&p[1].0))
}

fn tuple(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|q| fmt_rational(&q.0)).collect();
    format!("({})", parts.join(","))
}

fn ints<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn table(headers: &[&str], rows: &[Vec<String>], color: bool) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat(' ').take(w - c.chars().count()));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = String::new();
    let head = line(headers.to_vec());
    if color {
        out.push_str(&format!("\x1b[1m{head}\x1b[0m\n"));
    } else {
        out.push_str(&head);
        out.push('\n');
    }
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(rule.iter().map(String::as_str).collect()));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn heading(title: &str, color: bool) -> String {
    if color {
        format!("\x1b[1;4m{title}\x1b[0m\n")
    } else {
        format!("{title}\n")
    }
}

pub fn render_summary(doc: &AnalysisDocument) -> String {
    let q = &doc.quiver;
    let mut flags = Vec::new();
    flags.push(if q.thin { "thin" } else { "not thin" });
    flags.push(if q.sincere { "sincere" } else { "not sincere" });
    flags.push(if q.coprime { "coprime" } else { "not coprime" });
    flags.push(if q.acyclic { "acyclic" } else { "has oriented cycles" });
    let g_ample = doc.chambers.iter().filter(|c| c.g_ample).count();
    let basis: Vec<String> = doc.basis.iter().map(|b| ints(b)).collect();
    let mut out = format!(
        "quiver: {} vertices, {} arrows; d = {}; {}\n",
        q.vertices.len(),
        q.arrows.len(),
        ints(&q.d),
        flags.join(", ")
    );
    out.push_str(&format!("basis of d^perp: {}\n", if basis.is_empty() { "(empty)".into() } else { basis.join(" ") }));
    out.push_str(&format!(
        "scope: {}; hyperplanes: {}; cells: {}; chambers: {} ({} G-ample)\n",
        doc.scope,
        doc.hyperplanes,
        doc.cells,
        doc.chambers.len(),
        g_ample
    ));
    if let Some(s) = &doc.slice {
        let p = s.p.as_ref().map_or("linear".to_string(), |p| format!("p={}", tuple(p)));
        out.push_str(&format!("slice: {p} u1={} u2={}\n", tuple(&s.u1), tuple(&s.u2)));
    }
    out
}

pub fn render_walls(doc: &AnalysisDocument, color: bool) -> String {
    let with_slice = doc.slice.is_some();
    let mut headers = vec!["id", "e", "occurs iff", "normal", "hyperplane"];
    if with_slice {
        headers.extend(["slice a", "slice b", "extends to"]);
    }
    let rows: Vec<Vec<String>> = doc
        .walls
        .iter()
        .map(|w| {
            let mut row = vec![
                w.id.to_string(),
                ints(&w.e),
                w.occurs_iff_zero.as_ref().map_or("always".into(), |c| format!("{}=0", c.join("="))),
                ints(&w.normal),
                w.hyperplane.map_or("-".into(), |h| format!("H{h}")),
            ];
            if let Some(s) = &w.slice {
                let (a, b) = match &s.object {
                    SliceObjectDoc::Line { a, b } => (pair(a), pair(b)),
                    SliceObjectDoc::Absent => ("absent".into(), "-".into()),
                    SliceObjectDoc::Everywhere => ("whole slice".into(), "-".into()),
                    _ => ("-".into(), "-".into()),
                };
                row.extend([a, b, s.extends_to.clone().unwrap_or_else(|| "-".into())]);
            }
            row
        })
        .collect();
    heading("Walls", color) + &table(&headers, &rows, color)
}

fn slice_limit(o: &SliceObjectDoc) -> String {
    match o {
        SliceObjectDoc::Point { x, y } => format!("point ({},{})", fmt_rational(&x.0), fmt_rational(&y.0)),
        SliceObjectDoc::Direction { x, y } => format!("direction ({},{})", fmt_rational(&x.0), fmt_rational(&y.0)),
        SliceObjectDoc::ExitsSlice { .. } => "exits slice".into(),
        _ => "-".into(),
    }
}

/// `Z: N(a), N(e); ρ = 1`.
pub fn divisor_summary(c: &ChamberRow) -> String {
    let z = if c.unstable_divisors.is_empty() {
        "∅".to_string()
    } else {
        c.unstable_divisors.iter().map(|a| format!("N({a})")).collect::<Vec<_>>().join(", ")
    };
    let rho = c.picard_number.map_or("ρ undefined".to_string(), |r| format!("ρ = {r}"));
    if c.g_ample {
        format!("Z: {z}; {rho}")
    } else {
        format!("not G-ample; {rho}")
    }
}

pub fn render_chambers(doc: &AnalysisDocument, color: bool) -> String {
    let with_slice = doc.slice.is_some();
    let mut headers = vec!["chamber", "cells", "witness", "semistable locus", "divisors"];
    if with_slice {
        headers.push("divisor characters on slice");
    }
    let rows: Vec<Vec<String>> = doc
        .chambers
        .iter()
        .map(|c| {
            let mut row = vec![
                c.label.clone(),
                c.cells.to_string(),
                tuple(&c.witness),
                c.semistable_locus.clone(),
                divisor_summary(c),
            ];
            if with_slice {
                let parts: Vec<String> = c
                    .divisor_characters
                    .iter()
                    .map(|d| format!("χ_{} ↦ {}", d.arrow, d.slice.as_ref().map_or("-".into(), slice_limit)))
                    .collect();
                row.push(if parts.is_empty() { "-".into() } else { parts.join("; ") });
            }
            row
        })
        .collect();
    heading("Chambers", color) + &table(&headers, &rows, color)
}

pub fn render_stable(doc: &AnalysisDocument, color: bool) -> String {
    let m = &doc.stable_matrix;
    let mut headers: Vec<&str> = vec!["base \\ stable"];
    headers.extend(m.chambers.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = m
        .chambers
        .iter()
        .zip(&m.rows)
        .map(|(label, row)| {
            let mut r = vec![label.clone()];
            r.extend(row.iter().map(|&b| if b { "x".to_string() } else { ".".to_string() }));
            r
        })
        .collect();
    let mut out = heading("Stable chambers", color) + &table(&headers, &rows, color);
    if let Some(b) = &doc.base {
        let loc = match &b.location {
            LocationDoc::Chamber { label } => format!("lies in {label}"),
            LocationDoc::OnWall { hyperplanes } => {
                let hs: Vec<String> = hyperplanes.iter().map(|h| format!("H{h}")).collect();
                format!("lies on {}", hs.join(", "))
            }
            LocationDoc::Outside => "lies outside the analyzed chambers".into(),
        };
        out.push_str(&format!("\nbase character {} {loc}\n", ints(&b.character)));
        if !b.pseudoeffective.is_empty() {
            out.push_str(&format!(
                "pseudoeffective cone (Mori chambers of the base quotient): {}\n",
                b.pseudoeffective.join(" ∪ ")
            ));
        }
    }
    out
}

fn render_warnings(doc: &AnalysisDocument) -> String {
    doc.warnings.iter().map(|w| format!("warning: {w}\n")).collect()
}

/// Summary, walls, chambers, stable matrix and warnings.
pub fn render_tables(doc: &AnalysisDocument, color: bool) -> String {
    let mut out = render_summary(doc);
    out.push('\n');
    out.push_str(&render_walls(doc, color));
    out.push('\n');
    out.push_str(&render_chambers(doc, color));
    out.push('\n');
    out.push_str(&render_stable(doc, color));
    if !doc.warnings.is_empty() {
        out.push('\n');
        out.push_str(&render_warnings(doc));
    }
    out
}

