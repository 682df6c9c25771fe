//! SVG rendering of a slice figure.
//!
//! All geometry stays exact until coordinates are written, where they are
//! rounded to six decimals. The y axis can be stretched with `yscale`.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use crate::geometry::slice::{clip_line, clip_polygon, vertex_average, Point2, SliceForm, Viewport};
use crate::rational::{fmt_decimal, int, Rational};
use crate::report::document::AnalysisDocument;

const WIDTH: i64 = 480;
const MARGIN: i64 = 24;

struct Frame {
    viewport: Viewport,
    scale: Rational,
    yscale: Rational,
}

impl Frame {
    fn x(&self, x: &Rational) -> String {
        fmt_decimal(&(int(MARGIN) + (x - &self.viewport.xmin) * &self.scale), 6)
    }

    fn y(&self, y: &Rational) -> String {
        fmt_decimal(&(int(MARGIN) + (&self.viewport.ymax - y) * &self.yscale * &self.scale), 6)
    }

    fn height(&self) -> Rational {
        (&self.viewport.ymax - &self.viewport.ymin) * &self.yscale * &self.scale
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Counts of what ended up inside the viewport.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgStats {
    pub lines: usize,
    pub labels: usize,
    pub markers: usize,
    pub arrows: usize,
}

pub fn render_svg(doc: &AnalysisDocument, viewport: &Viewport, yscale: &Rational) -> String {
    render_svg_with_stats(doc, viewport, yscale).0
}

pub fn render_svg_with_stats(doc: &AnalysisDocument, viewport: &Viewport, yscale: &Rational) -> (String, SvgStats) {
    let width = &viewport.xmax - &viewport.xmin;
    let degenerate = width <= Rational::zero() || viewport.ymax <= viewport.ymin || *yscale <= Rational::zero();
    let frame = Frame {
        viewport: viewport.clone(),
        scale: if degenerate { int(1) } else { int(WIDTH) / width },
        yscale: if degenerate { int(1) } else { yscale.clone() },
    };
    let total_w = int(WIDTH + 2 * MARGIN);
    let total_h = if degenerate { int(2 * MARGIN) } else { frame.height() + int(2 * MARGIN) };
    let mut stats = SvgStats::default();
    let mut body = String::new();

    if let (Some(fig), false) = (&doc.figure, degenerate) {
        for r in &fig.regions {
            let forms: Vec<SliceForm> = r.half_planes.iter().map(|f| f.form()).collect();
            let poly = clip_polygon(&forms, viewport);
            if poly.len() < 3 {
                continue;
            }
            let pts: Vec<String> = poly.iter().map(|p| format!("{},{}", frame.x(&p[0]), frame.y(&p[1]))).collect();
            let _ = writeln!(
                body,
                r##"  <polygon class="chamber" data-chamber="{}" points="{}" fill="#dde6f5" fill-opacity="0.6" stroke="none"/>"##,
                escape(&r.label),
                pts.join(" ")
            );
        }
        for l in &fig.lines {
            let a: Point2 = [l.a[0].0.clone(), l.a[1].0.clone()];
            let b: Point2 = [l.b[0].0.clone(), l.b[1].0.clone()];
            if let Some((p, q)) = clip_line(&a, &b, viewport) {
                if p == q {
                    continue;
                }
                stats.lines += 1;
                let _ = writeln!(
                    body,
                    r#"  <line class="wall" data-hyperplane="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
                    l.hyperplane,
                    frame.x(&p[0]),
                    frame.y(&p[1]),
                    frame.x(&q[0]),
                    frame.y(&q[1])
                );
            }
        }
        for r in &fig.regions {
            let forms: Vec<SliceForm> = r.half_planes.iter().map(|f| f.form()).collect();
            let poly = clip_polygon(&forms, viewport);
            if poly.len() < 3 {
                continue;
            }
            let c = vertex_average(&poly).expect("nonempty polygon");
            stats.labels += 1;
            let _ = writeln!(
                body,
                r#"  <text class="label" x="{}" y="{}" text-anchor="middle" dominant-baseline="middle" font-family="sans-serif" font-size="16">{}</text>"#,
                frame.x(&c[0]),
                frame.y(&c[1]),
                escape(&r.label)
            );
        }
        for m in &fig.markers {
            let p: Point2 = [m.x.0.clone(), m.y.0.clone()];
            if !viewport.contains(&p) {
                continue;
            }
            stats.markers += 1;
            let _ = writeln!(
                body,
                r#"  <circle class="marker" data-arrow="{}" cx="{}" cy="{}" r="4" fill="black"/>"#,
                escape(&m.arrow),
                frame.x(&p[0]),
                frame.y(&p[1])
            );
            let _ = writeln!(
                body,
                r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12">χ_{}</text>"#,
                fmt_decimal(&(int(MARGIN + 6) + (&p[0] - &viewport.xmin) * &frame.scale), 6),
                frame.y(&p[1]),
                escape(&m.arrow)
            );
        }
        // Directions are drawn as arrows from the viewport centre; only
        // their direction carries meaning.
        let centre = [
            (&viewport.xmin + &viewport.xmax) / int(2),
            (&viewport.ymin + &viewport.ymax) / int(2),
        ];
        for (k, m) in fig.directions.iter().enumerate() {
            let dx = m.x.0.to_f64().unwrap_or(0.0);
            let dy = (&m.y.0 * &frame.yscale).to_f64().unwrap_or(0.0);
            let norm = (dx * dx + dy * dy).sqrt();
            if norm == 0.0 {
                continue;
            }
            stats.arrows += 1;
            let len = f64::from(WIDTH as i32) / 8.0;
            let x0 = frame.x(&centre[0]).parse::<f64>().unwrap_or(0.0);
            let y0 = frame.y(&centre[1]).parse::<f64>().unwrap_or(0.0) + 14.0 * k as f64;
            let _ = writeln!(
                body,
                r#"  <line class="direction" data-arrow="{}" x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="black" stroke-width="1.5" marker-end="url(#head)"/>"#,
                escape(&m.arrow),
                x0,
                y0,
                x0 + len * dx / norm,
                y0 - len * dy / norm
            );
            let _ = writeln!(
                body,
                r#"  <text x="{:.6}" y="{:.6}" font-family="sans-serif" font-size="12">χ_{}</text>"#,
                x0 + len * dx / norm + 4.0,
                y0 - len * dy / norm - 4.0,
                escape(&m.arrow)
            );
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_decimal(&total_w, 6),
        h = fmt_decimal(&total_h, 6)
    );
    out.push_str(
        "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n",
    );
    if degenerate {
        out.push_str("  <!-- warning: degenerate viewport -->\n");
    } else if doc.figure.is_none() {
        out.push_str("  <!-- warning: the request has no slice -->\n");
    } else if stats == SvgStats::default() {
        out.push_str("  <!-- warning: the viewport excludes all content -->\n");
    }
    let _ = writeln!(
        out,
        r#"  <rect class="frame" x="{m}" y="{m}" width="{}" height="{}" fill="none" stroke="gray"/>"#,
        fmt_decimal(&int(WIDTH), 6),
        fmt_decimal(&(&total_h - int(2 * MARGIN)), 6),
        m = fmt_decimal(&int(MARGIN), 6)
    );
    out.push_str(&body);
    out.push_str("</svg>\n");
    (out, stats)
}
