//! Writes the slice picture of `fixtures/diamond.txt` as SVG.
//!
//! `cargo run --example slice_figure > diamond.svg`

use quiver_vgit::geometry::slice::Viewport;
use quiver_vgit::rational::{frac, int};
use quiver_vgit::report::svg::render_svg_with_stats;
use quiver_vgit::report::{parse_request, run_request};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let request = parse_request(include_str!("../fixtures/diamond.txt"))?;
    let doc = run_request(&request)?;
    let viewport = Viewport::new(int(-1), int(3), int(-2), int(2));
    let (svg, stats) = render_svg_with_stats(&doc, &viewport, &frac(1, 1));
    eprintln!(
        "{} wall lines, {} chamber labels, {} markers, {} direction arrows",
        stats.lines, stats.labels, stats.markers, stats.arrows
    );
    print!("{svg}");
    Ok(())
}
