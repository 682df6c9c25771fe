//! Walls of the four-vertex quiver with two paths from vertex 0 to vertex 3,
//! restricted to an affine slice of the character space.
//!
//! `cargo run --example diamond_walls`

use quiver_vgit::analysis::walls::slice_walls;
use quiver_vgit::analysis::{analyze, AnalysisOptions};
use quiver_vgit::geometry::slice::{SliceObject, SliceSpec};
use quiver_vgit::quiver::{DimensionVector, Quiver};
use quiver_vgit::rational::{ints, Tuple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quiver = Quiver::from_names(
        &["0", "1", "2", "3"],
        &[("a", "0", "1"), ("b", "0", "2"), ("c", "1", "2"), ("d", "1", "3"), ("e", "2", "3")],
    )?;
    let options = AnalysisOptions {
        basis: Some(vec![vec![1, 1, -1, -1], vec![1, -1, 1, -1], vec![1, -1, -1, 1]]),
        ..AnalysisOptions::default()
    };
    let analysis = analyze(&quiver, &DimensionVector::thin(4), &options)?;
    let slice = SliceSpec::affine(ints(&[1, 1, 0]), ints(&[1, -1, 0]), ints(&[0, 0, 1]))?;

    println!("{} hyperplanes from {} subdimension classes", analysis.arrangement.len(), analysis.classes.len());
    for (class, wall) in analysis.classes.iter().zip(slice_walls(&analysis, &slice)?) {
        let occurs: Vec<&str> = class.boundary_clause.iter().map(|&k| quiver.arrows()[k].name.as_str()).collect();
        let occurs = if occurs.is_empty() { "always".to_string() } else { format!("{}=0", occurs.join("=")) };
        let line = match &wall.object {
            SliceObject::Line { a, b } => format!("a={} b={}", Tuple(a), Tuple(b)),
            other => format!("{other:?}"),
        };
        let side = wall.extends_to.map(|s| s.to_string()).unwrap_or_default();
        println!("e={:<10} {:<8} {:<22} {}", format!("{:?}", class.e.entries()), occurs, line, side);
    }
    Ok(())
}
