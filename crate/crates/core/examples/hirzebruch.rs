//! Three vertices, a double arrow A → B and single arrows A → C, B → C.
//!
//! `cargo run --example hirzebruch`

use quiver_vgit::analysis::{analyze, stable_matrix, AnalysisOptions};
use quiver_vgit::quiver::{DimensionVector, Quiver};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quiver = Quiver::from_names(
        &["A", "B", "C"],
        &[("beta1", "A", "B"), ("beta2", "A", "B"), ("gamma", "A", "C"), ("alpha", "B", "C")],
    )?;
    let analysis = analyze(&quiver, &DimensionVector::thin(3), &AnalysisOptions::default())?;
    let matrix = stable_matrix(&analysis);
    for (row, &i) in matrix.entries.iter().zip(&matrix.chambers) {
        let c = &analysis.chambers[i];
        let stable: Vec<&str> = matrix
            .chambers
            .iter()
            .zip(row)
            .filter(|(_, &s)| s)
            .map(|(&j, _)| analysis.chambers[j].label.as_str())
            .collect();
        println!(
            "{}: {}  r = {}  rho = {:?}  stable: {}",
            c.label,
            c.cnf.render(&quiver),
            c.unstable_divisors.len(),
            c.picard_number,
            stable.join(" ")
        );
    }
    Ok(())
}
