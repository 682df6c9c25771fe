//! Kronecker quivers with m parallel arrows and thin dimension vector.
//!
//! `cargo run --example kronecker_family -- 8`

use quiver_vgit::analysis::{analyze, AnalysisOptions};
use quiver_vgit::quiver::{DimensionVector, Quiver};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    for m in 1..=max {
        let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "0", "1")).collect();
        let quiver = Quiver::from_names(&["0", "1"], &arrows)?;
        let analysis = analyze(&quiver, &DimensionVector::thin(2), &AnalysisOptions::default())?;
        for (_, c) in analysis.g_ample_chambers() {
            println!("m = {m}: {}  {}  rho = {:?}", c.label, c.cnf.render(&quiver), c.picard_number);
        }
    }
    Ok(())
}
