//! G-ample chambers, their unstable divisors and the stable-chamber matrix
//! for the request in `fixtures/diamond.txt`.
//!
//! `cargo run --example stable_chambers`

use quiver_vgit::analysis::{analyze, locate_chamber, pseudoeffective_cone, stable_matrix, Location};
use quiver_vgit::quiver::Character;
use quiver_vgit::report::parse_request;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let request = parse_request(include_str!("../fixtures/diamond.txt"))?;
    let analysis = analyze(&request.quiver, &request.d, &request.options())?;
    let q = &analysis.quiver;

    for (_, c) in analysis.g_ample_chambers() {
        let z: Vec<&str> = c.unstable_divisors.iter().map(|&k| q.arrows()[k].name.as_str()).collect();
        println!("{}: {}  Z = {{{}}}  rho = {:?}", c.label, c.cnf.render(q), z.join(", "), c.picard_number);
    }

    let matrix = stable_matrix(&analysis);
    for (row, &i) in matrix.entries.iter().zip(&matrix.chambers) {
        let stable: Vec<&str> = matrix
            .chambers
            .iter()
            .zip(row)
            .filter(|(_, &s)| s)
            .map(|(&j, _)| analysis.chambers[j].label.as_str())
            .collect();
        println!("stable wrt {}: {}", analysis.chambers[i].label, stable.join(" "));
    }

    let base = Character(vec![3, -1, -1, -1]);
    if let Location::Chamber(i) = locate_chamber(&base, &analysis)? {
        let cone: Vec<&str> = pseudoeffective_cone(i, &matrix)?.iter().map(|&j| analysis.chambers[j].label.as_str()).collect();
        println!("base {:?} lies in {}; pseudoeffective cone {}", base.0, analysis.chambers[i].label, cone.join(" ∪ "));
    }
    Ok(())
}
