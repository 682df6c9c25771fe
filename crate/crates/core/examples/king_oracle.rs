//! Compares each chamber's semistable-locus formula against brute-force
//! King stability over every zero pattern of the arrows, on random acyclic
//! quivers.
//!
//! `cargo run --release --example king_oracle -- 20 7`

use quiver_vgit::analysis::{analyze, AnalysisOptions, Scope};
use quiver_vgit::quiver::{king_semistability, Character, DimensionVector, Quiver, Semistability, ThinRepPattern};
use quiver_vgit::rational::primitive_positive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_quiver(rng: &mut ChaCha8Rng) -> Quiver {
    let n = rng.gen_range(2..=5);
    let m = rng.gen_range(1..=8);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (0..m)
        .map(|k| {
            let s = rng.gen_range(0..n - 1);
            let t = rng.gen_range(s + 1..n);
            (format!("x{k}"), names[s].clone(), names[t].clone())
        })
        .collect();
    let vs: Vec<&str> = names.iter().map(String::as_str).collect();
    let arr: Vec<(&str, &str, &str)> = arrows.iter().map(|(a, s, t)| (a.as_str(), s.as_str(), t.as_str())).collect();
    Quiver::from_names(&vs, &arr).expect("valid names")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let options = AnalysisOptions { scope: Scope::GAmpleOnly, ..AnalysisOptions::default() };
    let mut checked = 0usize;
    for _ in 0..count {
        let quiver = random_quiver(&mut rng);
        let analysis = analyze(&quiver, &DimensionVector::thin(quiver.vertex_count()), &options)?;
        let m = quiver.arrows().len();
        for (_, c) in analysis.g_ample_chambers() {
            let (w, _) = primitive_positive(&analysis.to_ambient(&c.chamber.witness));
            let theta = Character(w.iter().map(|x| i64::try_from(x).expect("small witness")).collect());
            for mask in 0..1u64 << m {
                let p = ThinRepPattern::from_mask(m, mask);
                let king = king_semistability(&quiver, &p, &theta) != Semistability::Unstable;
                assert_eq!(c.cnf.evaluate(&p), king, "{} disagrees on pattern {mask:#b}", c.label);
                checked += 1;
            }
        }
    }
    println!("{count} quivers, {checked} pattern checks agree");
    Ok(())
}
