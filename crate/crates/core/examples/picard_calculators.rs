//! The two closed-form Picard calculators.
//!
//! `cargo run --example picard_calculators`

use quiver_vgit::analysis::picard::{picard_general, picard_mds_quotient, PicardFormulaInputs};

fn main() {
    let inputs = PicardFormulaInputs { rk_character_group: 2, component_count: 1, rk_units_invariant: 0, rk_units_quotient: 0 };
    println!("general {inputs:?} -> {:?}", picard_general(&inputs));
    for (rho, rk, comps) in [(6, 0, 1), (6, 0, 0), (3, 2, 0), (1, 3, 0)] {
        println!("quotient rho_Y = {rho}, rk = {rk}, components = {comps} -> {:?}", picard_mds_quotient(rho, rk, comps));
    }
}
