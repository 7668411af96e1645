//! Levine-Tristram signature and nullity on every arc of the upper half circle.

use knotobs::frontend::{braid_seifert_matrix, torus_braid};
use knotobs::seifert::signature_profile;

fn main() -> knotobs::Result<()> {
    let s = braid_seifert_matrix(&torus_braid(3, 4))?;
    let p = signature_profile(&s)?;
    println!("T(3,4): Delta = {}", p.alexander);
    for (k, arc) in p.arcs.iter().enumerate() {
        let end = p.jumps.get(k).map_or(std::f64::consts::PI, |j| j.angle);
        println!("  arc {k} up to {end:.4}: sigma = {}, eta = {}", arc.sigma, arc.eta);
    }
    for j in &p.jumps {
        println!(
            "  jump at {:.4} (multiplicity {}, root of unity {:?})",
            j.angle, j.multiplicity, j.root_of_unity
        );
    }
    println!("  at -1: sigma = {}, eta = {}", p.at_minus_one.0, p.at_minus_one.1);
    Ok(())
}
