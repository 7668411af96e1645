//! Full obstruction report for a strongly quasipositive candidate.

use knotobs::families::two_bridge_seifert_matrix;
use knotobs::obstruct::{obstruction_report, sqp_lspace_obstruction};

fn main() -> knotobs::Result<()> {
    let s = two_bridge_seifert_matrix(7, 2)?.with_name("5_2");
    for n in [2, 8, 9] {
        println!("n = {n}: {:?}", sqp_lspace_obstruction(&s, n)?);
    }
    let report = obstruction_report(&s, Some(1))?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}
