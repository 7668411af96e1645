//! Genus one two-bridge knots and the family K(k, m).

use knotobs::families::{genus1_two_bridge, kkm_alexander, kkm_root_location, minkus_alexander};

fn main() -> knotobs::Result<()> {
    for (k, l) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let g = genus1_two_bridge(k, l)?;
        println!(
            "[{}, {}] = {}/{}: Delta = {}, SQP = {}, L-space covers possible up to n = {}",
            2 * k,
            -2 * l,
            g.p,
            g.q,
            g.alexander,
            g.is_sqp,
            g.n_bound.map_or("any".to_string(), |n| n.to_string())
        );
    }
    for m in 2..=4 {
        let d = kkm_alexander(3, m)?;
        let same = d == minkus_alexander(2 * m * 5 + 1, 5)?;
        println!("K(3,{m}): {d} (matches Minkus: {same}), {:?}", kkm_root_location(3, m)?);
    }
    Ok(())
}
