//! Homology of cyclic branched covers, by resultant and by field norms.

use knotobs::covers::{branched_cover_homology, h1_order_by_norms};
use knotobs::seifert::SeifertMatrix;

fn main() -> knotobs::Result<()> {
    let trefoil = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1)?;
    for n in 2..=7 {
        let r = branched_cover_homology(&trefoil, n)?;
        let norms = h1_order_by_norms(&trefoil.alexander(), n);
        println!("n = {n}: |H1| = {} (norms: {norms}), b1 = {:?}", r.h1_order, r.betti1);
    }
    Ok(())
}
