//! Cyclotomic factors allowed for a monic Alexander polynomial at each cover order.

use knotobs::obstruct::{lspace_knot_screen, monic_classification};
use knotobs::polyalg::cyclotomic_laurent;

fn main() -> knotobs::Result<()> {
    let d = cyclotomic_laurent(6).mul(&cyclotomic_laurent(10));
    for n in 2..=6 {
        let v = monic_classification(&d, n, true)?;
        println!("n = {n}: pass = {}, factors = {:?} ({})", v.pass, v.factors, v.reason);
    }
    let sq = cyclotomic_laurent(6).mul(&d);
    println!("screen of Phi6^2 Phi10: {:?}", lspace_knot_screen(&sq, false)?);
    Ok(())
}
