//! The cover orders n3 and n4 past which L-space covers are ruled out.

use knotobs::families::torus_alexander;
use knotobs::obstruct::{n3, n4};
use knotobs::polyalg::parse_laurent;

fn main() -> knotobs::Result<()> {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
        let d = torus_alexander(p, q)?;
        let g4 = (p - 1) * (q - 1) / 2;
        println!("T({p},{q}): n3 = {}, n4 = {}", n3(&d)?, n4(&d, g4, 1)?);
    }
    let fig8 = parse_laurent("t^2 - 3t + 1")?;
    println!("figure-eight: n3 = {}", n3(&fig8)?);
    Ok(())
}
