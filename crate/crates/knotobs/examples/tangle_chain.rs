//! Determinants of the chain links L(k1, k2, k3) and their additivity.

use knotobs::families::{additive_triple_check, chain_link_det, TangleChain};

fn main() -> knotobs::Result<()> {
    for s in ["1,1,1", "1,1,inf", "2,3,inf", "1,inf,inf"] {
        let c: TangleChain = s.parse()?;
        println!("{c}: det = {}", chain_link_det(&c));
    }
    let (l, l0, linf) = ("2,3,5".parse()?, "2,3,4".parse()?, "2,3,inf".parse()?);
    println!(
        "det L(2,3,5) = det L(2,3,4) + det L(2,3,inf): {}",
        additive_triple_check(&l, &l0, &linf)
    );
    Ok(())
}
