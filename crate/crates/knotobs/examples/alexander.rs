//! Alexander polynomials from a Seifert matrix, a braid and a typed string.

use knotobs::frontend::{braid_seifert_matrix, parse_braid};
use knotobs::polyalg::{cyclotomic_factorization, parse_laurent};
use knotobs::seifert::SeifertMatrix;

fn main() -> knotobs::Result<()> {
    let trefoil = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1)?;
    println!("trefoil:      {}", trefoil.alexander());

    let fig8 = braid_seifert_matrix(&parse_braid("s1 s2^-1 s1 s2^-1", None)?)?;
    println!("figure-eight: {}", fig8.alexander());

    let d = parse_laurent("t^-2 - t^-1 + 1 - t + t^2")?;
    println!("normalized:   {d}");
    println!("factors:      {:?}", cyclotomic_factorization(&d));
    Ok(())
}
