//! Pretzel classifiers: SQP verdicts, signatures and double-cover L-spaces.

use knotobs::families::{
    pretzel_all_odd_signature, pretzel_knot_is_sqp, pretzel_link_is_sqp3, pretzel_sigma2_is_lspace, Orientation,
};

fn main() -> knotobs::Result<()> {
    for p in [&[3, 5, 7][..], &[3, 5, -4], &[3, 5, -3], &[4, 3, 5], &[-3, 5, 7, 9, 11]] {
        println!("P{p:?}: {}", pretzel_knot_is_sqp(p)?);
    }
    println!("sigma P(3,5,-7) = {}", pretzel_all_odd_signature(&[3, 5, -7])?);
    println!(
        "Sigma2 P(3,5,-7) is an L-space: {}",
        pretzel_sigma2_is_lspace(&[3, 5], &[7])?
    );
    println!(
        "Sigma2 P(3,5,-2) is an L-space: {}",
        pretzel_sigma2_is_lspace(&[3, 5], &[2])?
    );
    println!(
        "P(2,4,-6) orientation D: {}",
        pretzel_link_is_sqp3(2, 4, -6, Orientation::D)?
    );
    Ok(())
}
