use std::collections::BTreeSet;

use knotobs::families::torus_alexander;
use knotobs::frontend::{braid_seifert_matrix, parse_braid, torus_braid};
use knotobs::obstruct::sqp_lspace_obstruction;
use knotobs::polyalg::LaurentPoly;

fn passes(word: &str) -> bool {
    let s = braid_seifert_matrix(&parse_braid(word, None).unwrap()).unwrap();
    !sqp_lspace_obstruction(&s, 2).unwrap().rules_out()
}

#[test]
fn small_table() {
    for k in (3..=11).step_by(2) {
        assert!(passes(&format!("s1^{k}")), "T(2,{k})");
    }
    for (p, q) in [(3, 4), (3, 5)] {
        let s = braid_seifert_matrix(&torus_braid(p, q)).unwrap();
        assert!(!sqp_lspace_obstruction(&s, 2).unwrap().rules_out(), "T({p},{q})");
    }
    assert!(!passes("s1 s2^-1 s1 s2^-1"), "figure-eight");
    // the test only sees |sigma|, and mirrors share their double cover
    assert!(passes("s1^-3"), "left-handed trefoil");
    // T(3,7) has a non-L-space double cover
    assert!(!passes(&"s1 s2 ".repeat(7)));
}

/// Among positive 3-braid knots up to length 10 the only survivors at
/// `n = 2` are `T(2,k)`, sums of two of them, `T(3,4)` and `T(3,5)`.
#[test]
fn positive_three_braids() {
    let mut two = vec![LaurentPoly::from_i64(0, &[1])];
    two.extend((1..=5).map(|i| torus_alexander(2, 2 * i + 1).unwrap()));
    let mut allowed = BTreeSet::new();
    for a in &two {
        for b in &two {
            allowed.insert(a.mul(b).to_string());
        }
    }
    let t34 = torus_alexander(3, 4).unwrap().to_string();
    let t35 = torus_alexander(3, 5).unwrap().to_string();
    allowed.insert(t34.clone());
    allowed.insert(t35.clone());
    let mut found = BTreeSet::new();
    for len in 2..=10usize {
        for mask in 0..(1u32 << len) {
            let word: Vec<&str> = (0..len).map(|i| if mask >> i & 1 == 0 { "s1" } else { "s2" }).collect();
            let w = parse_braid(&word.join(" "), Some(3)).unwrap();
            if w.closure_components() != 1 {
                continue;
            }
            let s = braid_seifert_matrix(&w).unwrap();
            if !sqp_lspace_obstruction(&s, 2).unwrap().rules_out() {
                let d = s.alexander().to_string();
                assert!(allowed.contains(&d), "{} survives with Delta = {d}", word.join(" "));
                found.insert(d);
            }
        }
    }
    assert!(found.contains(&t34) && found.contains(&t35));
}
