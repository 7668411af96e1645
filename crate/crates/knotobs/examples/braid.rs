//! Braid words and band words: parsing, closure and Bennequin surfaces.

use knotobs::frontend::{bennequin_surface_data, braid_seifert_matrix, parse_braid};
use knotobs::seifert::murasugi_signature;

fn main() -> knotobs::Result<()> {
    for text in ["s1^3", "[1, -2, 1, -2]", "b(1,3) s2^2 b(1,3) s1", "(s1"] {
        let w = match parse_braid(text, None) {
            Ok(w) => w,
            Err(e) => {
                println!("{text}: {e}");
                continue;
            }
        };
        let s = braid_seifert_matrix(&w)?;
        println!(
            "{text}: {} strands, {} components, sigma {}, Delta {}",
            w.strands,
            w.closure_components(),
            murasugi_signature(&s),
            s.alexander()
        );
        // the band surface is defined for positive band words
        if let Ok(b) = bennequin_surface_data(&w) {
            println!("  band surface: {} bands, genus {}", b.bands, b.genus);
        }
    }
    Ok(())
}
