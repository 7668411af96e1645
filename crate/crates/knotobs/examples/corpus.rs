//! Batch run over the bundled sample corpus.

use knotobs::frontend::{read_corpus, run_corpus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample_corpus.csv");
    let file = std::fs::File::open(path)?;
    for r in run_corpus(&read_corpus(file)?) {
        let n3 = r.report.as_ref().map(|r| r.n3.to_string()).unwrap_or_default();
        println!(
            "{:10} n3 = {n3:10} {:?} {:?}",
            r.name.unwrap_or_default(),
            r.sqp_status,
            r.contradictions
        );
    }
    Ok(())
}
