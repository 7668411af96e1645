//! Braid ingestion, batch corpus runs and the command line.

pub mod braid;
pub mod cli;
pub mod corpus;
pub mod input;

pub use braid::{
    bennequin_surface_data, braid_seifert_matrix, parse_braid, torus_braid, BennequinData, BraidWord, Letter,
};
pub use corpus::{read_corpus, run_corpus, CorpusEntry, CorpusResult};
pub use input::{parse_input, InputKind, KnotInput};
