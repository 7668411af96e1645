// elimination loops index several rows at once
#![allow(clippy::needless_range_loop)]

pub mod covers;
pub mod error;
pub mod families;
pub mod frontend;
pub mod linalg;
pub mod obstruct;
pub mod polyalg;
pub mod seifert;

pub use error::{Error, Result};
