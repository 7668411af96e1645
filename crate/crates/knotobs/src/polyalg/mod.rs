//! Exact polynomial arithmetic and certified root location on the unit circle.

pub mod algebraic;
pub mod chebyshev;
pub mod circle;
pub mod cycfield;
pub mod cyclotomic;
pub mod laurent;
pub mod parse;
pub mod poly;
pub mod qpoly;
pub mod resultant;
pub mod sturm;

pub use algebraic::{AlgebraicCosineBoundary, RealAlgebraic};
pub use chebyshev::chebyshev_reduce;
pub use circle::{isolate_circle_roots, ArcCount, CircleRoot, CircleRootProfile, RationalCirclePoint};
pub use cycfield::{eval_at_root_of_unity, CycElem, CyclotomicField};
pub use cyclotomic::{
    cyclotomic, cyclotomic_factorization, cyclotomic_laurent, is_cyclotomic_product, CyclotomicFactorization,
};
pub use laurent::{LaurentPoly, Palindromic};
pub use parse::parse_laurent;
pub use poly::ZPoly;
pub use qpoly::QPoly;
pub use resultant::{resultant, resultant_with_cyclotomic_tower, HomologyOrder};
