//! Seifert forms and the signature and nullity functions on the unit circle.

pub mod matrix;
pub mod profile;
pub mod signature;

pub use matrix::SeifertMatrix;
pub use profile::{signature_profile, signature_profile_with, ArcValue, Jump, SignatureProfile};
pub use signature::{
    inertia_at_rational_point, inertia_at_root_of_unity, is_definite, murasugi_signature, nullity_at_root_of_unity,
    reduce_common_kernel, reduced_alexander, signature_at_root_of_unity,
};
