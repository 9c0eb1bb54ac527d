//! Singular extensions: factor sets, the coboundary action, `H²` by enumeration,
//! and the round trip between factor sets and extensions.

pub mod cochain;
pub mod h2;
pub mod singular;

pub use cochain::{
    are_equivalent, are_equivalent_with, check_factor_set, check_factor_set_with, coboundary1, shift, Normalization,
    OneCochain, TwoCochain,
};
pub use h2::{h2_classes, H2Classes};
pub use singular::{build_singular_extension, extract_factor_set, SingularExtension};
