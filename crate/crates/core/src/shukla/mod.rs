//! The explicit free resolution `U₀ … U₄` of a finite ring, its products, and
//! degree-3 cohomology of the tuple complex at desk scale.

pub mod h3;
pub mod products;
pub mod resolution;

pub use h3::{coboundary_preimage, cocycle3_check, h3_by_enumeration, h3_small, H3Result};
pub use products::{
    chain_times_u0, comparison_report, printed_candidate, product_general, product_u0, product_u1_u1,
    relation_candidate, Agreement, ComparisonRow, Products,
};
pub use resolution::{
    boundary, bracket, build_resolution, check_exactness, Chain, GeneratorId, Junction, Level, ResolutionData,
};
