//! Finite abelian groups, rings and bimodules as tables, with the endomorphism
//! machinery (`End_ℤ(A)`, `L(A)`, `R(A)`, the bicenter, coset spaces).

pub mod bimodule;
pub mod catalog;
pub mod endo;
pub mod group;
pub mod presentation;
pub mod ring;

pub use bimodule::{enumerate_bimodules, BimoduleAction};
pub use endo::{
    additive_endos, bicenter, bicenter_elements, coset_space, left_mult, left_mults, right_mult, right_mults,
    AdditiveEndo, CosetSpace, EndoSubring,
};
pub use group::{FinAbGroup, Subgroup};
pub use presentation::Presentation;
pub use ring::FinRing;

use crate::report::Report;

pub fn validate_ring(r: &FinRing) -> Report {
    r.validate()
}

pub fn validate_bimodule(m: &BimoduleAction) -> Report {
    m.validate()
}
