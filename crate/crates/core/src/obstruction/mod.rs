//! Extensions with arbitrary kernel ring: pre-extensions, the bicenter module
//! `K_A`, the obstruction family, and reconstruction of extensions.

pub mod compute;
pub mod pre_extension;

pub use compute::{
    are_cohomologous, build_extension, classify_extensions, compute_gamma, compute_obstruction, gamma_form,
    is_three_cocycle, vanish_and_build, GammaForm, Vanishing,
};
pub use pre_extension::{
    choose_fg, divergent_readings, fg_solutions, induced_pre_extension, ka_bimodule, validate_pre_extension,
    FgSolutions, KaModule, PreExtension,
};
