//! Finite ring extensions at desk scale: factor sets, obstructions to
//! extensions, the Shukla cochain complex in low degrees, and Ann-categories.

pub mod algebra;
pub mod ann;
pub mod cochain3;
pub mod error;
pub mod extension;
pub mod factor_sets;
pub mod guard;
pub mod io;
pub mod obstruction;
pub mod report;
pub mod shukla;
pub mod zlinalg;

pub use error::{Error, Result};
pub use guard::Guards;
pub use report::{Report, Violation};
