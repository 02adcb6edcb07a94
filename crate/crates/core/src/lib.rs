//! Exact computer algebra for the identity `p³ + q³ = (x³ + y³) r³` in binary
//! forms over Q(ω).

pub mod catalog;
pub mod cli;
pub mod count;
pub mod curve;
pub mod eisenstein;
pub mod error;
pub mod forms;
pub mod fraction;
mod modular;
pub mod orbits;

pub use catalog::CanonCoord;
pub use curve::{Defect, Solution};
pub use eisenstein::{EisensteinInt, QOmega};
pub use error::{Error, Result};
pub use forms::BinaryForm;
pub use fraction::RationalFunction;
pub use orbits::{OrbitContext, RationalPoint};
