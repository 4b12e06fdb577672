pub mod boxball;
pub mod cli;
pub mod conserved;
pub mod crystal;
pub mod error;
pub mod evolution;
pub mod format;
pub mod piecewise_linear;
pub mod profile;
pub mod reference;
pub mod rmatrix;
pub mod solitons;
pub mod tau;
pub mod verify;

pub use crystal::{Crystal, Element, TensorWord};
pub use error::{Error, Result};
pub use evolution::{AutomatonState, EvolutionRecord, Kappa};
