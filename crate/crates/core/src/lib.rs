pub mod error;
pub mod lti;
pub mod oscillator;
pub mod signal;

pub use error::{Error, Result};
pub use lti::{final_excitation, LtiSystem, Trajectory};
pub use oscillator::{RobustnessSpec, Target};
pub use signal::{moment, MomentValue, PolyExpSignal};
