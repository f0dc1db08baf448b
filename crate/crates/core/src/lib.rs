pub mod error;
pub mod exact;
pub mod partitions;
pub mod symfunc;
pub mod macdonald;
pub mod mn;
pub mod kostka;
pub mod pieri;
pub mod verify;

pub use error::{MathError, Result};
pub use exact::{Int, MPoly, RatFunc, Var};
