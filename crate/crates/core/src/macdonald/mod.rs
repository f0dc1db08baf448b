//! Macdonald, Hall–Littlewood and Schur Q bases with their closed-form evaluations.

mod basis;
mod closed;
mod table;

pub use basis::*;
pub use closed::*;
pub use table::{ExpansionTable, TableBasis};
