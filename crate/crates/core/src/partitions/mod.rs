//! Partitions, skew and shifted diagrams, compositions and tableaux.

mod composition;
mod partition;
mod shifted;
mod skew;
mod tableaux;

pub use composition::Composition;
pub use partition::{
    partitions, partitions_between, partitions_containing, partitions_inside, strict_partitions, Partition,
};
pub use shifted::{component_rows, DoubleStrip, ShiftedSkewShape};
pub use skew::{components, has_2x2, Cell, SkewShape, StripClass};
pub use tableaux::{major_index, major_indices, standard_tableaux_rows};
