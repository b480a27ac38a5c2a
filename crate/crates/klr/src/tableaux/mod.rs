//! Multipartitions, content systems and standard tableaux.

pub mod content;
pub mod multipartition;
pub mod tableau;

pub use content::{ContentSystem, Variant};
pub use multipartition::{multipartitions, partitions, Multipartition, Node};
pub use tableau::{standard_tableaux, Order, StandardTableau};
