//! Exact computation in the dicyclic groups `Dc_n`: element arithmetic,
//! the automorphism group, and for each automorphism the fixed-point group
//! `H`, the generalized symmetric space `Q`, the split set `R` and the orbits
//! of twisted conjugation on `Q`.
//!
//! Every closed form has a definitional counterpart in [`oracle`].

pub mod automorphism;
pub mod dc2;
pub mod error;
pub mod group;
pub mod modular;
pub mod oracle;
pub mod space;
pub mod table;

pub use automorphism::{
    Automorphism, GroupMap, HolomorphElement, InnerOrderCase, IsomorphyWitness, RsAutomorphism,
    TableAutomorphism,
};
pub use error::{Error, Result};
pub use group::{DicyclicElement, GroupParams};
pub use space::{build_space_report, ElementSet, Partition, Provenance, SpaceReport};
pub use table::GroupTable;
