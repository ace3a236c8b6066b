//! Enhanced power graphs of finite groups and their rainbow connection number.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`group`]: finite groups given by Cayley tables, plus the standard
//!   families (cyclic, dihedral, dicyclic, symmetric, elementary abelian,
//!   direct products).
//! * [`cyclic`]: maximal cyclic subgroups, their intersections, the
//!   independence cyclic set and maximal involutions.
//! * [`graph`]: enhanced power graph, power graph and basic metrics.
//! * [`awning`]: awning certificates, their verification and search.
//! * [`rainbow`]: rainbow connectivity checks, constructive colorings,
//!   lower bounds and an exact budgeted search for `rc`.
//! * [`classifier`]: the rule table predicting `rc` from structural
//!   invariants, and cross-validation against the exact search.
//!
//! IO, file formats, the CLI and parallel catalog sweeps live in the
//! companion `epg-rainbow` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod awning;
pub mod classifier;
pub mod cyclic;
pub mod graph;
pub mod group;
pub mod rainbow;
pub mod set;

pub use awning::{AwningCertificate, AwningSearch, AwningVerdict, Side};
pub use classifier::{
    classify, cross_validate, Agreement, Prediction, RuleId, ValidationConfig, ValidationRecord,
    Verdict,
};
pub use cyclic::{CyclicDecomposition, IcsReport};
pub use graph::{GraphMetrics, SimpleGraph};
pub use group::{FiniteGroup, GroupError, GroupSpec};
pub use rainbow::{EdgeColoring, RcKind, RcResult, SearchConfig, Strategy};
pub use set::ElementSet;
