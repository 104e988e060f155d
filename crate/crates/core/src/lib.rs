//! Local degree conditions, structural invariants and cycle extension for
//! simple graphs.
//!
//! Graphs live on vertices `0..n` and are immutable once built. The
//! exponential routines (Hamiltonicity, cycle enumeration) take a
//! [`cycles::Budget`] and report exhaustion as an error instead of
//! truncating silently.

pub mod cycles;
pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod predicates;

pub use error::{BudgetExceeded, CycleError, GraphError, ParseError, PredicateError};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use families::{Family, FamilySpec};
pub use graph::{Distance, Graph, VertexSet};
