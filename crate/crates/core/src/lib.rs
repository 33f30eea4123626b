//! Finite semigroups and their linear representations: Green's relations,
//! congruences, the Rhodes radical over a field, variety membership,
//! triangularization, and the automata built on top of them.

pub mod arith;
pub mod automata;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod field;
pub mod ggm;
pub mod greens;
pub mod group;
pub mod io;
pub mod kernel;
pub mod linalg;
pub mod marked;
pub mod radical;
pub mod rep;
pub mod semigroup;
pub mod variety;
pub mod witness;

pub use automata::Dfa;
pub use congruence::Congruence;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use greens::GreensStructure;
pub use group::SubgroupTable;
pub use marked::MarkedProductSpec;
pub use semigroup::FiniteSemigroup;
pub use variety::VarietyId;
pub use witness::{Verdict, Witness};
