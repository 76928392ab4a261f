//! Machinery for studying the state complexity of non-returning regular
//! languages.
//!
//! A DFA is non-returning when no transition enters its initial state. This
//! crate builds the witness automata `D_n(Σ)` and their dialects, computes
//! transition semigroups, atoms and operation results from first principles,
//! and checks the predicted maxima against direct computation.
//!
//! Module map:
//!
//! * [`automata`] complete DFAs and ε-free NFAs, subset construction,
//!   minimization, equivalence and a line-oriented text format.
//! * [`transform`] transformations of `Q_n`, semigroup closure and the
//!   generator analysis for the full non-returning semigroup `N_n`.
//! * [`witness`] the witness DFA and its dialects.
//! * [`atoms`] the `D_S` construction for atomic intersections, atom counts,
//!   atom complexities and their bounds.
//! * [`ops`] reversal, star, product and boolean operations in restricted and
//!   unrestricted form, with closed-form bounds.
//! * [`harness`] the claim registry that turns all of the above into reports.


pub mod atoms;
pub mod automata;
mod error;
pub mod harness;
pub mod ops;


pub mod report;
pub mod transform;
pub mod witness;


pub use automata::{
    are_equivalent, complexity, determinize, minimize, quotient_complexities, reachable, Alphabet,
    Dfa, DfaBuilder, Language, Letter, Nfa,
};
pub use error::{Error, Result};
pub use report::{ClaimReport, Params, Relation, Status};
pub use transform::{closure, compose, PairType, Semigroup, Transformation};
pub use witness::{build_witness, DialectSpec, GammaVariant, Role, Witness, WitnessId};
pub use atoms::{atom_bound, atom_bound_printed, atom_complexity, atom_dfa, count_atoms, is_atom};
pub use ops::{BooleanOp, OpMode};
