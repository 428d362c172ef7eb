//! Exact computation in the free two-generator orthomodular lattice and
//! equation checking in finite ortholattices and rational subspace lattices.
//!
//! * [`term`]: the term language, printing and expansion of derived connectives.
//! * [`freeoml`]: `MO2 × 2⁴`, Beran numbers, canonical terms, closures.
//! * [`model`]: finite ortholattice models and their checks.
//! * [`hilbert`]: subspaces of ℚⁿ as an independent orthomodular oracle.
//! * [`accept`]: the end-to-end acceptance suite.

pub mod accept;
pub mod check;
pub mod equations;
pub mod freeoml;
pub mod hilbert;
pub mod lattice;
pub mod model;
pub mod report;
pub mod term;

pub use check::{Assignment, CheckResult, Mode, Status};
pub use freeoml::{FreeElem, FreeOml};
pub use hilbert::Subspace;
pub use lattice::Ortholattice;
pub use model::{ElemId, Model, ModelError};
pub use term::{ConnIndex, Equation, ParseError, Relation, SymDiffKind, Term};
