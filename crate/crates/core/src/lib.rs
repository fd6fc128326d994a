//! Unsharp negation and implication on finite meet-semilattices with `0`.
//!
//! For a finite meet-semilattice `(S, ∧, 0)` the negation of `a` is the set
//! of maximal `x` with `a ∧ x = 0`, and `a → b` is the set of maximal `x`
//! with `a ∧ x ≤ b`. Both are antichains rather than single elements. This
//! crate computes them, checks the laws they satisfy, and provides the
//! filter / deductive system / congruence machinery around them.
//!
//! ```
//! use unsharp_core::{generators::Fixture, ops};
//!
//! let s = Fixture::Fig4.build();
//! let d = s.index_of("d").unwrap();
//! let e = s.index_of("e").unwrap();
//! assert_eq!(s.render(&ops::imp(&s, d, e)), "{e,f}");
//! ```

pub mod deduction;
pub mod error;
pub mod format;
pub mod generators;
pub mod laws;
pub mod ops;
pub mod order;
pub mod search;
pub mod term;

pub use deduction::{BinaryRelation, CarrierSubset, SubsetRole};
pub use error::{Error, Result};
pub use generators::{Fixture, StructureSpec};
pub use laws::{Counterexample, LawId, LawReport, Subject, Verdict};
pub use ops::{OperatorKind, OperatorTable};
pub use order::{ElemSet, MeetSemilattice, Poset};
pub use term::{Equation, Relation, Term};
