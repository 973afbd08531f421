//! Natural deduction for first-order logic.
//!
//! Formulas use de Bruijn indices ([`syntax`]); the proof system is the
//! `OK p a` judgment with fourteen rules ([`kernel`]) whose side conditions
//! are the primitive recursive functions in [`subst`]. Proofs are built
//! backwards in undoable [`prover`] sessions, stored and displayed through
//! [`formats`], and tested for soundness against finite interpretations in
//! [`semantics`].

pub mod corpus;
pub mod formats;
pub mod fuzz;
pub mod kernel;
pub mod prover;
pub mod semantics;
pub mod subst;
pub mod syntax;

pub use kernel::{check, expand, CheckReport, Goal, KernelError, ProofNode, Rule, RuleArgs};
pub use prover::{OpenProofNode, ProverError, Session};
pub use syntax::{Formula, Identifier, Term};
