//! World views of epistemic logic programs and modal theories.
//!
//! The crate evaluates propositional theories extended with a belief
//! operator `K` under several semantics:
//!
//! * G91 and AEL world views, computed as fixpoints of the subjective
//!   reduct ([`kd45`]);
//! * founded autoepistemic equilibrium world views ([`faeel`]), defined
//!   through a minimisation over here-and-there belief interpretations;
//! * the auxiliary S5-equilibrium and weak autoepistemic constructions
//!   ([`characterizations`]) used as independent cross-checks.
//!
//! [`foundedness`] decides whether a world view of a rule program admits an
//! unfounded set and extracts a witness when it does. [`harness`] ties all
//! of the above together for differential testing.
//!
//! Everything is exact brute force over bit-set interpretations, so the
//! signature size is capped (see [`Signature::enumeration_cap`]).

pub mod characterizations;
mod error;
pub mod faeel;
pub mod foundedness;
pub mod harness;
pub mod ht;
pub mod kd45;
pub mod minimize;
pub mod syntax;
mod views;

pub use error::{Error, Position, Result};
pub use faeel::{HtBeliefInterpretation, HtBeliefView};
pub use foundedness::{FoundednessVerdict, UnfoundedPair, UnfoundedSet};
pub use ht::{HtPair, Interpretation};
pub use kd45::{BeliefInterpretation, BeliefView};
pub use syntax::{
    classify_formula, parse_program, parse_theory, Atom, Formula, FormulaClass, Literal,
    Negation, ObjectiveLiteral, Program, Rule, Signature, SubjectiveLiteral, Theory,
};
