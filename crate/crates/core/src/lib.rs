//! Four-port small-step semantics for pure Prolog.
//!
//! A query runs as a sequence of events `port goal [A-stack][B-stack]`
//! connected by 21 transition rules. The crate provides the term language,
//! a reader and printer, the canonicalizer that puts programs into the
//! one-clause-per-predicate form the rules expect, the engine with forward
//! and backward stepping, trace renderers, and an SLD reference solver with
//! a random program generator for differential testing.

pub mod canon;
pub mod check;
pub mod engine;
pub mod oracle;
pub mod reader;
pub mod stack;
pub mod term;
pub mod trace;

pub use canon::{canonicalize, dump_canonical, CanonicalProgram};
pub use engine::{enumerate_answers, run, Event, Journal, Options, Outcome, Port, Rule};
pub use reader::{parse_program, parse_query, ParseError};
pub use term::{Goal, Substitution, Term, Var};
