//! Property checks, fuzzing, differential testing and the example corpus.

pub mod corpus;
pub mod differential;
pub mod fuzz;
pub mod properties;

pub use corpus::{bundled_corpus_dir, load_corpus, run_corpus, CorpusEntry, CorpusReport};
pub use differential::{differential_report, DifferentialReport, TheoremCheck};
pub use fuzz::{random_formula, random_ht_belief_interpretation, random_program, Profile};
pub use properties::{
    check_constraint_monotonicity, check_supra_asp, check_supra_s5, world_views, world_views_with,
    PropertyVerdict, Semantics,
};
