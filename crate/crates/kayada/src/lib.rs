//! Kāyadā variation toolkit.
//!
//! Takes a tabla kāyadā theme in textual bōl notation and reproduces the
//! improvisation workflow around it: the theme's rule set is extracted, a
//! first-order transition matrix bootstraps candidate variations, a memetic
//! loop (local search plus crossover, mutation, and truncation selection)
//! drives them toward the theme's rule-weighted score, and the results can
//! be evaluated with correlation, independence, and creativity-criteria
//! statistics.
//!
//! Modules follow the pipeline: [`notation`] for the token alphabet and
//! composition text, [`rules`] for rule extraction, [`markov`] for the
//! transition tables and sampling, [`fitness`] for scoring, [`memetic`] for
//! the evolutionary loop, and [`stats`] for the evaluation metrics.

pub mod fitness;
pub mod markov;
pub mod memetic;
pub mod notation;
pub mod rules;
pub mod stats;

pub use fitness::{
    complete_lenient, count_verb_repetitions, evaluate, fitness, theta, FitnessBreakdown,
};
pub use markov::{MarkovError, TransitionMatrix};
pub use memetic::{
    evolve, Candidate, EvolutionConfig, EvolutionOutcome, GenerationStats, MemeticError, Scorer,
};
pub use notation::{
    derive_khali, parse_theme, render_half, Bol, BolVocabulary, Composition, NotationError, Theme,
};
pub use rules::{extract_ruleset, replacement_phrases, RuleSet, RuleWeights, RulesError};
pub use stats::{
    chi_square_test, expected_frequencies, normalize_fitness, parse_pairs, parse_ratings, pearson,
    ritchie_criteria, ChiSquareResult, ContingencyTable, EvaluationConfig, RatedItem,
    RitchieReport, StatsError,
};
