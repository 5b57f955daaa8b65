//! Rule extraction: the structural facts of a theme that constrain every
//! variation and parameterize the fitness function.
//!
//! From a theme we take the closing verbs (full and half, for both halves),
//! the seeds a variation may start with, the highlighted phrase, and the
//! pools of theme phrases used as replacement material during local search.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::notation::{khali_by_rule, Bol, Composition, NotationError};

/// Errors from rule extraction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RulesError {
    #[error("theme bharī has {0} bōls; at least 8 are required")]
    ThemeTooShort(usize),
    #[error("no valid replacement phrases of length {0}; length must be 2 or 4 and shorter than the theme bharī")]
    BadPhraseLength(usize),
    #[error("declared seed {0} does not appear in the theme")]
    SeedOutsideTheme(Bol),
    #[error(transparent)]
    Notation(#[from] NotationError),
}

/// Weights attached to the composition rules. The scoring convention:
/// `seed_start` and `full_verb_ending` reward the strongest structural
/// facts, `half_verb_ending` is the consolation for a partial cadence, and
/// `per_repetition` penalizes every stray verb occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleWeights {
    pub seed_start: i32,
    pub full_verb_ending: i32,
    pub half_verb_ending: i32,
    pub per_repetition: i32,
}

impl Default for RuleWeights {
    fn default() -> Self {
        Self {
            seed_start: 10,
            full_verb_ending: 10,
            half_verb_ending: 5,
            per_repetition: -2,
        }
    }
}

impl RuleWeights {
    /// The ordering the scoring scheme relies on: a full verb outranks a
    /// half verb, both are rewards, and repetitions are penalized.
    pub fn is_consistent(&self) -> bool {
        self.full_verb_ending > self.half_verb_ending
            && self.half_verb_ending > 0
            && self.per_repetition < 0
    }
}

/// Everything extracted from one theme.
///
/// Invariants: half verbs are the 2-bōl suffixes of the corresponding full
/// verbs; seeds appear in the theme; no replacement phrase equals a verb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    pub seeds: BTreeSet<Bol>,
    pub full_verb_bhari: [Bol; 4],
    pub full_verb_khali: [Bol; 4],
    pub half_verb_bhari: [Bol; 2],
    pub half_verb_khali: [Bol; 2],
    pub highlighted: Vec<Bol>,
    /// Distinct theme 4-grams usable as replacement material, in first
    /// occurrence order (stable order makes uniform draws reproducible).
    pub replacement_pool_4: Vec<Vec<Bol>>,
    /// Distinct theme 2-grams usable as replacement material.
    pub replacement_pool_2: Vec<Vec<Bol>>,
    pub weights: RuleWeights,
}

impl RuleSet {
    /// True when `seq` ends with the bharī full verb.
    pub fn ends_with_full_verb(&self, seq: &[Bol]) -> bool {
        seq.ends_with(&self.full_verb_bhari)
    }

    /// True when `seq` ends with the bharī half verb.
    pub fn ends_with_half_verb(&self, seq: &[Bol]) -> bool {
        seq.ends_with(&self.half_verb_bhari)
    }
}

/// Extract the rule set of a theme.
///
/// Full verbs are the last 4 bōls of each half and half verbs their 2-bōl
/// suffixes. The highlighted phrase defaults to the most frequent 3-gram of
/// the bharī (ties broken by earliest occurrence) and the seed set to the
/// theme's opening bōl; both can be overridden by declared values.
pub fn extract_ruleset(
    theme: &Composition,
    declared_seeds: Option<&BTreeSet<Bol>>,
    declared_highlighted: Option<&[Bol]>,
) -> Result<RuleSet, RulesError> {
    let bhari = &theme.bhari;
    if bhari.len() < 8 {
        return Err(RulesError::ThemeTooShort(bhari.len()));
    }
    if !bhari.len().is_multiple_of(2) {
        return Err(RulesError::Notation(NotationError::OddLength(bhari.len())));
    }

    let khali = match &theme.khali {
        Some(k) => k.clone(),
        None => khali_by_rule(bhari),
    };

    let full_verb_bhari: [Bol; 4] = bhari[bhari.len() - 4..].try_into().unwrap();
    let full_verb_khali: [Bol; 4] = khali[khali.len() - 4..].try_into().unwrap();
    let half_verb_bhari: [Bol; 2] = [full_verb_bhari[2], full_verb_bhari[3]];
    let half_verb_khali: [Bol; 2] = [full_verb_khali[2], full_verb_khali[3]];

    let vocabulary: BTreeSet<Bol> = bhari.iter().chain(khali.iter()).copied().collect();
    let seeds = match declared_seeds {
        Some(declared) => {
            for b in declared {
                if !vocabulary.contains(b) {
                    return Err(RulesError::SeedOutsideTheme(*b));
                }
            }
            declared.clone()
        }
        None => [bhari[0]].into_iter().collect(),
    };

    let highlighted = match declared_highlighted {
        Some(h) => h.to_vec(),
        None => most_frequent_trigram(bhari),
    };

    let full_verbs = [full_verb_bhari.to_vec(), full_verb_khali.to_vec()];
    let half_verbs = [half_verb_bhari.to_vec(), half_verb_khali.to_vec()];
    let replacement_pool_4 = distinct_ngrams(bhari, 4, &full_verbs);
    let replacement_pool_2 = distinct_ngrams(bhari, 2, &half_verbs);

    Ok(RuleSet {
        seeds,
        full_verb_bhari,
        full_verb_khali,
        half_verb_bhari,
        half_verb_khali,
        highlighted,
        replacement_pool_4,
        replacement_pool_2,
        weights: RuleWeights::default(),
    })
}

/// All distinct k-grams of the theme bharī that neither overlap the trailing
/// full verb nor are themselves a verb, in first occurrence order.
pub fn replacement_phrases(theme: &Composition, k: usize) -> Result<Vec<Vec<Bol>>, RulesError> {
    if !(k == 2 || k == 4) || theme.bhari.len() <= k {
        return Err(RulesError::BadPhraseLength(k));
    }
    let bhari = &theme.bhari;
    let khali = match &theme.khali {
        Some(kh) => kh.clone(),
        None => khali_by_rule(bhari),
    };
    let excluded: Vec<Vec<Bol>> = if k == 4 {
        vec![
            bhari[bhari.len() - 4..].to_vec(),
            khali[khali.len() - 4..].to_vec(),
        ]
    } else {
        vec![
            bhari[bhari.len() - 2..].to_vec(),
            khali[khali.len() - 2..].to_vec(),
        ]
    };
    Ok(distinct_ngrams(bhari, k, &excluded))
}

fn distinct_ngrams(bhari: &[Bol], k: usize, excluded: &[Vec<Bol>]) -> Vec<Vec<Bol>> {
    let mut out: Vec<Vec<Bol>> = Vec::new();
    if bhari.len() < 4 + k {
        return out;
    }
    // Windows must sit entirely before the trailing verb slot.
    let last_start = bhari.len() - 4 - k;
    for i in 0..=last_start {
        let gram = bhari[i..i + k].to_vec();
        if excluded.contains(&gram) || out.contains(&gram) {
            continue;
        }
        out.push(gram);
    }
    out
}

fn most_frequent_trigram(bhari: &[Bol]) -> Vec<Bol> {
    let mut first_seen: HashMap<&[Bol], usize> = HashMap::new();
    let mut counts: HashMap<&[Bol], usize> = HashMap::new();
    for (i, w) in bhari.windows(3).enumerate() {
        *counts.entry(w).or_insert(0) += 1;
        first_seen.entry(w).or_insert(i);
    }
    let mut best: Option<(&[Bol], usize, usize)> = None;
    for (w, &count) in &counts {
        let seen = first_seen[w];
        let better = match best {
            None => true,
            Some((_, best_count, best_seen)) => {
                count > best_count || (count == best_count && seen < best_seen)
            }
        };
        if better {
            best = Some((w, count, seen));
        }
    }
    best.map(|(w, _, _)| w.to_vec()).unwrap_or_default()
}
