//! Rule-weighted scoring of compositions.
//!
//! A composition earns the seed weight for opening with a seed bōl and the
//! full-verb (or, failing that, half-verb) weight for its cadence, and is
//! penalized for every stray verb occurrence away from the closing slot.
//! The sum is its theta value; fitness is the absolute distance between a
//! candidate's theta and the theme's, minimized at zero.

use crate::notation::{Bol, Composition};
use crate::rules::RuleSet;

/// The per-rule contributions behind one theta value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitnessBreakdown {
    /// Seed-start weight earned (0 if the opening bōl is not a seed).
    pub seed_weight: i32,
    /// Full-verb cadence weight earned.
    pub full_verb_weight: i32,
    /// Half-verb cadence weight earned; always 0 when the full verb scored.
    pub half_verb_weight: i32,
    /// Stray verb occurrences outside the closing slot.
    pub repetition_count: u32,
    pub theta: i32,
    pub fitness: u32,
}

/// Count verb occurrences away from the designated closing slot.
///
/// The two halves are viewed as parallel rows over the same columns, the
/// way compositions are written. Columns are scanned left to right over
/// `[0, len - 4)`; at each free column a full verb (either half's) is
/// matched before a half verb, in either row, and a match consumes its
/// column span in both rows. The closing four columns are the cadence slot
/// and are never scanned, and occurrences must fit entirely before them.
/// Consuming across both rows counts a mirrored khālī occurrence and its
/// bharī source as one structural fact.
pub fn count_verb_repetitions(comp: &Composition, rules: &RuleSet) -> u32 {
    let len = comp.bhari.len();
    if len < 4 {
        return 0;
    }
    let limit = len - 4;
    let rows: [Option<&[Bol]>; 2] = [Some(&comp.bhari), comp.khali.as_deref()];
    let matches_at = |p: usize, k: usize| -> bool {
        rows.iter().flatten().any(|row| {
            let window = &row[p..p + k];
            if k == 4 {
                window == rules.full_verb_bhari || window == rules.full_verb_khali
            } else {
                window == rules.half_verb_bhari || window == rules.half_verb_khali
            }
        })
    };
    let mut count = 0;
    let mut p = 0;
    while p < limit {
        if p + 4 <= limit && matches_at(p, 4) {
            count += 1;
            p += 4;
        } else if p + 2 <= limit && matches_at(p, 2) {
            count += 1;
            p += 2;
        } else {
            p += 1;
        }
    }
    count
}

/// Theta: the sum of rule weights the composition satisfies.
pub fn theta(comp: &Composition, rules: &RuleSet) -> i32 {
    evaluate(comp, rules, 0).theta
}

/// Fitness: the distance from the theme's base theta.
pub fn fitness(theta_i: i32, theta_base: i32) -> u32 {
    (theta_base - theta_i).unsigned_abs()
}

/// Score a composition against the rule set and the theme's base theta.
pub fn evaluate(comp: &Composition, rules: &RuleSet, theta_base: i32) -> FitnessBreakdown {
    let w = &rules.weights;
    let seed_weight = match comp.bhari.first() {
        Some(b) if rules.seeds.contains(b) => w.seed_start,
        _ => 0,
    };
    let full_verb_weight = if rules.ends_with_full_verb(&comp.bhari) {
        w.full_verb_ending
    } else {
        0
    };
    let half_verb_weight = if full_verb_weight == 0 && rules.ends_with_half_verb(&comp.bhari) {
        w.half_verb_ending
    } else {
        0
    };
    let repetition_count = count_verb_repetitions(comp, rules);
    let theta =
        seed_weight + full_verb_weight + half_verb_weight + repetition_count as i32 * w.per_repetition;
    FitnessBreakdown {
        seed_weight,
        full_verb_weight,
        half_verb_weight,
        repetition_count,
        theta,
        fitness: fitness(theta, theta_base),
    }
}

/// Complete a chromosome into a scorable composition.
///
/// Like the strict khālī derivation, but total: the first half is
/// complement-mapped and the second half kept, with the trailing four bōls
/// swapped only when they actually form the bharī full verb. Evolving
/// chromosomes routinely lack the cadence, and their khālī must still be
/// derivable for scoring.
pub fn complete_lenient(bhari: &[Bol], rules: &RuleSet, cyclic: bool) -> Composition {
    let len = bhari.len();
    let half = len / 2;
    let mut khali: Vec<Bol> = bhari[..half].iter().map(|b| b.partner()).collect();
    khali.extend_from_slice(&bhari[half..]);
    if len >= 4 && rules.ends_with_full_verb(bhari) {
        for b in &mut khali[len - 4..] {
            *b = b.partner();
        }
    }
    Composition::new(bhari.to_vec(), cyclic).with_khali(khali)
}
