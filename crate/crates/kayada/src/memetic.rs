//! Memetic refinement: a population of Markov-bootstrapped chromosomes is
//! improved by per-candidate local search, single-point crossover over a
//! mating pool, complement-segment mutation, and truncation to the best.
//!
//! The chromosome is the bharī half; the khālī is re-derived for scoring
//! after every edit. One seeded rng drives the whole run, so a run is fully
//! determined by its configuration.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use thiserror::Error;

use crate::fitness::{complete_lenient, evaluate, FitnessBreakdown};
use crate::markov::{MarkovError, TransitionMatrix};
use crate::notation::{derive_khali, Bol, NotationError, Theme};
use crate::rules::{extract_ruleset, RuleSet, RulesError};

#[derive(Debug, Error, PartialEq)]
pub enum MemeticError {
    #[error("population size must be at least 2, got {0}")]
    PopulationTooSmall(usize),
    #[error("chromosome length must be even and at least 8, got {0}")]
    BadLength(usize),
    #[error("generation limit must be at least 1")]
    NoGenerations,
    #[error("{name} must lie in [0, 1], got {value}")]
    BadRate { name: &'static str, value: f64 },
    #[error("crossover point {point} outside [1, {max}]")]
    BadCrossoverPoint { point: usize, max: usize },
    #[error("parents have different lengths ({0} and {1})")]
    ParentLengthMismatch(usize, usize),
    #[error(transparent)]
    Rules(#[from] RulesError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
    #[error(transparent)]
    Notation(#[from] NotationError),
}

/// One member of the population. The cached breakdown is recomputed on
/// every edit, so it always matches the chromosome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub bhari: Vec<Bol>,
    pub breakdown: FitnessBreakdown,
    pub generation_born: u32,
    /// Monotone creation index; the final tie-breaker wherever candidates
    /// are ranked, which keeps runs reproducible.
    pub id: u64,
}

impl Candidate {
    fn rank_key(&self) -> (u32, u32, u64) {
        (self.breakdown.fitness, self.generation_born, self.id)
    }
}

/// Run parameters. `length` defaults to the theme's bharī length.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionConfig {
    pub population_size: usize,
    pub length: Option<usize>,
    pub max_generations: u32,
    pub mutation_rate: f64,
    pub crossover_rate: f64,
    /// Stop once this share of the population reaches fitness zero.
    pub goal_proportion: f64,
    pub rng_seed: u64,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        Self {
            population_size: 30,
            length: None,
            max_generations: 20,
            mutation_rate: 0.2,
            crossover_rate: 0.9,
            goal_proportion: 0.65,
            rng_seed: 0,
        }
    }
}

impl EvolutionConfig {
    fn validate(&self, length: usize) -> Result<(), MemeticError> {
        if self.population_size < 2 {
            return Err(MemeticError::PopulationTooSmall(self.population_size));
        }
        if length < 8 || !length.is_multiple_of(2) {
            return Err(MemeticError::BadLength(length));
        }
        if self.max_generations == 0 {
            return Err(MemeticError::NoGenerations);
        }
        for (name, value) in [
            ("mutation_rate", self.mutation_rate),
            ("crossover_rate", self.crossover_rate),
            ("goal_proportion", self.goal_proportion),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(MemeticError::BadRate { name, value });
            }
        }
        Ok(())
    }
}

/// Per-generation population summary.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationStats {
    pub generation: u32,
    pub zero_fitness_proportion: f64,
    pub best_fitness: u32,
    pub mean_fitness: f64,
}

/// The result of one evolution run: the final population ranked best first,
/// the per-generation stats series, and the theme's base theta.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionOutcome {
    pub population: Vec<Candidate>,
    pub stats: Vec<GenerationStats>,
    pub theta_base: i32,
}

/// Scoring context shared by every operator in one run.
#[derive(Debug, Clone, Copy)]
pub struct Scorer<'a> {
    pub rules: &'a RuleSet,
    pub theta_base: i32,
    pub cyclic: bool,
}

impl Scorer<'_> {
    pub fn score(&self, bhari: Vec<Bol>, generation_born: u32, id: u64) -> Candidate {
        let comp = complete_lenient(&bhari, self.rules, self.cyclic);
        let breakdown = evaluate(&comp, self.rules, self.theta_base);
        Candidate {
            bhari,
            breakdown,
            generation_born,
            id,
        }
    }
}

/// Build the initial population: the theme chromosome itself (the inspiring
/// material the search grows from, when the configured length admits it)
/// plus chain-generated sequences, each started from a uniformly chosen
/// seed bōl.
pub fn init_population<R: Rng + ?Sized>(
    matrix: &TransitionMatrix,
    scorer: &Scorer,
    theme_bhari: &[Bol],
    population_size: usize,
    length: usize,
    rng: &mut R,
) -> Result<Vec<Candidate>, MemeticError> {
    if population_size < 2 {
        return Err(MemeticError::PopulationTooSmall(population_size));
    }
    let seeds: Vec<Bol> = scorer.rules.seeds.iter().copied().collect();
    let mut population = Vec::with_capacity(population_size);
    if theme_bhari.len() == length {
        population.push(scorer.score(theme_bhari.to_vec(), 0, 0));
    }
    while population.len() < population_size {
        let seed = seeds[rng.gen_range(0..seeds.len())];
        let bhari = matrix.generate(seed, length, rng)?;
        population.push(scorer.score(bhari, 0, population.len() as u64));
    }
    Ok(population)
}

/// Single-point crossover. Children keep their parent's first `point` bōls
/// and swap everything after, so offspring always inherit one parent's
/// opening and the other's cadence.
pub fn crossover(
    parent_a: &[Bol],
    parent_b: &[Bol],
    point: usize,
) -> Result<(Vec<Bol>, Vec<Bol>), MemeticError> {
    if parent_a.len() != parent_b.len() {
        return Err(MemeticError::ParentLengthMismatch(
            parent_a.len(),
            parent_b.len(),
        ));
    }
    let len = parent_a.len();
    if point == 0 || point >= len {
        return Err(MemeticError::BadCrossoverPoint {
            point,
            max: len.saturating_sub(1),
        });
    }
    let mut child_a = parent_a[..point].to_vec();
    child_a.extend_from_slice(&parent_b[point..]);
    let mut child_b = parent_b[..point].to_vec();
    child_b.extend_from_slice(&parent_a[point..]);
    Ok((child_a, child_b))
}

/// Complement every bōl in the inclusive segment between the two positions;
/// bōls without complements are unchanged. An involution for fixed points.
pub fn mutate_segment(bhari: &[Bol], a: usize, b: usize) -> Vec<Bol> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let mut out = bhari.to_vec();
    for bol in &mut out[lo..=hi] {
        *bol = bol.partner();
    }
    out
}

/// Multipoint mutation: two distinct positions chosen uniformly, the
/// segment between them complement-mapped.
pub fn mutate_bhari<R: Rng + ?Sized>(bhari: &[Bol], rng: &mut R) -> Vec<Bol> {
    let n = bhari.len();
    if n < 2 {
        return bhari.to_vec();
    }
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n);
    while j == i {
        j = rng.gen_range(0..n);
    }
    mutate_segment(bhari, i, j)
}

enum SiteKind {
    FullVerb,
    HalfVerb,
    Run,
}

fn next_site(bhari: &[Bol], from: usize, kind: &SiteKind, rules: &RuleSet) -> Option<(usize, usize)> {
    let len = bhari.len();
    match kind {
        // Verb sites must fit entirely before the closing slot, mirroring
        // what the repetition penalty counts.
        SiteKind::FullVerb => {
            let span = 4;
            if len < 4 + span {
                return None;
            }
            (from..=len - 4 - span).find_map(|p| {
                let w = &bhari[p..p + span];
                (w == rules.full_verb_bhari || w == rules.full_verb_khali).then_some((p, span))
            })
        }
        SiteKind::HalfVerb => {
            let span = 2;
            if len < 4 + span {
                return None;
            }
            (from..=len - 4 - span).find_map(|p| {
                let w = &bhari[p..p + span];
                (w == rules.half_verb_bhari || w == rules.half_verb_khali).then_some((p, span))
            })
        }
        SiteKind::Run => {
            if len < 4 {
                return None;
            }
            (from..=len - 4).find_map(|p| {
                let w = &bhari[p..p + 4];
                (w[0] == w[1] && w[1] == w[2] && w[2] == w[3]).then_some((p, 4))
            })
        }
    }
}

/// Improve one candidate in place of its violations: stray full verbs, then
/// stray half verbs, then four-long runs of a single bōl. Each site is
/// offered a uniformly chosen theme phrase of the matching length, and the
/// replacement is kept only when the fitness does not worsen, so the result
/// is never worse than the input.
pub fn local_search<R: Rng + ?Sized>(
    candidate: &Candidate,
    scorer: &Scorer,
    rng: &mut R,
) -> Candidate {
    let rules = scorer.rules;
    let mut current = candidate.clone();
    for kind in [SiteKind::FullVerb, SiteKind::HalfVerb, SiteKind::Run] {
        let pool: &[Vec<Bol>] = match kind {
            SiteKind::HalfVerb => &rules.replacement_pool_2,
            _ => &rules.replacement_pool_4,
        };
        if pool.is_empty() {
            continue;
        }
        let mut from = 0;
        while let Some((p, span)) = next_site(&current.bhari, from, &kind, rules) {
            let phrase = &pool[rng.gen_range(0..pool.len())];
            let mut trial = current.bhari.clone();
            trial[p..p + span].copy_from_slice(phrase);
            let scored = scorer.score(trial, current.generation_born, current.id);
            if scored.breakdown.fitness <= current.breakdown.fitness {
                current = scored;
            }
            from = p + span;
        }
    }
    current
}

fn generation_stats(generation: u32, population: &[Candidate]) -> GenerationStats {
    let n = population.len().max(1);
    let zeros = population
        .iter()
        .filter(|c| c.breakdown.fitness == 0)
        .count();
    let best = population
        .iter()
        .map(|c| c.breakdown.fitness)
        .min()
        .unwrap_or(0);
    let total: u64 = population.iter().map(|c| c.breakdown.fitness as u64).sum();
    GenerationStats {
        generation,
        zero_fitness_proportion: zeros as f64 / n as f64,
        best_fitness: best,
        mean_fitness: total as f64 / n as f64,
    }
}

/// Run the full loop on a theme.
///
/// Per generation: local search over every candidate; the best half forms
/// the mating pool, whose shuffled pairs each cross over with the configured
/// probability and add both children to the population; with the mutation
/// probability, one uniformly chosen candidate is mutated and the offspring
/// replaces the current worst; the population is then truncated back to the
/// best N (ties favor older candidates, then creation order). The run stops
/// when the zero-fitness share reaches the goal or the generation cap.
pub fn evolve(theme: &Theme, config: &EvolutionConfig) -> Result<EvolutionOutcome, MemeticError> {
    let comp = &theme.composition;
    let length = config.length.unwrap_or(comp.bhari.len());
    config.validate(length)?;

    let rules = extract_ruleset(comp, theme.seeds.as_ref(), theme.highlighted.as_deref())?;
    let theme_comp = match &comp.khali {
        Some(_) => comp.clone(),
        None => {
            let khali = derive_khali(&comp.bhari, &rules)?;
            comp.clone().with_khali(khali)
        }
    };
    let theta_base = crate::fitness::theta(&theme_comp, &rules);
    let scorer = Scorer {
        rules: &rules,
        theta_base,
        cyclic: comp.cyclic,
    };
    let matrix = TransitionMatrix::build(&comp.bhari, comp.cyclic)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);

    let n = config.population_size;
    let mut population =
        init_population(&matrix, &scorer, &comp.bhari, n, length, &mut rng)?;
    let mut next_id = population.len() as u64;

    let mut stats = vec![generation_stats(0, &population)];
    if stats[0].zero_fitness_proportion < config.goal_proportion {
        for generation in 1..=config.max_generations {
            for cand in population.iter_mut() {
                *cand = local_search(cand, &scorer, &mut rng);
            }

            let mut ranked: Vec<usize> = (0..population.len()).collect();
            ranked.sort_by_key(|&i| population[i].rank_key());
            let pool_size = n.div_ceil(2).min(ranked.len());
            let mut pool = ranked[..pool_size].to_vec();
            pool.shuffle(&mut rng);
            let mut offspring = Vec::new();
            for pair in pool.chunks_exact(2) {
                if rng.gen_bool(config.crossover_rate) {
                    let point = rng.gen_range(1..length);
                    let (a, b) = crossover(
                        &population[pair[0]].bhari,
                        &population[pair[1]].bhari,
                        point,
                    )?;
                    offspring.push(scorer.score(a, generation, next_id));
                    next_id += 1;
                    offspring.push(scorer.score(b, generation, next_id));
                    next_id += 1;
                }
            }
            population.extend(offspring);

            if rng.gen_bool(config.mutation_rate) {
                let idx = rng.gen_range(0..population.len());
                let mutant_bhari = mutate_bhari(&population[idx].bhari, &mut rng);
                let mutant = scorer.score(mutant_bhari, generation, next_id);
                next_id += 1;
                let worst = (0..population.len())
                    .max_by_key(|&i| population[i].rank_key())
                    .unwrap();
                population[worst] = mutant;
            }

            population.sort_by_key(Candidate::rank_key);
            population.truncate(n);

            let s = generation_stats(generation, &population);
            let reached_goal = s.zero_fitness_proportion >= config.goal_proportion;
            stats.push(s);
            if reached_goal {
                break;
            }
        }
    }

    population.sort_by_key(Candidate::rank_key);
    Ok(EvolutionOutcome {
        population,
        stats,
        theta_base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_theme, BolVocabulary};
    use std::collections::BTreeSet;
    use Bol::*;

    const THEME_FILE: &str = "type: cyclic\n\
        bhari: DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa\n\
        khali: TaTi TTa TiT TaTa TiT DhaGa DhinNa GiNa\n\
        seeds: Dha Ti\n\
        highlighted: DhaTiT\n";

    fn theme() -> Theme {
        parse_theme(THEME_FILE).unwrap()
    }

    fn context() -> (RuleSet, i32) {
        let t = theme();
        let rules = extract_ruleset(&t.composition, t.seeds.as_ref(), None).unwrap();
        let theta_base = crate::fitness::theta(&t.composition, &rules);
        (rules, theta_base)
    }

    #[test]
    fn crossover_swaps_tails() {
        let a = [Dha, Ti, T, Dha];
        let b = [Ti, T, Dha, Dha];
        let (ca, cb) = crossover(&a, &b, 2).unwrap();
        assert_eq!(ca, vec![Dha, Ti, Dha, Dha]);
        assert_eq!(cb, vec![Ti, T, T, Dha]);
    }

    #[test]
    fn crossover_at_last_point_swaps_only_the_final_bol() {
        let a = [Dha, Ti, T, Dha];
        let b = [Ti, T, Dha, Ga];
        let (ca, cb) = crossover(&a, &b, 3).unwrap();
        assert_eq!(ca, vec![Dha, Ti, T, Ga]);
        assert_eq!(cb, vec![Ti, T, Dha, Dha]);
    }

    #[test]
    fn crossover_conserves_the_bol_multiset() {
        let a = [Dha, Ti, T, Dha, Ga, Tin];
        let b = [Na, Ki, Na, Dha, Ti, T];
        let (ca, cb) = crossover(&a, &b, 4).unwrap();
        let mut before: Vec<Bol> = a.iter().chain(b.iter()).copied().collect();
        let mut after: Vec<Bol> = ca.iter().chain(cb.iter()).copied().collect();
        before.sort();
        after.sort();
        assert_eq!(before, after);
    }

    #[test]
    fn crossover_rejects_bad_points() {
        let a = [Dha, Ti, T, Dha];
        assert_eq!(
            crossover(&a, &a, 0),
            Err(MemeticError::BadCrossoverPoint { point: 0, max: 3 })
        );
        assert_eq!(
            crossover(&a, &a, 4),
            Err(MemeticError::BadCrossoverPoint { point: 4, max: 3 })
        );
        assert_eq!(
            crossover(&a, &[Dha, Ti], 1),
            Err(MemeticError::ParentLengthMismatch(4, 2))
        );
    }

    #[test]
    fn mutation_complements_the_inclusive_segment() {
        let bhari = [Dha, Ti, Tin, Ki, Na, Ga];
        let got = mutate_segment(&bhari, 1, 4);
        assert_eq!(got, vec![Dha, Ti, Dhi, Gi, Na, Ga]);
        assert_eq!(mutate_segment(&got, 1, 4), bhari.to_vec());
    }

    #[test]
    fn mutation_without_complements_is_identity() {
        let bhari = [Na, T, Ga, Na, T, Ga];
        assert_eq!(mutate_segment(&bhari, 0, 5), bhari.to_vec());
    }

    #[test]
    fn local_search_strips_a_mid_full_verb() {
        let (rules, theta_base) = context();
        let scorer = Scorer {
            rules: &rules,
            theta_base,
            cyclic: true,
        };
        let bhari = BolVocabulary::standard()
            .tokenize("Dha Dha Dha Dha Dha Ga Tin Na Ki Na Dha Ga Tin Na Ki Na")
            .unwrap();
        let cand = scorer.score(bhari, 0, 0);
        assert_eq!(cand.breakdown.fitness, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let improved = local_search(&cand, &scorer, &mut rng);
        assert_eq!(improved.breakdown.fitness, 0);
        assert_eq!(improved.breakdown.repetition_count, 0);
        assert!(next_site(&improved.bhari, 0, &SiteKind::FullVerb, &rules).is_none());
    }

    #[test]
    fn local_search_replaces_a_four_run() {
        let (rules, theta_base) = context();
        let scorer = Scorer {
            rules: &rules,
            theta_base,
            cyclic: true,
        };
        // The run sits mid-chromosome, so any theme phrase removes it
        // without touching the seed start or the cadence.
        let bhari = BolVocabulary::standard()
            .tokenize("Dha Ti T Dha Dha Dha Dha Dha Ti T Dha Ga Tin Na Ki Na")
            .unwrap();
        let cand = scorer.score(bhari, 0, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let improved = local_search(&cand, &scorer, &mut rng);
        assert!(improved.breakdown.fitness <= cand.breakdown.fitness);
        assert!(next_site(&improved.bhari, 0, &SiteKind::Run, &rules).is_none());
    }

    #[test]
    fn local_search_is_a_fixed_point_on_clean_candidates() {
        let (rules, theta_base) = context();
        let scorer = Scorer {
            rules: &rules,
            theta_base,
            cyclic: true,
        };
        let cand = scorer.score(theme().composition.bhari, 0, 0);
        assert_eq!(cand.breakdown.fitness, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let out = local_search(&cand, &scorer, &mut rng);
        assert_eq!(out, cand);
    }

    #[test]
    fn init_population_shape_and_membership() {
        let t = theme();
        let (rules, theta_base) = context();
        let scorer = Scorer {
            rules: &rules,
            theta_base,
            cyclic: true,
        };
        let matrix = TransitionMatrix::build(&t.composition.bhari, true).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pop =
            init_population(&matrix, &scorer, &t.composition.bhari, 10, 16, &mut rng).unwrap();
        assert_eq!(pop.len(), 10);
        let vocab = t.composition.vocabulary();
        for cand in &pop {
            assert_eq!(cand.bhari.len(), 16);
            assert!(rules.seeds.contains(&cand.bhari[0]));
            assert!(cand.bhari.iter().all(|b| vocab.contains(b)));
        }
        // The inspiring material itself anchors the population.
        assert_eq!(pop[0].bhari, t.composition.bhari);
    }

    #[test]
    fn init_population_rejects_trivial_sizes() {
        let t = theme();
        let (rules, theta_base) = context();
        let scorer = Scorer {
            rules: &rules,
            theta_base,
            cyclic: true,
        };
        let matrix = TransitionMatrix::build(&t.composition.bhari, true).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            init_population(&matrix, &scorer, &t.composition.bhari, 0, 16, &mut rng),
            Err(MemeticError::PopulationTooSmall(0))
        );
    }

    #[test]
    fn chain_can_produce_known_population_row() {
        // A bootstrapped row, checked pair by pair against the counts.
        let t = theme();
        let matrix = TransitionMatrix::build(&t.composition.bhari, true).unwrap();
        let row = BolVocabulary::standard()
            .tokenize("Dha Ti T Dha Ti T Dha Ti T Dha Ti T Dha Ga Tin Na")
            .unwrap();
        let pos = |b: Bol| matrix.order().iter().position(|&o| o == b).unwrap();
        for pair in row.windows(2) {
            assert!(matrix.counts()[pos(pair[0])][pos(pair[1])] > 0);
        }
    }

    #[test]
    fn evolve_is_deterministic_for_a_seed() {
        let t = theme();
        let config = EvolutionConfig {
            population_size: 12,
            max_generations: 6,
            rng_seed: 42,
            ..EvolutionConfig::default()
        };
        let a = evolve(&t, &config).unwrap();
        let b = evolve(&t, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn evolve_invariants_hold() {
        let t = theme();
        let config = EvolutionConfig {
            rng_seed: 7,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&t, &config).unwrap();
        assert_eq!(outcome.theta_base, 20);
        assert_eq!(outcome.population.len(), config.population_size);
        // Best fitness never rises across generations.
        for w in outcome.stats.windows(2) {
            assert!(w[1].best_fitness <= w[0].best_fitness);
        }
        // Ranked output, vocabulary closure.
        let vocab = t.composition.vocabulary();
        for w in outcome.population.windows(2) {
            assert!(w[0].breakdown.fitness <= w[1].breakdown.fitness);
        }
        for cand in &outcome.population {
            assert!(cand.bhari.iter().all(|b| vocab.contains(b)));
        }
    }

    #[test]
    fn evolve_starts_sparse_and_converges() {
        let t = theme();
        let config = EvolutionConfig {
            rng_seed: 1,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&t, &config).unwrap();
        assert!(outcome.stats[0].zero_fitness_proportion <= 0.2);
        let by_gen_10 = outcome
            .stats
            .iter()
            .filter(|s| s.generation <= 10)
            .map(|s| s.zero_fitness_proportion)
            .fold(0.0_f64, f64::max);
        assert!(
            by_gen_10 >= 0.5,
            "zero-fitness share only reached {by_gen_10}"
        );
    }

    #[test]
    fn evolve_rejects_bad_configs() {
        let t = theme();
        let bad_n = EvolutionConfig {
            population_size: 1,
            ..EvolutionConfig::default()
        };
        assert_eq!(
            evolve(&t, &bad_n),
            Err(MemeticError::PopulationTooSmall(1))
        );
        let bad_len = EvolutionConfig {
            length: Some(7),
            ..EvolutionConfig::default()
        };
        assert_eq!(evolve(&t, &bad_len), Err(MemeticError::BadLength(7)));
        let bad_rate = EvolutionConfig {
            mutation_rate: 1.5,
            ..EvolutionConfig::default()
        };
        assert!(matches!(
            evolve(&t, &bad_rate),
            Err(MemeticError::BadRate { .. })
        ));
    }

    #[test]
    fn declared_seeds_widen_the_openings() {
        let t = theme();
        let seeds: BTreeSet<Bol> = t.seeds.clone().unwrap();
        assert_eq!(seeds, [Dha, Ti].into_iter().collect());
        let config = EvolutionConfig {
            population_size: 16,
            max_generations: 2,
            rng_seed: 3,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&t, &config).unwrap();
        for cand in &outcome.population {
            assert!(seeds.contains(&cand.bhari[0]));
        }
    }
}
