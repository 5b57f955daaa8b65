//! Command implementations and file formats behind the `kayada` binary.
//!
//! Every command here turns input text into output text; file handling and
//! argument parsing stay in `main`. Output files all begin with a `#` header
//! carrying the tool version, the command, and the full effective
//! configuration (including the rng seed where one is involved), so a header
//! plus a seed pins the entire body.

use anyhow::{bail, Context, Result};

use kayada::{
    complete_lenient, count_verb_repetitions, evolve, extract_ruleset, normalize_fitness,
    parse_pairs, parse_ratings, pearson, ritchie_criteria, BolVocabulary, ChiSquareResult,
    Composition, ContingencyTable, EvaluationConfig, EvolutionConfig, RitchieReport, Theme,
    TransitionMatrix,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Render a number the way the tables print them: integers bare, fractions
/// trimmed to at most six decimals, infinity as `inf`.
pub fn format_value(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        let s = format!("{x:.6}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn header_line(names: &[String]) -> String {
    let mut s = String::new();
    for n in names {
        s.push('\t');
        s.push_str(n);
    }
    s
}

/// The three transition tables of a theme, tab-separated with bōl row and
/// column headers.
pub fn matrix_tables(theme: &Theme, theme_label: &str, force_acyclic: bool) -> Result<String> {
    let comp = &theme.composition;
    let cyclic = comp.cyclic && !force_acyclic;
    let matrix = TransitionMatrix::build(&comp.bhari, cyclic)?;
    let names: Vec<String> = matrix.order().iter().map(|b| b.name().to_string()).collect();

    let mut out = String::new();
    out.push_str(&format!("# kayada {VERSION}\n"));
    out.push_str("# command: matrix\n");
    out.push_str(&format!("# theme: {theme_label}\n"));
    out.push_str(&format!(
        "# type: {}\n",
        if cyclic { "cyclic" } else { "acyclic" }
    ));
    out.push_str("Transition counts\n");
    out.push_str(&header_line(&names));
    out.push('\n');
    for (i, name) in names.iter().enumerate() {
        out.push_str(name);
        for &c in &matrix.counts()[i] {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    for (title, rows) in [
        ("Relative frequencies", matrix.relative()),
        ("Cumulative relatives", matrix.cumulative()),
    ] {
        out.push('\n');
        out.push_str(title);
        out.push('\n');
        out.push_str(&header_line(&names));
        out.push('\n');
        for (i, name) in names.iter().enumerate() {
            out.push_str(name);
            for &v in &rows[i] {
                out.push('\t');
                out.push_str(&format_value(v));
            }
            out.push('\n');
        }
    }
    Ok(out)
}

/// One line of a corpus file.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRecord {
    pub rank: usize,
    pub id: u64,
    pub bhari_text: String,
    pub khali_text: String,
    pub theta: i32,
    pub fitness: u32,
    pub score: f64,
    pub generation_born: u32,
}

/// Output of the generate command: the corpus file body and the
/// per-generation stats table.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerateReport {
    pub corpus: String,
    pub stats_table: String,
}

/// Evolve a theme and serialize the ranked survivors.
pub fn run_generate(
    theme: &Theme,
    theme_label: &str,
    config: &EvolutionConfig,
) -> Result<GenerateReport> {
    let outcome = evolve(theme, config)?;
    let rules = extract_ruleset(
        &theme.composition,
        theme.seeds.as_ref(),
        theme.highlighted.as_deref(),
    )?;
    let cyclic = theme.composition.cyclic;
    let length = config.length.unwrap_or(theme.composition.bhari.len());
    let width = theme.composition.group_width;

    let fitnesses: Vec<u32> = outcome
        .population
        .iter()
        .map(|c| c.breakdown.fitness)
        .collect();
    let scores = normalize_fitness(&fitnesses);

    let mut corpus = String::new();
    corpus.push_str(&format!("# kayada {VERSION}\n"));
    corpus.push_str("# command: generate\n");
    corpus.push_str(&format!("# theme: {theme_label}\n"));
    corpus.push_str(&format!(
        "# type: {}\n",
        if cyclic { "cyclic" } else { "acyclic" }
    ));
    corpus.push_str(&format!("# length: {length}\n"));
    corpus.push_str(&format!("# population_size: {}\n", config.population_size));
    corpus.push_str(&format!("# max_generations: {}\n", config.max_generations));
    corpus.push_str(&format!(
        "# mutation_rate: {}\n",
        format_value(config.mutation_rate)
    ));
    corpus.push_str(&format!(
        "# crossover_rate: {}\n",
        format_value(config.crossover_rate)
    ));
    corpus.push_str(&format!(
        "# goal_proportion: {}\n",
        format_value(config.goal_proportion)
    ));
    corpus.push_str(&format!("# rng_seed: {}\n", config.rng_seed));
    corpus.push_str(&format!(
        "# generations_run: {}\n",
        outcome.stats.last().map_or(0, |s| s.generation)
    ));
    corpus.push_str(&format!("# theta_base: {}\n", outcome.theta_base));
    corpus.push_str("# columns: rank,id,bhari,khali,theta,fitness,score,generation_born\n");
    for (i, cand) in outcome.population.iter().enumerate() {
        let completed = complete_lenient(&cand.bhari, &rules, cyclic);
        let khali = completed.khali.as_deref().unwrap_or(&[]);
        corpus.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            i + 1,
            cand.id,
            kayada::render_half(&cand.bhari, width),
            kayada::render_half(khali, width),
            cand.breakdown.theta,
            cand.breakdown.fitness,
            format_value(scores[i]),
            cand.generation_born,
        ));
    }

    let mut stats_table = String::new();
    stats_table.push_str("generation,zero_fitness_proportion,best_fitness,mean_fitness\n");
    for s in &outcome.stats {
        stats_table.push_str(&format!(
            "{},{:.6},{},{:.6}\n",
            s.generation, s.zero_fitness_proportion, s.best_fitness, s.mean_fitness
        ));
    }

    Ok(GenerateReport {
        corpus,
        stats_table,
    })
}

/// Parse a corpus file body back into records.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusRecord>> {
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 8 {
            bail!("corpus line {line_no}: expected 8 fields, got {}", cells.len());
        }
        let parse_err = |what: &str| format!("corpus line {line_no}: bad {what}");
        records.push(CorpusRecord {
            rank: cells[0].parse().with_context(|| parse_err("rank"))?,
            id: cells[1].parse().with_context(|| parse_err("id"))?,
            bhari_text: cells[2].to_string(),
            khali_text: cells[3].to_string(),
            theta: cells[4].parse().with_context(|| parse_err("theta"))?,
            fitness: cells[5].parse().with_context(|| parse_err("fitness"))?,
            score: cells[6].parse().with_context(|| parse_err("score"))?,
            generation_born: cells[7].parse().with_context(|| parse_err("generation"))?,
        });
    }
    if records.is_empty() {
        bail!("corpus contains no records");
    }
    Ok(records)
}

fn criteria_report(
    report: &RitchieReport,
    config: &EvaluationConfig,
    source: &str,
    items: usize,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("# kayada {VERSION}\n"));
    out.push_str("# command: evaluate\n");
    out.push_str(&format!("# source: {source}\n"));
    out.push_str(&format!(
        "# alpha: {}\n",
        format_value(config.typicality_threshold)
    ));
    out.push_str(&format!(
        "# beta: {}\n",
        format_value(config.quality_threshold)
    ));
    out.push_str(&format!(
        "# inspiring_set_size: {}\n",
        config.inspiring_set_size
    ));
    out.push_str(&format!("# items: {items}\n"));
    if report.new_results_empty {
        out.push_str("# note: every item is in the inspiring set; c11-c14 report 0\n");
    }
    for (i, v) in report.as_array().iter().enumerate() {
        out.push_str(&format!("c{}: {}\n", i + 1, format_value(*v)));
    }
    out
}

/// Evaluate a ratings file against the fourteen criteria.
pub fn evaluate_ratings(
    ratings_text: &str,
    ratings_label: &str,
    config: &EvaluationConfig,
) -> Result<String> {
    let items = parse_ratings(ratings_text)?;
    let report = ritchie_criteria(&items, config)?;
    Ok(criteria_report(
        &report,
        config,
        &format!("ratings {ratings_label}"),
        items.len(),
    ))
}

/// Evaluate a corpus with the built-in auto-rater: typicality is the share
/// of composition rules a record satisfies, quality its normalized score on
/// the 0..1 scale, and a record is inspiring when it reproduces the theme's
/// bharī itself.
pub fn evaluate_corpus(
    corpus_text: &str,
    corpus_label: &str,
    theme: &Theme,
    config: &EvaluationConfig,
) -> Result<String> {
    let records = parse_corpus(corpus_text)?;
    let rules = extract_ruleset(
        &theme.composition,
        theme.seeds.as_ref(),
        theme.highlighted.as_deref(),
    )?;
    let vocab = BolVocabulary::standard();
    let mut items = Vec::with_capacity(records.len());
    for rec in &records {
        let bhari = vocab
            .tokenize(&rec.bhari_text)
            .with_context(|| format!("record {}: bharī", rec.rank))?;
        let khali = vocab
            .tokenize(&rec.khali_text)
            .with_context(|| format!("record {}: khālī", rec.rank))?;
        let comp = Composition::new(bhari.clone(), theme.composition.cyclic).with_khali(khali);
        let satisfied = [
            comp.bhari
                .first()
                .is_some_and(|b| rules.seeds.contains(b)),
            rules.ends_with_full_verb(&comp.bhari),
            rules.ends_with_half_verb(&comp.bhari),
            count_verb_repetitions(&comp, &rules) == 0,
        ]
        .iter()
        .filter(|&&s| s)
        .count();
        items.push(kayada::RatedItem {
            id: rec.id.to_string(),
            typicality: satisfied as f64 / 4.0,
            quality: rec.score / 10.0,
            inspiring: bhari == theme.composition.bhari,
        });
    }
    let report = ritchie_criteria(&items, config)?;
    Ok(criteria_report(
        &report,
        config,
        &format!("auto-rated from corpus {corpus_label}"),
        items.len(),
    ))
}

/// Pearson correlation of a paired-sample file.
pub fn stats_pearson(text: &str, input_label: &str) -> Result<String> {
    let pairs = parse_pairs(text)?;
    let r = pearson(&pairs)?;
    Ok(format!(
        "# kayada {VERSION}\n# command: stats pearson\n# input: {input_label}\nr = {r:.6}\n"
    ))
}

/// Chi-square test of independence over a contingency file.
pub fn stats_chisq(text: &str, input_label: &str) -> Result<String> {
    let table = ContingencyTable::parse(text)?;
    let ChiSquareResult {
        statistic,
        degrees_of_freedom,
        p_value,
    } = kayada::chi_square_test(&table)?;
    Ok(format!(
        "# kayada {VERSION}\n# command: stats chisq\n# input: {input_label}\n\
         X2 = {statistic:.5}\nDF = {degrees_of_freedom}\np = {p_value:.5}\n"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use kayada::parse_theme;

    const THEME_FILE: &str = "type: cyclic\n\
        bhari: DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa\n\
        khali: TaTi TTa TiT TaTa TiT DhaGa DhinNa GiNa\n\
        seeds: Dha Ti\n\
        highlighted: DhaTiT\n";

    fn theme() -> Theme {
        parse_theme(THEME_FILE).unwrap()
    }

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(0.2), "0.2");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(5.5), "5.5");
        assert_eq!(format_value(f64::INFINITY), "inf");
        assert_eq!(format_value(0.333333333), "0.333333");
    }

    #[test]
    fn matrix_tables_contain_the_known_rows() {
        let text = matrix_tables(&theme(), "theme.txt", false).unwrap();
        assert!(text.starts_with("# kayada "));
        assert!(text.contains("Dha\t1\t3\t0\t1\t0\t0\t0"));
        assert!(text.contains("Dha\t0.2\t0.6\t0\t0.2\t0\t0\t0"));
        assert!(text.contains("Dha\t0.2\t0.8\t0\t1\t0\t0\t0"));
        assert!(text.contains("Na\t0.5\t0\t0\t0\t0\t0\t1"));
    }

    #[test]
    fn acyclic_matrix_drops_the_wrap_entry() {
        let text = matrix_tables(&theme(), "theme.txt", true).unwrap();
        assert!(text.contains("# type: acyclic"));
        assert!(text.contains("Na\t0\t0\t0\t0\t0\t0\t1"));
    }

    #[test]
    fn generate_corpus_shape() {
        let config = EvolutionConfig {
            rng_seed: 5,
            ..EvolutionConfig::default()
        };
        let report = run_generate(&theme(), "theme.txt", &config).unwrap();
        let records = parse_corpus(&report.corpus).unwrap();
        assert_eq!(records.len(), 30);
        assert_eq!(records[0].fitness, 0);
        assert_eq!(records[0].score, 10.0);
        assert!(report.corpus.contains("# rng_seed: 5"));
        assert!(report.corpus.contains("# theta_base: 20"));
        assert!(report
            .stats_table
            .starts_with("generation,zero_fitness_proportion"));
        // Ascending fitness, and every record re-tokenizes into theme bōls.
        let vocab = BolVocabulary::standard();
        let theme_vocab = theme().composition.vocabulary();
        let mut last = 0;
        for rec in &records {
            assert!(rec.fitness >= last);
            last = rec.fitness;
            for b in vocab.tokenize(&rec.bhari_text).unwrap() {
                assert!(theme_vocab.contains(&b));
            }
        }
    }

    #[test]
    fn generate_is_byte_deterministic() {
        let config = EvolutionConfig {
            rng_seed: 11,
            ..EvolutionConfig::default()
        };
        let a = run_generate(&theme(), "theme.txt", &config).unwrap();
        let b = run_generate(&theme(), "theme.txt", &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn evaluate_corpus_is_flagged_auto_rated() {
        let config = EvolutionConfig {
            rng_seed: 3,
            ..EvolutionConfig::default()
        };
        let report = run_generate(&theme(), "theme.txt", &config).unwrap();
        let out = evaluate_corpus(
            &report.corpus,
            "corpus.txt",
            &theme(),
            &EvaluationConfig::default(),
        )
        .unwrap();
        assert!(out.contains("auto-rated"));
        assert!(out.contains("c1: "));
        assert!(out.lines().filter(|l| !l.starts_with('#')).count() == 14);
    }

    #[test]
    fn pearson_and_chisq_report_lines() {
        let out = stats_pearson("1,2\n2,4\n3,6\n", "pairs.csv").unwrap();
        assert!(out.ends_with("r = 1.000000\n"));
        let table = ",x,y\na,10,20\nb,20,40\n";
        let out = stats_chisq(table, "observed.csv").unwrap();
        assert!(out.contains("X2 = 0.00000"));
        assert!(out.contains("DF = 1"));
        assert!(out.contains("p = 1.00000"));
    }

    #[test]
    fn corpus_parser_rejects_garbage() {
        assert!(parse_corpus("# header only\n").is_err());
        assert!(parse_corpus("1,2,3\n").is_err());
    }

    #[test]
    fn evaluate_rejects_empty_ratings() {
        assert!(evaluate_ratings("", "empty.csv", &EvaluationConfig::default()).is_err());
        assert!(evaluate_ratings(
            "id,typicality,quality,inspiring\n",
            "header-only.csv",
            &EvaluationConfig::default()
        )
        .is_err());
    }
}
