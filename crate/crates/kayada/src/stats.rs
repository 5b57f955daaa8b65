//! Evaluation statistics: Pearson correlation, the chi-square test of
//! independence, the fourteen creativity criteria over rated items, and
//! fitness-scale normalization.
//!
//! The chi-square p-value uses a hand-rolled regularized incomplete gamma
//! (series below a+1, continued fraction above), good to ~1e-12 over the
//! ranges these tests hit.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),
    #[error("contingency table has no observations")]
    EmptyTable,
    #[error("contingency table must be at least 2x2, got {rows}x{cols}")]
    TableTooSmall { rows: usize, cols: usize },
    #[error("table rows have inconsistent widths")]
    RaggedTable,
    #[error("expected frequency at row {row}, column {col} is zero")]
    ZeroExpectedCell { row: usize, col: usize },
    #[error("no rated items")]
    EmptyItemList,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// ln Γ(z) for z > 0, by the Lanczos approximation.
pub fn ln_gamma(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    const COEFFS: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let mut sum = 1.000000000190015;
    for (i, &c) in COEFFS.iter().enumerate() {
        sum += c / (z + i as f64 + 1.0);
    }
    let tmp = z + 5.5;
    (z + 0.5) * tmp.ln() - tmp + (2.5066282746310005 * sum / z).ln()
}

/// Series expansion of the regularized lower incomplete gamma P(a, x);
/// converges quickly for x < a + 1.
fn gamma_series_lower(a: f64, x: f64) -> f64 {
    let mut ap = a;
    let mut sum = 1.0 / a;
    let mut del = sum;
    for _ in 0..300 {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if del.abs() < sum.abs() * 1e-15 {
            break;
        }
    }
    sum * (-x + a * x.ln() - ln_gamma(a)).exp()
}

/// Lentz continued fraction for the regularized upper incomplete gamma
/// Q(a, x); converges quickly for x >= a + 1.
fn gamma_cf_upper(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..300 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-15 {
            break;
        }
    }
    (-x + a * x.ln() - ln_gamma(a)).exp() * h
}

/// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
pub fn regularized_gamma_upper(a: f64, x: f64) -> f64 {
    debug_assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        1.0
    } else if x < a + 1.0 {
        1.0 - gamma_series_lower(a, x)
    } else {
        gamma_cf_upper(a, x)
    }
}

// ---------------------------------------------------------------------------
// Pearson correlation
// ---------------------------------------------------------------------------

/// Sample correlation coefficient of paired observations.
pub fn pearson(pairs: &[(f64, f64)]) -> Result<f64, StatsError> {
    let n = pairs.len();
    if n < 2 {
        return Err(StatsError::DegenerateSample("fewer than two pairs"));
    }
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / n as f64;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for &(x, y) in pairs {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(StatsError::DegenerateSample("a coordinate has zero variance"));
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

// ---------------------------------------------------------------------------
// Chi-square test of independence
// ---------------------------------------------------------------------------

/// Observed frequencies with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub observed: Vec<Vec<u64>>,
}

impl ContingencyTable {
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        observed: Vec<Vec<u64>>,
    ) -> Result<Self, StatsError> {
        let rows = observed.len();
        let cols = observed.first().map_or(0, Vec::len);
        if rows < 2 || cols < 2 {
            return Err(StatsError::TableTooSmall { rows, cols });
        }
        if observed.iter().any(|r| r.len() != cols)
            || row_labels.len() != rows
            || col_labels.len() != cols
        {
            return Err(StatsError::RaggedTable);
        }
        Ok(Self {
            row_labels,
            col_labels,
            observed,
        })
    }

    /// Parse a delimited matrix: first row holds the column labels (after a
    /// corner cell), first column the row labels. Commas delimit cells;
    /// blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, StatsError> {
        let mut col_labels: Option<Vec<String>> = None;
        let mut row_labels = Vec::new();
        let mut observed = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            match &col_labels {
                None => {
                    if cells.len() < 3 {
                        return Err(StatsError::Parse {
                            line: line_no,
                            message: "header needs a corner cell and at least two column labels"
                                .into(),
                        });
                    }
                    col_labels = Some(cells[1..].iter().map(|s| s.to_string()).collect());
                }
                Some(cols) => {
                    if cells.len() != cols.len() + 1 {
                        return Err(StatsError::Parse {
                            line: line_no,
                            message: format!(
                                "expected {} cells, got {}",
                                cols.len() + 1,
                                cells.len()
                            ),
                        });
                    }
                    row_labels.push(cells[0].to_string());
                    let mut row = Vec::with_capacity(cols.len());
                    for cell in &cells[1..] {
                        let v: u64 = cell.parse().map_err(|_| StatsError::Parse {
                            line: line_no,
                            message: format!("cell {cell:?} is not a non-negative integer"),
                        })?;
                        row.push(v);
                    }
                    observed.push(row);
                }
            }
        }
        let col_labels = col_labels.ok_or(StatsError::Parse {
            line: 1,
            message: "empty table".into(),
        })?;
        Self::new(row_labels, col_labels, observed)
    }

    pub fn row_totals(&self) -> Vec<u64> {
        self.observed.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_totals(&self) -> Vec<u64> {
        let cols = self.col_labels.len();
        (0..cols)
            .map(|j| self.observed.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn grand_total(&self) -> u64 {
        self.observed.iter().flatten().sum()
    }
}

/// Expected cell frequencies under independence: row total times column
/// total over the grand total.
pub fn expected_frequencies(table: &ContingencyTable) -> Result<Vec<Vec<f64>>, StatsError> {
    let total = table.grand_total();
    if total == 0 {
        return Err(StatsError::EmptyTable);
    }
    let rows = table.row_totals();
    let cols = table.col_totals();
    Ok(rows
        .iter()
        .map(|&ri| {
            cols.iter()
                .map(|&cj| (ri as f64) * (cj as f64) / total as f64)
                .collect()
        })
        .collect())
}

/// Result of a chi-square independence test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub degrees_of_freedom: u32,
    pub p_value: f64,
}

/// Pearson's chi-square test of independence over a contingency table. The
/// p-value is the upper tail of the chi-square distribution, computed via
/// the regularized upper incomplete gamma Q(df/2, x2/2).
pub fn chi_square_test(table: &ContingencyTable) -> Result<ChiSquareResult, StatsError> {
    let expected = expected_frequencies(table)?;
    let mut statistic = 0.0;
    for (i, row) in table.observed.iter().enumerate() {
        for (j, &obs) in row.iter().enumerate() {
            let exp = expected[i][j];
            if exp == 0.0 {
                return Err(StatsError::ZeroExpectedCell { row: i, col: j });
            }
            let diff = obs as f64 - exp;
            statistic += diff * diff / exp;
        }
    }
    let degrees_of_freedom =
        ((table.row_labels.len() - 1) * (table.col_labels.len() - 1)) as u32;
    let p_value = regularized_gamma_upper(degrees_of_freedom as f64 / 2.0, statistic / 2.0);
    Ok(ChiSquareResult {
        statistic,
        degrees_of_freedom,
        p_value,
    })
}

// ---------------------------------------------------------------------------
// Creativity criteria over rated items
// ---------------------------------------------------------------------------

/// One produced item with its typicality and quality ratings in [0, 1] and
/// its inspiring-set membership.
#[derive(Debug, Clone, PartialEq)]
pub struct RatedItem {
    pub id: String,
    pub typicality: f64,
    pub quality: f64,
    pub inspiring: bool,
}

/// Thresholds and the inspiring-set size for the criteria report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationConfig {
    pub typicality_threshold: f64,
    pub quality_threshold: f64,
    pub inspiring_set_size: usize,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        Self {
            typicality_threshold: 0.7,
            quality_threshold: 0.7,
            inspiring_set_size: 1,
        }
    }
}

/// The fourteen criteria. Ratios with an empty denominator render as
/// infinity when the numerator is positive; the 0/0 cases follow the
/// conventions noted on each field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RitchieReport {
    /// 1: mean typicality over all results.
    pub avg_typicality: f64,
    /// 2: typical results / all results.
    pub typical_ratio: f64,
    /// 3: mean quality over all results.
    pub avg_quality: f64,
    /// 4: good results / all results.
    pub good_ratio: f64,
    /// 5: good typical results / good results. Reported against the good
    /// set (not all results): with every result typical and 65% good, the
    /// published creativity tables read 1 here, which only the /|V| reading
    /// produces. 0/0 falls to 0.
    pub good_typical_ratio: f64,
    /// 6: good atypical results / all results.
    pub good_atypical_ratio: f64,
    /// 7: good atypical results / atypical results; 0/0 is infinity.
    pub good_atypical_vs_atypical: f64,
    /// 8: good atypical results / good typical results; 0/0 is 0.
    pub good_atypical_vs_good_typical: f64,
    /// 9: results in the inspiring set / inspiring set size.
    pub inspiring_recall: f64,
    /// 10: all results / results in the inspiring set; 0 hits render as
    /// infinity.
    pub results_per_inspiring: f64,
    /// 11: mean typicality of new results.
    pub avg_typicality_new: f64,
    /// 12: mean quality of new results.
    pub avg_quality_new: f64,
    /// 13: typical new results / new results.
    pub typical_new_ratio: f64,
    /// 14: good new results / new results.
    pub good_new_ratio: f64,
    /// Set when every result sits in the inspiring set; the four new-result
    /// criteria are then reported as 0.
    pub new_results_empty: bool,
}

impl RitchieReport {
    /// The criteria in order 1..14.
    pub fn as_array(&self) -> [f64; 14] {
        [
            self.avg_typicality,
            self.typical_ratio,
            self.avg_quality,
            self.good_ratio,
            self.good_typical_ratio,
            self.good_atypical_ratio,
            self.good_atypical_vs_atypical,
            self.good_atypical_vs_good_typical,
            self.inspiring_recall,
            self.results_per_inspiring,
            self.avg_typicality_new,
            self.avg_quality_new,
            self.typical_new_ratio,
            self.good_new_ratio,
        ]
    }
}

fn ratio(num: usize, den: usize, zero_over_zero: f64) -> f64 {
    if den > 0 {
        num as f64 / den as f64
    } else if num > 0 {
        f64::INFINITY
    } else {
        zero_over_zero
    }
}

/// Compute the fourteen criteria over rated items.
pub fn ritchie_criteria(
    items: &[RatedItem],
    config: &EvaluationConfig,
) -> Result<RitchieReport, StatsError> {
    if items.is_empty() {
        return Err(StatsError::EmptyItemList);
    }
    let alpha = config.typicality_threshold;
    let beta = config.quality_threshold;
    let n = items.len();

    let typical: Vec<bool> = items.iter().map(|i| i.typicality > alpha).collect();
    let good: Vec<bool> = items.iter().map(|i| i.quality > beta).collect();
    let inspiring: Vec<bool> = items.iter().map(|i| i.inspiring).collect();

    let count = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&i| f(i)).count();
    let t_count = count(&|i| typical[i]);
    let v_count = count(&|i| good[i]);
    let tv_count = count(&|i| typical[i] && good[i]);
    let good_atypical = count(&|i| good[i] && !typical[i]);
    let atypical = n - t_count;
    let in_inspiring = count(&|i| inspiring[i]);
    let new_indices: Vec<usize> = (0..n).filter(|&i| !inspiring[i]).collect();

    let mean_typ = items.iter().map(|i| i.typicality).sum::<f64>() / n as f64;
    let mean_val = items.iter().map(|i| i.quality).sum::<f64>() / n as f64;

    let new_results_empty = new_indices.is_empty();
    let (mean_typ_new, mean_val_new, typical_new, good_new) = if new_results_empty {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        let m = new_indices.len();
        (
            new_indices.iter().map(|&i| items[i].typicality).sum::<f64>() / m as f64,
            new_indices.iter().map(|&i| items[i].quality).sum::<f64>() / m as f64,
            ratio(new_indices.iter().filter(|&&i| typical[i]).count(), m, 0.0),
            ratio(new_indices.iter().filter(|&&i| good[i]).count(), m, 0.0),
        )
    };

    Ok(RitchieReport {
        avg_typicality: mean_typ,
        typical_ratio: ratio(t_count, n, 0.0),
        avg_quality: mean_val,
        good_ratio: ratio(v_count, n, 0.0),
        good_typical_ratio: ratio(tv_count, v_count, 0.0),
        good_atypical_ratio: ratio(good_atypical, n, 0.0),
        good_atypical_vs_atypical: ratio(good_atypical, atypical, f64::INFINITY),
        good_atypical_vs_good_typical: ratio(good_atypical, tv_count, 0.0),
        inspiring_recall: ratio(in_inspiring, config.inspiring_set_size, 0.0),
        results_per_inspiring: ratio(n, in_inspiring, f64::INFINITY),
        avg_typicality_new: mean_typ_new,
        avg_quality_new: mean_val_new,
        typical_new_ratio: typical_new,
        good_new_ratio: good_new,
        new_results_empty,
    })
}

/// Parse the ratings format: a `id,typicality,quality,inspiring` header then
/// one row per item, booleans as 0/1.
pub fn parse_ratings(text: &str) -> Result<Vec<RatedItem>, StatsError> {
    let mut items = Vec::new();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            let normalized: String = line.split(',').map(str::trim).collect::<Vec<_>>().join(",");
            if normalized != "id,typicality,quality,inspiring" {
                return Err(StatsError::Parse {
                    line: line_no,
                    message: format!(
                        "expected header `id,typicality,quality,inspiring`, got {line:?}"
                    ),
                });
            }
            saw_header = true;
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != 4 {
            return Err(StatsError::Parse {
                line: line_no,
                message: format!("expected 4 fields, got {}", cells.len()),
            });
        }
        let field = |name: &str, s: &str| -> Result<f64, StatsError> {
            let v: f64 = s.parse().map_err(|_| StatsError::Parse {
                line: line_no,
                message: format!("{name} {s:?} is not a number"),
            })?;
            if !(0.0..=1.0).contains(&v) {
                return Err(StatsError::Parse {
                    line: line_no,
                    message: format!("{name} {v} outside [0, 1]"),
                });
            }
            Ok(v)
        };
        let typicality = field("typicality", cells[1])?;
        let quality = field("quality", cells[2])?;
        let inspiring = match cells[3] {
            "0" => false,
            "1" => true,
            other => {
                return Err(StatsError::Parse {
                    line: line_no,
                    message: format!("inspiring flag {other:?} must be 0 or 1"),
                })
            }
        };
        items.push(RatedItem {
            id: cells[0].to_string(),
            typicality,
            quality,
            inspiring,
        });
    }
    if !saw_header {
        return Err(StatsError::Parse {
            line: 1,
            message: "missing header".into(),
        });
    }
    Ok(items)
}

/// Parse paired observations: two numbers per line, separated by a comma or
/// whitespace; blank lines and `#` comments are skipped.
pub fn parse_pairs(text: &str) -> Result<Vec<(f64, f64)>, StatsError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(StatsError::Parse {
                line: line_no,
                message: format!("expected two numbers, got {}", fields.len()),
            });
        }
        let parse = |s: &str| -> Result<f64, StatsError> {
            s.parse().map_err(|_| StatsError::Parse {
                line: line_no,
                message: format!("{s:?} is not a number"),
            })
        };
        pairs.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(pairs)
}

// ---------------------------------------------------------------------------
// Fitness-scale normalization
// ---------------------------------------------------------------------------

/// Map fitness values (minimized at 0) onto a 1..10 scale where the best
/// fitness scores highest: 1 + 9 * (1 - f / f_max). When every fitness is 0
/// the whole list scores 10.
pub fn normalize_fitness(fitnesses: &[u32]) -> Vec<f64> {
    let max = fitnesses.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return vec![10.0; fitnesses.len()];
    }
    fitnesses
        .iter()
        .map(|&f| 1.0 + 9.0 * (1.0 - f as f64 / max as f64))
        .collect()
}
