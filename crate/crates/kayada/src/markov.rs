//! First-order transition matrices over bōls, and sequence generation by
//! inverse-transform sampling of the cumulative rows.
//!
//! Rows are "seeds" (the current bōl), columns the possible successors, both
//! in first-appearance order over the source bharī. A cyclic source also
//! counts the wrap-around pair from its last bōl back to its first; that is
//! what gives every row of a cyclic theme outgoing support, so generation
//! can never dead-end on one.

use rand::Rng;
use thiserror::Error;

use crate::notation::Bol;

/// Errors from matrix construction and sampling.
#[derive(Debug, Error, PartialEq)]
pub enum MarkovError {
    #[error("cannot build a transition matrix from an empty sequence")]
    EmptySequence,
    #[error("bōl {0} is not a row of this matrix")]
    UnknownSeed(Bol),
    #[error("bōl {0} has no outgoing transitions")]
    DeadEnd(Bol),
    #[error("random draw {0} is outside (0, 1]")]
    BadRandom(f64),
    #[error("generated sequences must contain at least one bōl")]
    ZeroLength,
}

/// Count adjacent-pair transitions of a sequence. Returns the distinct bōls
/// in first-appearance order together with the square count matrix indexed
/// by that order. With `cyclic`, the pair (last, first) is included.
pub fn count_transitions(bhari: &[Bol], cyclic: bool) -> (Vec<Bol>, Vec<Vec<u32>>) {
    let mut order: Vec<Bol> = Vec::new();
    for &b in bhari {
        if !order.contains(&b) {
            order.push(b);
        }
    }
    let n = order.len();
    let index = |b: Bol| order.iter().position(|&o| o == b).unwrap();
    let mut counts = vec![vec![0u32; n]; n];
    for pair in bhari.windows(2) {
        counts[index(pair[0])][index(pair[1])] += 1;
    }
    if cyclic && !bhari.is_empty() {
        counts[index(bhari[bhari.len() - 1])][index(bhari[0])] += 1;
    }
    (order, counts)
}

/// Divide each row by its row sum; all-zero rows stay all-zero.
pub fn relative_rows(counts: &[Vec<u32>]) -> Vec<Vec<f64>> {
    counts
        .iter()
        .map(|row| {
            let total: u32 = row.iter().sum();
            if total == 0 {
                vec![0.0; row.len()]
            } else {
                row.iter().map(|&c| c as f64 / total as f64).collect()
            }
        })
        .collect()
}

/// Left-to-right running sums of each relative row, recorded only at columns
/// with non-zero relative entry (zero elsewhere). The last supported entry of
/// a row is snapped to exactly 1 when the row sums to 1 within 1e-9.
pub fn cumulative_rows(relative: &[Vec<f64>]) -> Vec<Vec<f64>> {
    relative
        .iter()
        .map(|row| {
            let mut out = vec![0.0; row.len()];
            let mut running = 0.0;
            let mut last_support = None;
            for (j, &p) in row.iter().enumerate() {
                if p > 0.0 {
                    running += p;
                    out[j] = running;
                    last_support = Some(j);
                }
            }
            if let Some(j) = last_support {
                if (out[j] - 1.0).abs() <= 1e-9 {
                    out[j] = 1.0;
                }
            }
            out
        })
        .collect()
}

/// Count, relative, and cumulative transition tables of one source sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    order: Vec<Bol>,
    counts: Vec<Vec<u32>>,
    relative: Vec<Vec<f64>>,
    cumulative: Vec<Vec<f64>>,
}

impl TransitionMatrix {
    /// Build all three tables from a source bharī.
    ///
    /// The relative and cumulative entries are computed from integer count
    /// prefixes in a single division each, so a cell like 4/5 is the
    /// correctly rounded 0.8 and a full row ends at exactly 1.
    pub fn build(bhari: &[Bol], cyclic: bool) -> Result<Self, MarkovError> {
        if bhari.is_empty() {
            return Err(MarkovError::EmptySequence);
        }
        let (order, counts) = count_transitions(bhari, cyclic);
        let relative = relative_rows(&counts);
        let cumulative = counts
            .iter()
            .map(|row| {
                let total: u32 = row.iter().sum();
                let mut out = vec![0.0; row.len()];
                let mut prefix = 0u32;
                for (j, &c) in row.iter().enumerate() {
                    if c > 0 {
                        prefix += c;
                        out[j] = prefix as f64 / total as f64;
                    }
                }
                out
            })
            .collect();
        Ok(Self {
            order,
            counts,
            relative,
            cumulative,
        })
    }

    /// Distinct bōls in first-appearance order (row and column order).
    pub fn order(&self) -> &[Bol] {
        &self.order
    }

    pub fn counts(&self) -> &[Vec<u32>] {
        &self.counts
    }

    pub fn relative(&self) -> &[Vec<f64>] {
        &self.relative
    }

    pub fn cumulative(&self) -> &[Vec<f64>] {
        &self.cumulative
    }

    fn row_of(&self, seed: Bol) -> Result<usize, MarkovError> {
        self.order
            .iter()
            .position(|&b| b == seed)
            .ok_or(MarkovError::UnknownSeed(seed))
    }

    /// The successor selected by draw `u`: scanning the seed's cumulative row
    /// left to right over its non-zero support, the first column whose
    /// cumulative value reaches `u`. `u` must lie in (0, 1], and a full row's
    /// final support cell is exactly 1, so u = 1 always lands on the last
    /// supported column.
    pub fn sample_next(&self, seed: Bol, u: f64) -> Result<Bol, MarkovError> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(MarkovError::BadRandom(u));
        }
        let i = self.row_of(seed)?;
        let mut supported = false;
        for j in 0..self.order.len() {
            if self.relative[i][j] > 0.0 {
                supported = true;
                if self.cumulative[i][j] >= u {
                    return Ok(self.order[j]);
                }
            }
        }
        if supported {
            // Accumulated rounding left the row short of u; the last
            // supported column is the only consistent answer.
            let j = (0..self.order.len())
                .rev()
                .find(|&j| self.relative[i][j] > 0.0)
                .unwrap();
            Ok(self.order[j])
        } else {
            Err(MarkovError::DeadEnd(seed))
        }
    }

    /// Generate `length` bōls starting from `seed`, each successive bōl drawn
    /// by `sample_next` from its predecessor with u uniform over (0, 1].
    pub fn generate<R: Rng + ?Sized>(
        &self,
        seed: Bol,
        length: usize,
        rng: &mut R,
    ) -> Result<Vec<Bol>, MarkovError> {
        if length == 0 {
            return Err(MarkovError::ZeroLength);
        }
        self.row_of(seed)?;
        let mut out = Vec::with_capacity(length);
        out.push(seed);
        while out.len() < length {
            let u = 1.0 - rng.gen::<f64>();
            let next = self.sample_next(*out.last().unwrap(), u)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Generate with a prescribed stream of draws instead of an rng; the
    /// result has `us.len() + 1` bōls.
    pub fn replay(&self, seed: Bol, us: &[f64]) -> Result<Vec<Bol>, MarkovError> {
        self.row_of(seed)?;
        let mut out = Vec::with_capacity(us.len() + 1);
        out.push(seed);
        for &u in us {
            let next = self.sample_next(*out.last().unwrap(), u)?;
            out.push(next);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::BolVocabulary;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use Bol::*;

    fn theme_bhari() -> Vec<Bol> {
        BolVocabulary::standard()
            .tokenize("DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa")
            .unwrap()
    }

    fn theme_matrix() -> TransitionMatrix {
        TransitionMatrix::build(&theme_bhari(), true).unwrap()
    }

    #[test]
    fn counts_of_the_cyclic_theme() {
        let m = theme_matrix();
        assert_eq!(m.order(), &[Dha, Ti, T, Ga, Tin, Na, Ki]);
        let expected: Vec<Vec<u32>> = vec![
            vec![1, 3, 0, 1, 0, 0, 0],
            vec![0, 0, 3, 0, 0, 0, 0],
            vec![3, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![1, 0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 0],
        ];
        assert_eq!(m.counts(), expected.as_slice());
        // The wrap-around pair is the only source of Na -> Dha.
        assert_eq!(m.counts()[5][0], 1);
    }

    #[test]
    fn acyclic_build_drops_the_wrap_pair() {
        let m = TransitionMatrix::build(&theme_bhari(), false).unwrap();
        assert_eq!(m.counts()[5], vec![0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn self_loop_counts_with_and_without_wrap() {
        let (_, cyclic) = count_transitions(&[Dha, Dha, Dha], true);
        assert_eq!(cyclic[0][0], 3);
        let (_, open) = count_transitions(&[Dha, Dha, Dha], false);
        assert_eq!(open[0][0], 2);
    }

    #[test]
    fn relative_rows_of_the_theme() {
        let m = theme_matrix();
        assert_eq!(m.relative()[0], vec![0.2, 0.6, 0.0, 0.2, 0.0, 0.0, 0.0]);
        assert_eq!(m.relative()[1], vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(m.relative()[5], vec![0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5]);
        for row in m.relative() {
            let sum: f64 = row.iter().sum();
            assert!(sum == 0.0 || (sum - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn relative_rows_edge_cases() {
        assert_eq!(relative_rows(&[vec![4]]), vec![vec![1.0]]);
        assert_eq!(relative_rows(&[vec![0, 0]]), vec![vec![0.0, 0.0]]);
    }

    #[test]
    fn cumulative_rows_of_the_theme() {
        let m = theme_matrix();
        assert_eq!(m.cumulative()[0], vec![0.2, 0.8, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(m.cumulative()[5], vec![0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn cumulative_rows_edge_cases() {
        assert_eq!(cumulative_rows(&[vec![1.0]]), vec![vec![1.0]]);
        assert_eq!(cumulative_rows(&[vec![0.5, 0.5]]), vec![vec![0.5, 1.0]]);
    }

    #[test]
    fn sample_next_reference_rows() {
        let m = theme_matrix();
        assert_eq!(m.sample_next(Dha, 0.3), Ok(Ti));
        assert_eq!(m.sample_next(Dha, 0.1), Ok(Dha));
        assert_eq!(m.sample_next(Dha, 0.9), Ok(Ga));
        assert_eq!(m.sample_next(Na, 1.0), Ok(Ki));
        for u in [0.05, 0.3, 0.77, 1.0] {
            assert_eq!(m.sample_next(Ti, u), Ok(T));
        }
    }

    #[test]
    fn sample_next_rejects_bad_draws() {
        let m = theme_matrix();
        assert_eq!(m.sample_next(Dha, 0.0), Err(MarkovError::BadRandom(0.0)));
        assert_eq!(m.sample_next(Dha, 1.5), Err(MarkovError::BadRandom(1.5)));
        assert_eq!(m.sample_next(Dha, -0.2), Err(MarkovError::BadRandom(-0.2)));
    }

    #[test]
    fn sample_next_dead_end_and_unknown_seed() {
        let m = TransitionMatrix::build(&[Dha, Ti], false).unwrap();
        assert_eq!(m.sample_next(Ti, 0.5), Err(MarkovError::DeadEnd(Ti)));
        assert_eq!(m.sample_next(Ga, 0.5), Err(MarkovError::UnknownSeed(Ga)));
    }

    #[test]
    fn replay_reference_stream() {
        let m = theme_matrix();
        let us = [
            0.3, 0.8, 0.9, 0.3, 0.7, 0.2, 0.6, 0.2, 0.9, 0.1, 0.9, 0.2, 0.8, 1.0, 0.7,
        ];
        let got = m.replay(Dha, &us).unwrap();
        assert_eq!(
            got,
            vec![Dha, Ti, T, Dha, Ti, T, Dha, Ti, T, Dha, Dha, Ga, Tin, Na, Ki, Na]
        );
    }

    #[test]
    fn generate_length_one_is_just_the_seed() {
        let m = theme_matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(m.generate(Dha, 1, &mut rng).unwrap(), vec![Dha]);
        assert_eq!(
            m.generate(Dha, 0, &mut rng),
            Err(MarkovError::ZeroLength)
        );
    }

    #[test]
    fn generated_pairs_always_have_counts() {
        let m = theme_matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let seq = m.generate(Dha, 64, &mut rng).unwrap();
        let pos = |b: Bol| m.order().iter().position(|&o| o == b).unwrap();
        for pair in seq.windows(2) {
            assert!(m.counts()[pos(pair[0])][pos(pair[1])] > 0);
        }
    }

    #[test]
    fn successor_frequencies_follow_the_relative_row() {
        let m = theme_matrix();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 100_000;
        let mut counts = [0u32; 3]; // Dha, Ti, Ga
        for _ in 0..n {
            let u = 1.0 - rng.gen::<f64>();
            match m.sample_next(Dha, u).unwrap() {
                Dha => counts[0] += 1,
                Ti => counts[1] += 1,
                Ga => counts[2] += 1,
                other => panic!("unexpected successor {other}"),
            }
        }
        let freq = |c: u32| c as f64 / n as f64;
        assert!((freq(counts[0]) - 0.2).abs() < 0.02);
        assert!((freq(counts[1]) - 0.6).abs() < 0.02);
        assert!((freq(counts[2]) - 0.2).abs() < 0.02);
    }

    #[test]
    fn empty_source_is_rejected() {
        assert_eq!(
            TransitionMatrix::build(&[], true),
            Err(MarkovError::EmptySequence)
        );
    }
}
