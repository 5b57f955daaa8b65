//! Bōl notation: tokenizing, rendering, and completing kāyadā compositions.
//!
//! A composition is written as whitespace-separated groups of concatenated
//! bōl syllables ("DhaTi TDha TiT ..."), one line per half: the bharī (open)
//! half first, then the khālī (closed) half. The khālī mirrors the bharī
//! bōl-for-bōl, with open strokes swapped for their closed counterparts in
//! the first half and the closing verb swapped for its khālī form.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rules::RuleSet;

/// Errors from parsing or completing notation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotationError {
    /// No vocabulary surface form matches the remaining text.
    #[error("unknown syllable {found:?} at byte offset {offset}")]
    UnknownSyllable { offset: usize, found: String },
    /// A bharī half must close with one of the rule set's full verbs before
    /// its khālī can be derived.
    #[error("sequence does not end with a known full verb")]
    MissingVerb,
    /// Halves must split evenly.
    #[error("sequence length {0} is odd; the two halves must be equal")]
    OddLength(usize),
    /// Too short to carry a closing verb plus two halves.
    #[error("sequence length {0} is too short; at least 8 bōls are required")]
    TooShort(usize),
    /// Malformed theme file.
    #[error("theme file line {line}: {message}")]
    ThemeFile { line: usize, message: String },
}

/// A tabla stroke syllable: the token alphabet of kāyadā notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bol {
    Dha,
    Dhi,
    Ti,
    Tin,
    Ta,
    T,
    Ga,
    Gi,
    Ki,
    Na,
}

impl Bol {
    /// Every syllable, in the vocabulary's canonical order.
    pub const ALL: [Bol; 10] = [
        Bol::Dha,
        Bol::Dhi,
        Bol::Ti,
        Bol::Tin,
        Bol::Ta,
        Bol::T,
        Bol::Ga,
        Bol::Gi,
        Bol::Ki,
        Bol::Na,
    ];

    /// Canonical spelling.
    pub fn name(self) -> &'static str {
        match self {
            Bol::Dha => "Dha",
            Bol::Dhi => "Dhi",
            Bol::Ti => "Ti",
            Bol::Tin => "Tin",
            Bol::Ta => "Ta",
            Bol::T => "T",
            Bol::Ga => "Ga",
            Bol::Gi => "Gi",
            Bol::Ki => "Ki",
            Bol::Na => "Na",
        }
    }

    /// Whether the stroke sounds the resonant (open) bass drum.
    pub fn is_open(self) -> bool {
        matches!(self, Bol::Dha | Bol::Dhi | Bol::Ga | Bol::Gi)
    }

    /// The paired open/closed counterpart, if the stroke has one.
    /// The pairing is symmetric: `a.complement() == Some(b)` implies
    /// `b.complement() == Some(a)`.
    pub fn complement(self) -> Option<Bol> {
        match self {
            Bol::Dha => Some(Bol::Ta),
            Bol::Ta => Some(Bol::Dha),
            Bol::Dhi => Some(Bol::Tin),
            Bol::Tin => Some(Bol::Dhi),
            Bol::Gi => Some(Bol::Ki),
            Bol::Ki => Some(Bol::Gi),
            _ => None,
        }
    }

    /// Complement where defined, the stroke itself otherwise. An involution.
    pub fn partner(self) -> Bol {
        self.complement().unwrap_or(self)
    }
}

impl fmt::Display for Bol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The bōl inventory plus surface-form aliases, with greedy longest-match
/// tokenization over both.
#[derive(Debug, Clone)]
pub struct BolVocabulary {
    symbols: Vec<Bol>,
    aliases: Vec<(&'static str, Bol)>,
    /// Surface forms (canonical names plus aliases) sorted longest first, so
    /// that "Tin" wins over "Ti" and "Dhin" over "Dhi".
    patterns: Vec<(&'static str, Bol)>,
}

impl BolVocabulary {
    /// The standard kāyadā vocabulary. "Dhin" is an alias of Dhi; both
    /// spellings of the khālī verb syllable occur in common transliterations.
    pub fn standard() -> Self {
        let symbols = Bol::ALL.to_vec();
        let aliases = vec![("Dhin", Bol::Dhi)];
        let mut patterns: Vec<(&'static str, Bol)> = symbols
            .iter()
            .map(|&b| (b.name(), b))
            .chain(aliases.iter().copied())
            .collect();
        patterns.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        Self {
            symbols,
            aliases,
            patterns,
        }
    }

    /// Canonical symbols in stable order.
    pub fn symbols(&self) -> &[Bol] {
        &self.symbols
    }

    /// Surface-form aliases (alias -> canonical symbol).
    pub fn aliases(&self) -> &[(&'static str, Bol)] {
        &self.aliases
    }

    /// Decode grouped bōl text into the flat bōl sequence.
    ///
    /// Whitespace separates groups; inside a group, syllables are matched
    /// greedily left to right, longest surface form first. Aliases normalize
    /// to their canonical symbol.
    pub fn tokenize(&self, text: &str) -> Result<Vec<Bol>, NotationError> {
        let mut out = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let rest = &text[i..];
            match self.patterns.iter().find(|(p, _)| rest.starts_with(p)) {
                Some(&(p, b)) => {
                    out.push(b);
                    i += p.len();
                }
                None => {
                    let found: String = rest.chars().take(8).collect();
                    return Err(NotationError::UnknownSyllable { offset: i, found });
                }
            }
        }
        Ok(out)
    }
}

impl Default for BolVocabulary {
    fn default() -> Self {
        Self::standard()
    }
}

/// A two-half kāyadā composition.
///
/// `khali`, when present, has the same length as `bhari`. `cyclic` marks the
/// form as wrapping (the final bōl leads back to the first), which matters
/// for transition counting. `group_width` only affects rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub bhari: Vec<Bol>,
    pub khali: Option<Vec<Bol>>,
    pub cyclic: bool,
    pub group_width: usize,
}

impl Composition {
    pub fn new(bhari: Vec<Bol>, cyclic: bool) -> Self {
        Self {
            bhari,
            khali: None,
            cyclic,
            group_width: 2,
        }
    }

    pub fn with_khali(mut self, khali: Vec<Bol>) -> Self {
        self.khali = Some(khali);
        self
    }

    /// Every distinct bōl appearing in either half.
    pub fn vocabulary(&self) -> BTreeSet<Bol> {
        let mut set: BTreeSet<Bol> = self.bhari.iter().copied().collect();
        if let Some(khali) = &self.khali {
            set.extend(khali.iter().copied());
        }
        set
    }

    /// Grouped text, one line per half.
    pub fn render(&self) -> String {
        let mut s = render_half(&self.bhari, self.group_width);
        if let Some(khali) = &self.khali {
            s.push('\n');
            s.push_str(&render_half(khali, self.group_width));
        }
        s
    }
}

/// Join bōls into groups of `group_width` without internal spaces, groups
/// separated by single spaces. The final group may be underfull.
pub fn render_half(bols: &[Bol], group_width: usize) -> String {
    let width = group_width.max(1);
    bols.chunks(width)
        .map(|group| group.iter().map(|b| b.name()).collect::<String>())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Complete a bharī half into its khālī: the first half is complement-mapped
/// (bōls without complements are unchanged), the second half keeps its open
/// strokes, and the trailing full verb is swapped for its khālī form.
///
/// The sequence must be even in length, at least 8 bōls, and must end with
/// one of the rule set's full verbs.
pub fn derive_khali(bhari: &[Bol], rules: &RuleSet) -> Result<Vec<Bol>, NotationError> {
    if bhari.len() < 8 {
        return Err(NotationError::TooShort(bhari.len()));
    }
    if !bhari.len().is_multiple_of(2) {
        return Err(NotationError::OddLength(bhari.len()));
    }
    let tail = &bhari[bhari.len() - 4..];
    if tail != rules.full_verb_bhari && tail != rules.full_verb_khali {
        return Err(NotationError::MissingVerb);
    }
    Ok(khali_by_rule(bhari))
}

/// The mechanical completion, assuming the trailing four bōls are the verb.
pub(crate) fn khali_by_rule(bhari: &[Bol]) -> Vec<Bol> {
    let half = bhari.len() / 2;
    let verb_at = bhari.len() - 4;
    let mut out: Vec<Bol> = bhari[..half].iter().map(|b| b.partner()).collect();
    out.extend_from_slice(&bhari[half..verb_at]);
    out.extend(bhari[verb_at..].iter().map(|b| b.partner()));
    out
}

/// A parsed theme file: the composition plus any declared rule inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theme {
    pub composition: Composition,
    pub seeds: Option<BTreeSet<Bol>>,
    pub highlighted: Option<Vec<Bol>>,
}

/// Parse the line-oriented `key: value` theme format.
///
/// Recognized keys: `type` (cyclic | acyclic, default cyclic), `bhari`
/// (required), `khali`, `seeds` (whitespace-separated single bōls), and
/// `highlighted`. Blank lines and `#` comments are skipped; unknown or
/// duplicate keys are rejected with their line number.
pub fn parse_theme(text: &str) -> Result<Theme, NotationError> {
    let vocab = BolVocabulary::standard();
    let mut cyclic: Option<bool> = None;
    let mut bhari: Option<Vec<Bol>> = None;
    let mut khali: Option<Vec<Bol>> = None;
    let mut seeds: Option<BTreeSet<Bol>> = None;
    let mut highlighted: Option<Vec<Bol>> = None;

    let fail = |line: usize, message: String| NotationError::ThemeFile { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| fail(line_no, format!("expected `key: value`, got {line:?}")))?;
        let key = key.trim();
        let value = value.trim();
        let tokenize = |v: &str| {
            vocab
                .tokenize(v)
                .map_err(|e| fail(line_no, format!("{key}: {e}")))
        };
        match key {
            "type" => {
                if cyclic.is_some() {
                    return Err(fail(line_no, "duplicate key `type`".into()));
                }
                cyclic = Some(match value {
                    "cyclic" => true,
                    "acyclic" => false,
                    other => {
                        return Err(fail(
                            line_no,
                            format!("type must be `cyclic` or `acyclic`, got {other:?}"),
                        ))
                    }
                });
            }
            "bhari" => {
                if bhari.is_some() {
                    return Err(fail(line_no, "duplicate key `bhari`".into()));
                }
                bhari = Some(tokenize(value)?);
            }
            "khali" => {
                if khali.is_some() {
                    return Err(fail(line_no, "duplicate key `khali`".into()));
                }
                khali = Some(tokenize(value)?);
            }
            "seeds" => {
                if seeds.is_some() {
                    return Err(fail(line_no, "duplicate key `seeds`".into()));
                }
                let mut set = BTreeSet::new();
                for word in value.split_whitespace() {
                    let bols = tokenize(word)?;
                    if bols.len() != 1 {
                        return Err(fail(
                            line_no,
                            format!("seed {word:?} is not a single bōl"),
                        ));
                    }
                    set.insert(bols[0]);
                }
                if set.is_empty() {
                    return Err(fail(line_no, "seeds list is empty".into()));
                }
                seeds = Some(set);
            }
            "highlighted" => {
                if highlighted.is_some() {
                    return Err(fail(line_no, "duplicate key `highlighted`".into()));
                }
                highlighted = Some(tokenize(value)?);
            }
            other => {
                return Err(fail(line_no, format!("unknown key {other:?}")));
            }
        }
    }

    let bhari = bhari.ok_or_else(|| fail(text.lines().count().max(1), "missing required key `bhari`".into()))?;
    if let Some(k) = &khali {
        if k.len() != bhari.len() {
            return Err(fail(
                1,
                format!(
                    "khali length {} does not match bhari length {}",
                    k.len(),
                    bhari.len()
                ),
            ));
        }
    }

    let mut composition = Composition::new(bhari, cyclic.unwrap_or(true));
    composition.khali = khali;
    Ok(Theme {
        composition,
        seeds,
        highlighted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::extract_ruleset;

    pub(crate) const THEME_BHARI: &str = "DhaTi TDha TiT DhaDha TiT DhaGa TinNa KiNa";
    pub(crate) const THEME_KHALI: &str = "TaTi TTa TiT TaTa TiT DhaGa DhinNa GiNa";

    fn vocab() -> BolVocabulary {
        BolVocabulary::standard()
    }

    fn theme() -> Composition {
        let v = vocab();
        Composition::new(v.tokenize(THEME_BHARI).unwrap(), true)
            .with_khali(v.tokenize(THEME_KHALI).unwrap())
    }

    fn theme_rules() -> RuleSet {
        extract_ruleset(&theme(), None, None).unwrap()
    }

    #[test]
    fn tokenize_theme_bhari() {
        use Bol::*;
        let got = vocab().tokenize(THEME_BHARI).unwrap();
        assert_eq!(
            got,
            vec![Dha, Ti, T, Dha, Ti, T, Dha, Dha, Ti, T, Dha, Ga, Tin, Na, Ki, Na]
        );
    }

    #[test]
    fn tokenize_normalizes_dhin_alias() {
        assert_eq!(vocab().tokenize("DhinNa").unwrap(), vec![Bol::Dhi, Bol::Na]);
    }

    #[test]
    fn tokenize_empty_input() {
        assert_eq!(vocab().tokenize("").unwrap(), Vec::<Bol>::new());
    }

    #[test]
    fn tokenize_rejects_unknown_prefix() {
        let err = vocab().tokenize("XyzNa").unwrap_err();
        assert!(matches!(err, NotationError::UnknownSyllable { offset: 0, .. }));
        let err = vocab().tokenize("DhaXyz").unwrap_err();
        assert!(matches!(err, NotationError::UnknownSyllable { offset: 3, .. }));
    }

    #[test]
    fn render_theme_bhari_round_trips() {
        let c = theme();
        assert_eq!(render_half(&c.bhari, 2), THEME_BHARI);
        assert_eq!(vocab().tokenize(&render_half(&c.bhari, 2)).unwrap(), c.bhari);
    }

    #[test]
    fn render_underfull_final_group() {
        assert_eq!(render_half(&[Bol::Dha], 2), "Dha");
        assert_eq!(render_half(&[Bol::Dha, Bol::Ti, Bol::T], 2), "DhaTi T");
    }

    #[test]
    fn render_both_halves() {
        let text = theme().render();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(THEME_BHARI));
        // The khālī is stored canonically, so "Dhin" renders as "Dhi".
        assert_eq!(
            lines.next(),
            Some("TaTi TTa TiT TaTa TiT DhaGa DhiNa GiNa")
        );
    }

    #[test]
    fn complement_is_an_involution() {
        for b in Bol::ALL {
            assert_eq!(b.partner().partner(), b);
            if let Some(c) = b.complement() {
                assert_eq!(c.complement(), Some(b));
            }
        }
    }

    #[test]
    fn derive_khali_reproduces_theme_khali() {
        use Bol::*;
        let c = theme();
        let got = derive_khali(&c.bhari, &theme_rules()).unwrap();
        assert_eq!(
            got,
            vec![Ta, Ti, T, Ta, Ti, T, Ta, Ta, Ti, T, Dha, Ga, Dhi, Na, Gi, Na]
        );
        assert_eq!(Some(got), c.khali);
    }

    #[test]
    fn derive_khali_on_handwritten_variation() {
        use Bol::*;
        let bhari = vocab()
            .tokenize("DhaTi TDha DhaTi TDha TiT DhaGa TinNa KiNa")
            .unwrap();
        let got = derive_khali(&bhari, &theme_rules()).unwrap();
        assert_eq!(
            got,
            vec![Ta, Ti, T, Ta, Ta, Ti, T, Ta, Ti, T, Dha, Ga, Dhi, Na, Gi, Na]
        );
    }

    #[test]
    fn derive_khali_keeps_uncomplemented_first_half() {
        use Bol::*;
        let bhari = vec![Ti, T, Ti, T, Ti, T, Tin, Na, Ki, Na];
        let rules = extract_ruleset(&Composition::new(bhari.clone(), true), None, None).unwrap();
        let got = derive_khali(&bhari, &rules).unwrap();
        assert_eq!(&got[..5], &bhari[..5]);
        assert_eq!(&got[6..], &[Dhi, Na, Gi, Na]);
    }

    #[test]
    fn derive_khali_requires_trailing_verb() {
        use Bol::*;
        let bhari = vec![Dha, Ti, T, Dha, Ti, T, Dha, Ga];
        assert_eq!(
            derive_khali(&bhari, &theme_rules()),
            Err(NotationError::MissingVerb)
        );
    }

    #[test]
    fn derive_khali_length_checks() {
        use Bol::*;
        assert_eq!(
            derive_khali(&[Dha, Ti, T, Dha], &theme_rules()),
            Err(NotationError::TooShort(4))
        );
        let odd = vec![Dha, Ti, T, Dha, Ti, Tin, Na, Ki, Na];
        assert_eq!(
            derive_khali(&odd, &theme_rules()),
            Err(NotationError::OddLength(9))
        );
    }

    #[test]
    fn parse_theme_full_fixture() {
        let text = format!(
            "type: cyclic\nbhari: {THEME_BHARI}\nkhali: {THEME_KHALI}\nseeds: Dha Ti\nhighlighted: DhaTiT\n"
        );
        let theme_file = parse_theme(&text).unwrap();
        assert!(theme_file.composition.cyclic);
        assert_eq!(theme_file.composition.bhari.len(), 16);
        assert_eq!(theme_file.composition.khali.as_ref().unwrap().len(), 16);
        assert_eq!(
            theme_file.seeds,
            Some([Bol::Dha, Bol::Ti].into_iter().collect())
        );
        assert_eq!(
            theme_file.highlighted,
            Some(vec![Bol::Dha, Bol::Ti, Bol::T])
        );
    }

    #[test]
    fn parse_theme_defaults_and_errors() {
        let minimal = parse_theme(&format!("bhari: {THEME_BHARI}\n")).unwrap();
        assert!(minimal.composition.cyclic);
        assert!(minimal.composition.khali.is_none());
        assert!(minimal.seeds.is_none());

        assert!(matches!(
            parse_theme("bogus: 1\n"),
            Err(NotationError::ThemeFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_theme(""),
            Err(NotationError::ThemeFile { .. })
        ));
        assert!(matches!(
            parse_theme(&format!("bhari: {THEME_BHARI}\nbhari: Dha\n")),
            Err(NotationError::ThemeFile { line: 2, .. })
        ));
        assert!(matches!(
            parse_theme(&format!("bhari: {THEME_BHARI}\nkhali: TaTi\n")),
            Err(NotationError::ThemeFile { .. })
        ));
    }

    #[test]
    fn theme_vocabulary_spans_both_halves() {
        let vocab_set = theme().vocabulary();
        assert_eq!(vocab_set.len(), 10);
    }
}
