//! English verb lemmatization and conjugation.
//!
//! Irregular forms come from a three-column table (`data/irregular_verbs.tsv`);
//! everything else goes through suffix rules. A list of regular verbs ending
//! in a silent "e" (`data/e_final_verbs.txt`) settles the ambiguous cases when
//! stripping suffixes.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const BUNDLED_IRREGULARS: &str = include_str!("../data/irregular_verbs.tsv");
const BUNDLED_E_FINAL: &str = include_str!("../data/e_final_verbs.txt");

const MODALS: &[&str] = &[
    "will", "would", "shall", "should", "can", "could", "may", "might", "must", "ought",
];

/// Multi-syllable verbs that double their final consonant (stress on the
/// last syllable).
const DOUBLING: &[&str] = &[
    "admit", "commit", "submit", "permit", "omit", "emit", "transmit", "regret", "prefer", "refer",
    "confer", "defer", "infer", "deter", "occur", "recur", "incur", "concur", "control", "patrol",
    "compel", "expel", "propel", "repel", "dispel", "excel", "equip", "acquit", "rebut", "abet",
    "allot", "embed", "forget", "begin", "beget", "upset", "outwit", "forbid", "beset", "outrun",
    "overrun", "rerun", "outbid", "input", "offset", "reset", "undercut", "quiz", "whiz",
];

/// Bases that themselves end in a doubled consonant.
const DOUBLE_FINAL_BASES: &[&str] = &["add", "err", "purr", "egg", "butt", "putt", "odd", "ebb"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VerbForm {
    Base,
    Past,
    PastParticiple,
    Gerund,
    Present3sg,
}

impl VerbForm {
    pub const ALL: [VerbForm; 5] = [
        VerbForm::Base,
        VerbForm::Past,
        VerbForm::PastParticiple,
        VerbForm::Gerund,
        VerbForm::Present3sg,
    ];

    /// The Penn tag a token in this form would carry.
    pub fn tag(self) -> &'static str {
        match self {
            VerbForm::Base => "VB",
            VerbForm::Past => "VBD",
            VerbForm::PastParticiple => "VBN",
            VerbForm::Gerund => "VBG",
            VerbForm::Present3sg => "VBZ",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VerbForm::Base => "base",
            VerbForm::Past => "past",
            VerbForm::PastParticiple => "participle",
            VerbForm::Gerund => "gerund",
            VerbForm::Present3sg => "3sg",
        }
    }
}

impl fmt::Display for VerbForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown verb form {0:?} (expected base, past, participle, gerund or 3sg)")]
pub struct UnknownForm(pub String);

impl FromStr for VerbForm {
    type Err = UnknownForm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_', ' '], "").as_str() {
            "base" | "vb" | "infinitive" => Ok(VerbForm::Base),
            "past" | "vbd" | "preterite" => Ok(VerbForm::Past),
            "participle" | "pastparticiple" | "pp" | "vbn" => Ok(VerbForm::PastParticiple),
            "gerund" | "ing" | "vbg" | "presentparticiple" => Ok(VerbForm::Gerund),
            "3sg" | "present3sg" | "vbz" | "thirdperson" => Ok(VerbForm::Present3sg),
            _ => Err(UnknownForm(s.to_string())),
        }
    }
}

/// One irregular verb. `past` and `past_participle` may hold alternates
/// separated by `|`; the first alternate is the one produced by
/// [`Morphology::conjugate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrregularEntry {
    pub base: String,
    pub past: String,
    pub past_participle: String,
}

impl IrregularEntry {
    fn first(field: &str) -> &str {
        field.split('|').next().unwrap_or(field)
    }

    pub fn past_form(&self) -> &str {
        Self::first(&self.past)
    }

    pub fn participle_form(&self) -> &str {
        Self::first(&self.past_participle)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("irregular table line {line}: expected 3 tab-separated columns, found {found}")]
    Columns { line: usize, found: usize },
    #[error("irregular table line {line}: empty or non-lowercase field {field:?}")]
    Field { line: usize, field: String },
    #[error("irregular table line {line}: duplicate base {base:?}")]
    Duplicate { line: usize, base: String },
}

#[derive(Debug, Clone)]
pub struct Morphology {
    entries: Vec<IrregularEntry>,
    by_base: HashMap<String, usize>,
    by_past: HashMap<String, usize>,
    by_participle: HashMap<String, usize>,
    e_final: HashSet<String>,
}

static BUNDLED: LazyLock<Morphology> = LazyLock::new(|| {
    Morphology::from_tsv(BUNDLED_IRREGULARS).expect("bundled irregular table is well-formed")
});

impl Morphology {
    /// The bundled tables, loaded once.
    pub fn bundled() -> &'static Morphology {
        &BUNDLED
    }

    pub fn bundled_table_source() -> &'static str {
        BUNDLED_IRREGULARS
    }

    /// Build from an irregular table in TSV form; the bundled silent-e list
    /// is always used.
    pub fn from_tsv(table: &str) -> Result<Morphology, TableError> {
        let mut entries: Vec<IrregularEntry> = Vec::new();
        let mut by_base = HashMap::new();
        for (i, raw) in table.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = t.split('\t').map(str::trim).collect();
            if cols.len() != 3 {
                return Err(TableError::Columns {
                    line,
                    found: cols.len(),
                });
            }
            for c in &cols {
                let bad = c.is_empty()
                    || c.split('|').any(|alt| alt.is_empty())
                    || c.chars().any(|ch| ch.is_uppercase() || ch.is_whitespace());
                if bad {
                    return Err(TableError::Field {
                        line,
                        field: c.to_string(),
                    });
                }
            }
            if by_base.insert(cols[0].to_string(), entries.len()).is_some() {
                return Err(TableError::Duplicate {
                    line,
                    base: cols[0].to_string(),
                });
            }
            entries.push(IrregularEntry {
                base: cols[0].to_string(),
                past: cols[1].to_string(),
                past_participle: cols[2].to_string(),
            });
        }
        let mut by_past = HashMap::new();
        let mut by_participle = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            for alt in e.past.split('|') {
                by_past.entry(alt.to_string()).or_insert(i);
            }
            for alt in e.past_participle.split('|') {
                by_participle.entry(alt.to_string()).or_insert(i);
            }
        }
        let e_final = BUNDLED_E_FINAL
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect();
        Ok(Morphology {
            entries,
            by_base,
            by_past,
            by_participle,
            e_final,
        })
    }

    pub fn irregulars(&self) -> &[IrregularEntry] {
        &self.entries
    }

    pub fn irregular(&self, base: &str) -> Option<&IrregularEntry> {
        self.by_base.get(base).map(|&i| &self.entries[i])
    }

    /// Whether `word` is listed as the past form of an irregular verb.
    pub fn is_irregular_past(&self, word: &str) -> bool {
        self.by_past.contains_key(word)
    }

    fn known(&self, word: &str) -> bool {
        self.by_base.contains_key(word) || self.e_final.contains(word)
    }

    /// Base form of `surface` given its Penn tag. Non-verb tags return the
    /// surface lowercased.
    pub fn lemma(&self, surface: &str, pos: &str) -> String {
        let w = surface.to_lowercase();
        if !pos.starts_with('V') || w.is_empty() {
            return w;
        }
        match pos {
            "VBD" | "VBN" => {
                let (first, second) = if pos == "VBD" {
                    (&self.by_past, &self.by_participle)
                } else {
                    (&self.by_participle, &self.by_past)
                };
                if let Some(&i) = first.get(&w).or_else(|| second.get(&w)) {
                    return self.entries[i].base.clone();
                }
                if w == "'d" {
                    return "have".into();
                }
                self.strip_ed(&w).unwrap_or(w)
            }
            "VBG" => self.strip_ing(&w).unwrap_or(w),
            "VBZ" => self.strip_s(&w),
            _ => match w.as_str() {
                "are" | "am" | "'re" | "'m" => "be".into(),
                "'ve" => "have".into(),
                _ => w,
            },
        }
    }

    fn strip_ed(&self, w: &str) -> Option<String> {
        let s = w.strip_suffix("ed")?;
        if s.len() < 2 {
            return None;
        }
        if let Some(stem) = w.strip_suffix("ied") {
            return Some(if w.len() > 4 {
                format!("{stem}y")
            } else {
                w[..w.len() - 1].to_string()
            });
        }
        if s.ends_with('e') {
            return Some(w[..w.len() - 1].to_string());
        }
        Some(self.resolve_stem(s))
    }

    fn strip_ing(&self, w: &str) -> Option<String> {
        let s = w.strip_suffix("ing")?;
        if s.is_empty() {
            return None;
        }
        if s.len() == 2 && s.ends_with('y') {
            return Some(format!("{}ie", &s[..1]));
        }
        if s.ends_with("ee") || s.ends_with("ye") || s.ends_with("oe") || s == "be" {
            return Some(s.to_string());
        }
        Some(self.resolve_stem(s))
    }

    fn strip_s(&self, w: &str) -> String {
        match w {
            "is" | "'s" => return "be".into(),
            "has" => return "have".into(),
            _ => {}
        }
        let Some(s1) = w.strip_suffix('s') else {
            return w.to_string();
        };
        if s1.is_empty() || s1.ends_with('s') && !w.ends_with("es") {
            return w.to_string();
        }
        if self.known(s1) {
            return s1.to_string();
        }
        if let Some(s2) = w.strip_suffix("es") {
            if self.known(s2) {
                return s2.to_string();
            }
            if let Some(stem) = w.strip_suffix("ies") {
                return if w.len() > 4 {
                    format!("{stem}y")
                } else {
                    s1.to_string()
                };
            }
            let sibilant = ["ss", "sh", "ch", "x", "zz"]
                .iter()
                .any(|e| s2.ends_with(e))
                || (s2.ends_with('o') && s2.len() >= 2 && !is_vowel_at(s2, s2.len() - 2));
            if sibilant {
                if s2.ends_with("zz") || s2.ends_with("ss") {
                    return self.resolve_stem(s2);
                }
                return s2.to_string();
            }
            if s2.ends_with('s') || s2.ends_with('z') {
                return if needs_e(s2) {
                    s1.to_string()
                } else {
                    s2.to_string()
                };
            }
        }
        s1.to_string()
    }

    /// Turn a suffix-stripped stem back into a base form.
    fn resolve_stem(&self, s: &str) -> String {
        let with_e = format!("{s}e");
        if self.known(&with_e) {
            return with_e;
        }
        if self.known(s) {
            return s.to_string();
        }
        let b = s.as_bytes();
        let n = b.len();
        if n >= 3 && b[n - 1] == b[n - 2] && !is_vowel_at(s, n - 1) {
            let undoubled = &s[..n - 1];
            if self.known(undoubled) {
                return undoubled.to_string();
            }
            if DOUBLE_FINAL_BASES.contains(&s) {
                return s.to_string();
            }
            let keep = matches!(&s[n - 2..], "ll" | "ss" | "ff" | "zz");
            if !keep || DOUBLING.contains(&undoubled) {
                return undoubled.to_string();
            }
            return s.to_string();
        }
        if needs_e(s) {
            return with_e;
        }
        s.to_string()
    }

    /// Inflect a base form. Modals come back unchanged.
    pub fn conjugate(&self, base: &str, form: VerbForm) -> String {
        let b = base.to_lowercase();
        if b.is_empty() || MODALS.contains(&b.as_str()) {
            return b;
        }
        match form {
            VerbForm::Base => b,
            VerbForm::Past => match self.irregular(&b) {
                Some(e) => e.past_form().to_string(),
                None => regular_past(&b),
            },
            VerbForm::PastParticiple => match self.irregular(&b) {
                Some(e) => e.participle_form().to_string(),
                None => regular_past(&b),
            },
            VerbForm::Gerund => gerund(&b),
            VerbForm::Present3sg => third_singular(&b),
        }
    }
}

fn is_vowel_at(w: &str, i: usize) -> bool {
    let b = w.as_bytes();
    match b[i] {
        b'a' | b'e' | b'i' | b'o' => true,
        b'u' => !(i > 0 && b[i - 1] == b'q'),
        b'y' => i > 0 && !is_vowel_at(w, i - 1),
        _ => false,
    }
}

fn vowel_groups(w: &str) -> usize {
    let mut groups = 0;
    let mut prev = false;
    for i in 0..w.len() {
        let v = is_vowel_at(w, i);
        if v && !prev {
            groups += 1;
        }
        prev = v;
    }
    groups
}

/// Ends consonant, single vowel, consonant (final not w/x/y).
fn ends_cvc(w: &str) -> bool {
    let b = w.as_bytes();
    let n = b.len();
    n >= 3
        && b.is_ascii()
        && !is_vowel_at(w, n - 1)
        && !matches!(b[n - 1], b'w' | b'x' | b'y')
        && is_vowel_at(w, n - 2)
        && !is_vowel_at(w, n - 3)
}

fn monosyllabic_cvc(w: &str) -> bool {
    ends_cvc(w) && vowel_groups(w) == 1
}

fn doubles(b: &str) -> bool {
    DOUBLING.contains(&b) || monosyllabic_cvc(b)
}

fn ends_consonant_y(b: &str) -> bool {
    b.len() >= 2 && b.ends_with('y') && !is_vowel_at(b, b.len() - 2)
}

fn regular_past(b: &str) -> String {
    if b.ends_with('e') {
        format!("{b}d")
    } else if ends_consonant_y(b) {
        format!("{}ied", &b[..b.len() - 1])
    } else if doubles(b) {
        format!("{b}{}ed", &b[b.len() - 1..])
    } else {
        format!("{b}ed")
    }
}

fn gerund(b: &str) -> String {
    if let Some(stem) = b.strip_suffix("ie") {
        return format!("{stem}ying");
    }
    if b.ends_with("ee") || b.ends_with("ye") || b.ends_with("oe") || b.len() <= 2 {
        return format!("{b}ing");
    }
    if let Some(stem) = b.strip_suffix('e') {
        return format!("{stem}ing");
    }
    if doubles(b) {
        return format!("{b}{}ing", &b[b.len() - 1..]);
    }
    format!("{b}ing")
}

fn third_singular(b: &str) -> String {
    match b {
        "be" => return "is".into(),
        "have" => return "has".into(),
        _ => {}
    }
    if ends_consonant_y(b) {
        return format!("{}ies", &b[..b.len() - 1]);
    }
    let sibilant = ["s", "x", "z", "ch", "sh"].iter().any(|e| b.ends_with(e))
        || (b.ends_with('o') && b.len() >= 2 && !is_vowel_at(b, b.len() - 2));
    if sibilant && (b.ends_with('s') || b.ends_with('z')) && doubles(b) {
        format!("{b}{}es", &b[b.len() - 1..])
    } else if sibilant {
        format!("{b}es")
    } else {
        format!("{b}s")
    }
}

/// Stem shapes that, with no other evidence, came from a base ending in "e".
fn needs_e(s: &str) -> bool {
    let b = s.as_bytes();
    let n = b.len();
    if n < 2 || !b.is_ascii() {
        return false;
    }
    let last = b[n - 1];
    if matches!(last, b'v' | b'c') || (last == b'u' && !is_vowel_at(s, n - 2)) {
        return true;
    }
    if s.ends_with("rg") || s.ends_with("dg") {
        return true;
    }
    if last == b'l' && !is_vowel_at(s, n - 2) && !matches!(b[n - 2], b'l' | b'r' | b'w') {
        return true;
    }
    let single_vowel = |i: usize| is_vowel_at(s, i) && (i == 0 || !is_vowel_at(s, i - 1));
    if matches!(last, b's' | b'z') && n >= 3 && is_vowel_at(s, n - 2) && is_vowel_at(s, n - 3) {
        return true;
    }
    if last == b'z' && single_vowel(n - 2) {
        return true;
    }
    const ENDINGS: &[&str] = &[
        "is", "ys", "id", "od", "ad", "ud", "ut", "os", "ib", "ob", "ub", "in", "um", "ur", "ir",
    ];
    if n >= 3 && ENDINGS.contains(&&s[n - 2..]) && !is_vowel_at(s, n - 3) {
        return true;
    }
    if last == b'k' && n >= 3 && single_vowel(n - 2) {
        return true;
    }
    monosyllabic_cvc(s)
}

/// [`Morphology::lemma`] on the bundled tables.
pub fn lemma(surface: &str, pos: &str) -> String {
    Morphology::bundled().lemma(surface, pos)
}

/// [`Morphology::conjugate`] on the bundled tables.
pub fn conjugate(base: &str, form: VerbForm) -> String {
    Morphology::bundled().conjugate(base, form)
}

/// Regular verbs used to check the round trip outside the irregular table.
pub const REGULAR_SAMPLE: [&str; 50] = [
    "reject",
    "divide",
    "release",
    "crash",
    "slow",
    "plan",
    "stop",
    "admit",
    "hope",
    "carry",
    "try",
    "play",
    "watch",
    "push",
    "fix",
    "pass",
    "call",
    "visit",
    "open",
    "happen",
    "create",
    "debate",
    "announce",
    "produce",
    "continue",
    "argue",
    "change",
    "judge",
    "handle",
    "struggle",
    "organize",
    "criticise",
    "apologise",
    "accuse",
    "blame",
    "condemn",
    "impeach",
    "destroy",
    "manage",
    "restore",
    "repeat",
    "return",
    "finish",
    "start",
    "arrive",
    "warn",
    "claim",
    "decide",
    "refer",
    "control",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> &'static Morphology {
        Morphology::bundled()
    }

    #[test]
    fn table_is_large_and_covers_example_verbs() {
        assert!(m().irregulars().len() >= 150);
        for v in [
            "say",
            "go",
            "come",
            "take",
            "give",
            "keep",
            "know",
            "be",
            "have",
            "broadcast",
            "meet",
        ] {
            assert!(m().irregular(v).is_some(), "{v}");
        }
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(lemma("rejects", "VBZ"), "reject");
        assert_eq!(lemma("went", "VBD"), "go");
        assert_eq!(lemma("broadcast", "VB"), "broadcast");
        assert_eq!(lemma("Bank", "NNP"), "bank");
        assert_eq!(lemma("were", "VBD"), "be");
        assert_eq!(lemma("stockpiling", "VBG"), "stockpile");
        assert_eq!(lemma("struggling", "VBG"), "struggle");
        assert_eq!(lemma("lied", "VBN"), "lie");
        assert_eq!(lemma("deceived", "VBN"), "deceive");
        assert_eq!(lemma("'s", "VBZ"), "be");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate("reject", VerbForm::Past), "rejected");
        assert_eq!(conjugate("come", VerbForm::Gerund), "coming");
        assert_eq!(
            conjugate("broadcast", VerbForm::PastParticiple),
            "broadcast"
        );
        assert_eq!(conjugate("stop", VerbForm::Past), "stopped");
        assert_eq!(conjugate("stop", VerbForm::Gerund), "stopping");
        assert_eq!(conjugate("carry", VerbForm::Past), "carried");
        assert_eq!(conjugate("watch", VerbForm::Present3sg), "watches");
        assert_eq!(conjugate("go", VerbForm::Present3sg), "goes");
        assert_eq!(conjugate("quiz", VerbForm::Present3sg), "quizzes");
        assert_eq!(lemma("quizzes", "VBZ"), "quiz");
        assert_eq!(lemma("buzzes", "VBZ"), "buzz");
        assert_eq!(lemma("passes", "VBZ"), "pass");
        assert_eq!(conjugate("die", VerbForm::Gerund), "dying");
        assert_eq!(conjugate("slow", VerbForm::Gerund), "slowing");
        assert_eq!(conjugate("will", VerbForm::Past), "will");
        assert_eq!(conjugate("can", VerbForm::Gerund), "can");
    }

    #[test]
    fn quit_counts_qu_as_consonant() {
        assert!(monosyllabic_cvc("quit"));
        assert_eq!(conjugate("quit", VerbForm::Gerund), "quitting");
    }

    #[test]
    fn past_forms_do_not_collide() {
        let mut seen: HashMap<&str, &str> = HashMap::new();
        for e in m().irregulars() {
            if let Some(other) = seen.insert(e.past_form(), &e.base) {
                panic!("{} and {} share past {}", other, e.base, e.past_form());
            }
        }
        let mut seen: HashMap<&str, &str> = HashMap::new();
        for e in m().irregulars() {
            if let Some(other) = seen.insert(e.participle_form(), &e.base) {
                panic!(
                    "{} and {} share participle {}",
                    other,
                    e.base,
                    e.participle_form()
                );
            }
        }
    }

    #[test]
    fn round_trip_over_table_and_sample() {
        let bases = m()
            .irregulars()
            .iter()
            .map(|e| e.base.as_str())
            .chain(REGULAR_SAMPLE);
        let mut failures = Vec::new();
        for b in bases {
            for f in VerbForm::ALL {
                let inflected = conjugate(b, f);
                let back = lemma(&inflected, f.tag());
                if back != b {
                    failures.push(format!("{b} -{f}-> {inflected} -> {back}"));
                }
            }
        }
        assert!(failures.is_empty(), "{failures:#?}");
    }

    #[test]
    fn table_errors() {
        assert_eq!(
            Morphology::from_tsv("go\twent\n").unwrap_err(),
            TableError::Columns { line: 1, found: 2 }
        );
        assert!(matches!(
            Morphology::from_tsv("# c\nGo\twent\tgone\n"),
            Err(TableError::Field { line: 2, .. })
        ));
        assert!(matches!(
            Morphology::from_tsv("go\twent\tgone\ngo\twent\tgone"),
            Err(TableError::Duplicate { line: 2, .. })
        ));
    }

    #[test]
    fn form_names_parse() {
        for f in VerbForm::ALL {
            assert_eq!(f.name().parse::<VerbForm>().unwrap(), f);
        }
        assert!("pluperfect".parse::<VerbForm>().is_err());
    }
}
