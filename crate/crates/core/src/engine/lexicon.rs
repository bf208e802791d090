use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::morphology::Morphology;

const BUNDLED_LEXICON: &str = include_str!("../../data/lexicon.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexClass {
    Iterative,
    ChangeOfState,
    Factive,
    Implicative,
    Judging,
    Temporal,
}

impl LexClass {
    pub const ALL: [LexClass; 6] = [
        LexClass::Iterative,
        LexClass::ChangeOfState,
        LexClass::Factive,
        LexClass::Implicative,
        LexClass::Judging,
        LexClass::Temporal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LexClass::Iterative => "iterative",
            LexClass::ChangeOfState => "change_of_state",
            LexClass::Factive => "factive",
            LexClass::Implicative => "implicative",
            LexClass::Judging => "judging",
            LexClass::Temporal => "temporal",
        }
    }
}

impl fmt::Display for LexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LexClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LexClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("lexicon line {line}: expected \"class<TAB>entry\"")]
    Columns { line: usize },
    #[error("lexicon line {line}: unknown class {class:?}")]
    UnknownClass { line: usize, class: String },
}

/// One lexicon entry. `keys` holds the base form of each word, used for
/// matching against token lemmas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub text: String,
    pub words: Vec<String>,
    pub keys: Vec<String>,
}

impl LexEntry {
    fn new(text: &str, morph: &Morphology) -> LexEntry {
        let words: Vec<String> = text.split_whitespace().map(str::to_lowercase).collect();
        let keys = words.iter().map(|w| base_form(w, morph)).collect();
        LexEntry {
            text: words.join(" "),
            words,
            keys,
        }
    }
}

/// Entries are listed in whatever inflection the source list used
/// ("stopped", "regrets"); reduce them to a base form.
fn base_form(word: &str, morph: &Morphology) -> String {
    if word.ends_with("ed") || morph.is_irregular_past(word) {
        morph.lemma(word, "VBD")
    } else if word.len() > 3 && word.ends_with('s') && !word.ends_with("ss") {
        morph.lemma(word, "VBZ")
    } else {
        word.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriggerLexicon {
    classes: BTreeMap<LexClass, Vec<LexEntry>>,
}

static BUNDLED: LazyLock<TriggerLexicon> = LazyLock::new(|| {
    TriggerLexicon::from_tsv(BUNDLED_LEXICON).expect("bundled lexicon is well-formed")
});

impl TriggerLexicon {
    pub fn bundled() -> &'static TriggerLexicon {
        &BUNDLED
    }

    pub fn bundled_source() -> &'static str {
        BUNDLED_LEXICON
    }

    pub fn from_tsv(text: &str) -> Result<TriggerLexicon, LexiconError> {
        let morph = Morphology::bundled();
        let mut classes: BTreeMap<LexClass, Vec<LexEntry>> =
            LexClass::ALL.into_iter().map(|c| (c, Vec::new())).collect();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let Some((class, entry)) = t.split_once('\t') else {
                return Err(LexiconError::Columns { line });
            };
            let entry = entry.trim();
            if entry.is_empty() {
                return Err(LexiconError::Columns { line });
            }
            let class: LexClass = class
                .trim()
                .parse()
                .map_err(|class| LexiconError::UnknownClass { line, class })?;
            let entry = LexEntry::new(entry, morph);
            let list = classes.get_mut(&class).expect("all classes present");
            if !list.contains(&entry) {
                list.push(entry);
            }
        }
        Ok(TriggerLexicon { classes })
    }

    pub fn entries(&self, class: LexClass) -> &[LexEntry] {
        self.classes.get(&class).map_or(&[], Vec::as_slice)
    }

    /// Whether a single word is listed in `class`, by surface or base form.
    pub fn contains_word(&self, class: LexClass, word: &str) -> bool {
        let w = word.to_lowercase();
        self.entries(class)
            .iter()
            .any(|e| e.words.len() == 1 && (e.words[0] == w || e.keys[0] == w))
    }
}
