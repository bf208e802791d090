//! Trigger detection and inference realization.
//!
//! Each rule looks for one trigger pattern in the dependency tree and fills a
//! fixed template. [`infer_all`] runs the enabled rules in registration order
//! and drops case-insensitive duplicate texts.

mod context;
mod discourse;
mod lexical;
pub mod lexicon;
mod structural;
mod triples;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::PreprocessedHeadline;
use crate::morphology::Morphology;
use crate::parse::{ParsedHeadline, VerbPattern};

pub use lexicon::{LexClass, LexEntry, LexiconError, TriggerLexicon};

use context::Ctx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InferenceKind {
    #[serde(rename = ">>")]
    Presupposition,
    #[serde(rename = "~=")]
    ConventionalImplicature,
    #[serde(rename = "triple")]
    ExplicitTriple,
}

impl InferenceKind {
    pub fn symbol(self) -> &'static str {
        match self {
            InferenceKind::Presupposition => ">>",
            InferenceKind::ConventionalImplicature => "~=",
            InferenceKind::ExplicitTriple => "triple",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inference {
    pub kind: InferenceKind,
    pub text: String,
    pub trigger: String,
    /// Sorted token indices that licensed the inference.
    pub span: Vec<usize>,
}

impl Inference {
    pub(crate) fn new(
        kind: InferenceKind,
        text: impl AsRef<str>,
        rule: RuleId,
        span: Vec<usize>,
    ) -> Inference {
        let mut span: Vec<usize> = span.into_iter().filter(|&i| i > 0).collect();
        span.sort_unstable();
        span.dedup();
        Inference {
            kind,
            text: text
                .as_ref()
                .split_whitespace()
                .collect::<Vec<_>>()
                .join(" "),
            trigger: rule.as_str().to_string(),
            span,
        }
    }
}

/// Rule ids, declared in registration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Triple,
    Future,
    But,
    Again,
    Further,
    Compound,
    Past,
    NmodOf,
    LexicalIterative,
    LexicalChangeOfState,
    LexicalFactive,
    LexicalImplicative,
    LexicalJudging,
    Temporal,
    Question,
    Quotes,
}

impl RuleId {
    pub const ALL: [RuleId; 16] = [
        RuleId::Triple,
        RuleId::Future,
        RuleId::But,
        RuleId::Again,
        RuleId::Further,
        RuleId::Compound,
        RuleId::Past,
        RuleId::NmodOf,
        RuleId::LexicalIterative,
        RuleId::LexicalChangeOfState,
        RuleId::LexicalFactive,
        RuleId::LexicalImplicative,
        RuleId::LexicalJudging,
        RuleId::Temporal,
        RuleId::Question,
        RuleId::Quotes,
    ];

    pub const LEXICAL: [RuleId; 5] = [
        RuleId::LexicalIterative,
        RuleId::LexicalChangeOfState,
        RuleId::LexicalFactive,
        RuleId::LexicalImplicative,
        RuleId::LexicalJudging,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Triple => "triple",
            RuleId::Future => "future",
            RuleId::But => "but",
            RuleId::Again => "again",
            RuleId::Further => "further",
            RuleId::Compound => "compound",
            RuleId::Past => "past",
            RuleId::NmodOf => "nmod_of",
            RuleId::LexicalIterative => "lexical.iterative",
            RuleId::LexicalChangeOfState => "lexical.change_of_state",
            RuleId::LexicalFactive => "lexical.factive",
            RuleId::LexicalImplicative => "lexical.implicative",
            RuleId::LexicalJudging => "lexical.judging",
            RuleId::Temporal => "temporal",
            RuleId::Question => "question",
            RuleId::Quotes => "quotes",
        }
    }

    fn run(self, cx: &Ctx<'_>) -> Vec<Inference> {
        match self {
            RuleId::Triple => triples::extract_triplets(cx),
            RuleId::Future => structural::future(cx),
            RuleId::But => structural::but(cx),
            RuleId::Again => structural::again(cx),
            RuleId::Further => structural::further(cx),
            RuleId::Compound => structural::noun_compound(cx),
            RuleId::Past => structural::past_tense(cx),
            RuleId::NmodOf => structural::nmod_of(cx),
            RuleId::LexicalIterative => lexical::iterative(cx),
            RuleId::LexicalChangeOfState => lexical::change_of_state(cx),
            RuleId::LexicalFactive => lexical::factive(cx),
            RuleId::LexicalImplicative => lexical::implicative(cx),
            RuleId::LexicalJudging => lexical::judging(cx),
            RuleId::Temporal => lexical::temporal(cx),
            RuleId::Question => discourse::question(cx),
            RuleId::Quotes => discourse::quotes(cx),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| ConfigError::UnknownRule(s.to_string()))
    }
}

/// Parse a comma-separated rule list. `all` enables everything, `lexical`
/// every lexical class, and `none` (or an empty list) nothing.
pub fn parse_rule_list(list: &str) -> Result<BTreeSet<RuleId>, ConfigError> {
    let mut out = BTreeSet::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "all" => out.extend(RuleId::ALL),
            "lexical" => out.extend(RuleId::LEXICAL),
            "none" => {}
            other => {
                out.insert(other.parse()?);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum CompoundRendering {
    #[default]
    BeOrHave,
    Have,
    Be,
}

impl CompoundRendering {
    pub fn phrase(self) -> &'static str {
        match self {
            CompoundRendering::BeOrHave => "can be/can have",
            CompoundRendering::Have => "can have",
            CompoundRendering::Be => "can be",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CompoundRendering::BeOrHave => "be-or-have",
            CompoundRendering::Have => "have",
            CompoundRendering::Be => "be",
        }
    }
}

impl FromStr for CompoundRendering {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "be-or-have" | "be_or_have" | "both" | "can be/can have" => {
                Ok(CompoundRendering::BeOrHave)
            }
            "have" | "can have" => Ok(CompoundRendering::Have),
            "be" | "can be" => Ok(CompoundRendering::Be),
            other => Err(ConfigError::BadValue {
                key: "compound_rendering".into(),
                value: other.into(),
            }),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown rule id {0:?}")]
    UnknownRule(String),
    #[error("config line {line}: expected key = value")]
    Syntax { line: usize },
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("bad value {value:?} for {key}")]
    BadValue { key: String, value: String },
}

/// Everything the rules read besides the headline itself.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub rules: BTreeSet<RuleId>,
    pub lexicon: Arc<TriggerLexicon>,
    pub morphology: Arc<Morphology>,
    pub verb_pattern: VerbPattern,
    pub compound_rendering: CompoundRendering,
    /// Also read "dependent has governor" off nmod edges between nouns that
    /// carry no "of".
    pub relaxed_nmod: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            rules: RuleId::ALL.into_iter().collect(),
            lexicon: Arc::new(TriggerLexicon::bundled().clone()),
            morphology: Arc::new(Morphology::bundled().clone()),
            verb_pattern: VerbPattern::default(),
            compound_rendering: CompoundRendering::default(),
            relaxed_nmod: false,
        }
    }
}

impl EngineConfig {
    pub fn with_rules(mut self, rules: impl IntoIterator<Item = RuleId>) -> Self {
        self.rules = rules.into_iter().collect();
        self
    }

    pub fn with_relaxed_nmod(mut self, on: bool) -> Self {
        self.relaxed_nmod = on;
        self
    }

    pub fn enabled(&self, rule: RuleId) -> bool {
        self.rules.contains(&rule)
    }

    pub fn rule_list(&self) -> String {
        self.rules
            .iter()
            .map(|r| r.as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Contents of a `key = value` config file. File-valued keys are kept as
/// strings; loading them is up to the caller.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub rules: Option<BTreeSet<RuleId>>,
    pub verb_pattern: Option<VerbPattern>,
    pub compound_rendering: Option<CompoundRendering>,
    pub relaxed_nmod: Option<bool>,
    pub lexicon: Option<String>,
    pub irregular_verbs: Option<String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<ConfigFile, ConfigError> {
        let mut out = ConfigFile::default();
        for (i, raw) in text.lines().enumerate() {
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let (key, value) = t
                .split_once('=')
                .ok_or(ConfigError::Syntax { line: i + 1 })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || ConfigError::BadValue {
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "rules" => out.rules = Some(parse_rule_list(value)?),
                "verb_pattern" => out.verb_pattern = Some(value.parse().map_err(|_| bad())?),
                "compound_rendering" => out.compound_rendering = Some(value.parse()?),
                "relaxed_nmod" => out.relaxed_nmod = Some(value.parse().map_err(|_| bad())?),
                "lexicon" => out.lexicon = Some(value.to_string()),
                "irregular_verbs" => out.irregular_verbs = Some(value.to_string()),
                other => return Err(ConfigError::UnknownKey(other.to_string())),
            }
        }
        Ok(out)
    }

    /// Apply the non-file settings on top of `cfg`.
    pub fn apply(&self, cfg: &mut EngineConfig) {
        if let Some(r) = &self.rules {
            cfg.rules = r.clone();
        }
        if let Some(v) = self.verb_pattern {
            cfg.verb_pattern = v;
        }
        if let Some(c) = self.compound_rendering {
            cfg.compound_rendering = c;
        }
        if let Some(r) = self.relaxed_nmod {
            cfg.relaxed_nmod = r;
        }
    }
}

/// All enabled rules' outputs, in registration order, without removing
/// duplicates.
pub fn infer_raw(
    h: &ParsedHeadline,
    p: &PreprocessedHeadline,
    cfg: &EngineConfig,
) -> Vec<Inference> {
    if h.is_empty() {
        return Vec::new();
    }
    let cx = Ctx::new(h, p, cfg);
    let mut out = Vec::new();
    for rule in &cfg.rules {
        let mut found: Vec<Inference> = rule
            .run(&cx)
            .into_iter()
            .filter(|inf| !inf.text.is_empty() && !inf.span.is_empty())
            .collect();
        found.sort_by(|a, b| a.span.cmp(&b.span));
        out.extend(found);
    }
    out
}

/// Run every enabled rule and keep the first of any texts that differ only
/// in case.
pub fn infer_all(
    h: &ParsedHeadline,
    p: &PreprocessedHeadline,
    cfg: &EngineConfig,
) -> Vec<Inference> {
    let mut seen = HashSet::new();
    infer_raw(h, p, cfg)
        .into_iter()
        .filter(|inf| seen.insert(inf.text.to_lowercase()))
        .collect()
}

/// One line of inference output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferenceRecord {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub id: String,
    pub headline: String,
    pub inferences: Vec<Inference>,
}

#[derive(Debug, Error)]
#[error("inference file line {line}: {message}")]
pub struct RecordError {
    pub line: usize,
    pub message: String,
}

/// Read JSON Lines inference output.
pub fn read_records(document: &str) -> Result<Vec<InferenceRecord>, RecordError> {
    document
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| RecordError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Write JSON Lines inference output, one record per line.
pub fn write_records(records: &[InferenceRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}
