//! Dependency-parsed headlines.
//!
//! A [`ParsedHeadline`] bundles the POS-tagged tokens of one headline with its
//! basic dependency tree. Parses are always ingested from files, either
//! CoNLL-U ([`parse_conllu`]) or Stanford CoreNLP style JSON
//! ([`parse_stanford_json`]). Both readers pass the edges through
//! [`normalize_labels`] so the rule engine sees one label vocabulary.

mod conllu;
mod labels;
mod stanford;

use std::collections::BTreeSet;
use std::fmt;

use regex::Regex;
use serde::{Deserialize, Serialize};
use std::sync::LazyLock;
use thiserror::Error;

pub use conllu::parse_conllu;
pub use labels::normalize_labels;
pub use stanford::{parse_stanford_document, parse_stanford_json, to_stanford_json};

/// Gloss used for the virtual root at governor index 0.
pub const ROOT_GLOSS: &str = "ROOT";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IngestError {
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: invalid {field} value {value:?}")]
    BadNumber {
        line: usize,
        field: &'static str,
        value: String,
    },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("missing key {key:?} in {context}")]
    MissingKey { key: String, context: String },
    #[error("key {key:?} in {context} has the wrong type")]
    WrongType { key: String, context: String },
    #[error("inconsistent parse{}: {message}", headline_suffix(.headline))]
    Consistency { headline: String, message: String },
}

fn headline_suffix(headline: &str) -> String {
    if headline.is_empty() {
        String::new()
    } else {
        format!(" for {headline:?}")
    }
}

/// One POS-tagged token. `index` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub index: usize,
    pub surface: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma: Option<String>,
    pub pos: String,
}

impl Token {
    pub fn new(index: usize, surface: impl Into<String>, pos: impl Into<String>) -> Self {
        Token {
            index,
            surface: surface.into(),
            lemma: None,
            pos: pos.into(),
        }
    }
}

/// A binary grammatical relation between a governor and a dependent.
///
/// Field names serialize as the CoreNLP tuple keys (`governorGloss`,
/// `dependentGloss`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DependencyEdge {
    pub dep: String,
    pub governor: usize,
    pub governor_gloss: String,
    pub dependent: usize,
    pub dependent_gloss: String,
}

impl DependencyEdge {
    pub fn new(
        dep: impl Into<String>,
        governor: usize,
        governor_gloss: impl Into<String>,
        dependent: usize,
        dependent_gloss: impl Into<String>,
    ) -> Self {
        DependencyEdge {
            dep: dep.into(),
            governor,
            governor_gloss: governor_gloss.into(),
            dependent,
            dependent_gloss: dependent_gloss.into(),
        }
    }

    pub fn is_root(&self) -> bool {
        self.governor == 0
    }
}

impl fmt::Display for DependencyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}-{}, {}-{})",
            self.dep, self.governor_gloss, self.governor, self.dependent_gloss, self.dependent
        )
    }
}

/// How the verb query matches POS tags.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum VerbPattern {
    /// `V.+`, anchored at both ends.
    Strict,
    /// `V.*`, anchored at both ends.
    #[default]
    Relaxed,
}

impl VerbPattern {
    pub fn as_str(self) -> &'static str {
        match self {
            VerbPattern::Strict => "strict",
            VerbPattern::Relaxed => "relaxed",
        }
    }

    pub fn matches(self, pos: &str) -> bool {
        match self {
            VerbPattern::Strict => STRICT_VERB.is_match(pos),
            VerbPattern::Relaxed => RELAXED_VERB.is_match(pos),
        }
    }
}

impl std::str::FromStr for VerbPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "strict" => Ok(VerbPattern::Strict),
            "relaxed" => Ok(VerbPattern::Relaxed),
            other => Err(format!(
                "unknown verb pattern {other:?} (expected strict or relaxed)"
            )),
        }
    }
}

static STRICT_VERB: LazyLock<Regex> = LazyLock::new(|| Regex::new("^V.+$").unwrap());
static RELAXED_VERB: LazyLock<Regex> = LazyLock::new(|| Regex::new("^V.*$").unwrap());
static NOUN_OR_PRONOUN: LazyLock<Regex> = LazyLock::new(|| Regex::new("^(?:N.+|P.+)$").unwrap());

/// Whether a PTB tag is picked up by the noun/pronoun query.
pub fn is_noun_tag(pos: &str) -> bool {
    NOUN_OR_PRONOUN.is_match(pos)
}

/// Tokens plus dependency tree for one headline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedHeadline {
    pub headline_id: String,
    pub raw_text: String,
    tokens: Vec<Token>,
    edges: Vec<DependencyEdge>,
    /// Inclusive token-index ranges of quoted material.
    pub quoted_spans: Vec<(usize, usize)>,
}

impl ParsedHeadline {
    /// Validates and builds a headline. Tokens are sorted by index; edges are
    /// kept in input order.
    pub fn new(
        headline_id: impl Into<String>,
        raw_text: impl Into<String>,
        mut tokens: Vec<Token>,
        edges: Vec<DependencyEdge>,
    ) -> Result<Self, IngestError> {
        let raw_text = raw_text.into();
        tokens.sort_by_key(|t| t.index);
        let headline = ParsedHeadline {
            headline_id: headline_id.into(),
            raw_text,
            tokens,
            edges,
            quoted_spans: Vec::new(),
        };
        headline.validate()?;
        Ok(headline)
    }

    fn inconsistent(&self, message: String) -> IngestError {
        IngestError::Consistency {
            headline: self.raw_text.clone(),
            message,
        }
    }

    fn validate(&self) -> Result<(), IngestError> {
        let mut seen = BTreeSet::new();
        for tok in &self.tokens {
            if tok.index == 0 {
                return Err(self.inconsistent("token index 0 is reserved for the root".into()));
            }
            if !seen.insert(tok.index) {
                return Err(self.inconsistent(format!("duplicate token index {}", tok.index)));
            }
            if tok.pos.is_empty() {
                return Err(self.inconsistent(format!("token {} has an empty POS tag", tok.index)));
            }
        }
        if self.tokens.is_empty() {
            if self.edges.is_empty() {
                return Ok(());
            }
            return Err(self.inconsistent("edges given for a headline without tokens".into()));
        }

        let mut roots = 0;
        let mut head_of = vec![None; self.max_index() + 1];
        for edge in &self.edges {
            if edge.dependent == edge.governor {
                return Err(self.inconsistent(format!("self-loop on token {}", edge.dependent)));
            }
            if edge.governor == 0 {
                roots += 1;
                if edge.governor_gloss != ROOT_GLOSS {
                    return Err(self.inconsistent(format!(
                        "root edge governorGloss is {:?}, expected {ROOT_GLOSS:?}",
                        edge.governor_gloss
                    )));
                }
            } else {
                let gov = self.token(edge.governor).ok_or_else(|| {
                    self.inconsistent(format!("{edge} references missing governor"))
                })?;
                if gov.surface != edge.governor_gloss {
                    return Err(self.inconsistent(format!(
                        "governorGloss {:?} does not match token {} surface {:?}",
                        edge.governor_gloss, edge.governor, gov.surface
                    )));
                }
            }
            let dep = self
                .token(edge.dependent)
                .ok_or_else(|| self.inconsistent(format!("{edge} references missing dependent")))?;
            if dep.surface != edge.dependent_gloss {
                return Err(self.inconsistent(format!(
                    "dependentGloss {:?} does not match token {} surface {:?}",
                    edge.dependent_gloss, edge.dependent, dep.surface
                )));
            }
            if head_of[edge.dependent].replace(edge.governor).is_some() {
                return Err(self.inconsistent(format!(
                    "token {} is the dependent of more than one edge",
                    edge.dependent
                )));
            }
        }
        if roots != 1 {
            return Err(self.inconsistent(format!("expected exactly one root edge, found {roots}")));
        }
        for tok in &self.tokens {
            if head_of[tok.index].is_none() {
                return Err(self.inconsistent(format!("token {} has no head", tok.index)));
            }
        }
        // Every token must reach the root without revisiting a node.
        for tok in &self.tokens {
            let mut cur = tok.index;
            let mut steps = 0;
            while cur != 0 {
                cur = head_of[cur].unwrap_or(0);
                steps += 1;
                if steps > self.tokens.len() {
                    return Err(self.inconsistent(format!("cycle through token {}", tok.index)));
                }
            }
        }
        Ok(())
    }

    fn max_index(&self) -> usize {
        self.tokens.last().map_or(0, |t| t.index)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn edges(&self) -> &[DependencyEdge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, index: usize) -> Option<&Token> {
        self.tokens
            .binary_search_by_key(&index, |t| t.index)
            .ok()
            .map(|i| &self.tokens[i])
    }

    pub fn surface(&self, index: usize) -> &str {
        self.token(index).map_or("", |t| t.surface.as_str())
    }

    pub fn pos(&self, index: usize) -> &str {
        self.token(index).map_or("", |t| t.pos.as_str())
    }

    pub fn root(&self) -> Option<usize> {
        self.edges.iter().find(|e| e.is_root()).map(|e| e.dependent)
    }

    /// The edge whose dependent is `index`.
    pub fn head_edge(&self, index: usize) -> Option<&DependencyEdge> {
        self.edges.iter().find(|e| e.dependent == index)
    }

    /// Edges governed by `index`, in input order.
    pub fn children(&self, index: usize) -> impl Iterator<Item = &DependencyEdge> {
        self.edges.iter().filter(move |e| e.governor == index)
    }

    pub fn children_with<'a>(
        &'a self,
        index: usize,
        pred: impl Fn(&str) -> bool + 'a,
    ) -> impl Iterator<Item = &'a DependencyEdge> {
        self.children(index).filter(move |e| pred(&e.dep))
    }

    pub fn verbs_of(&self, pattern: VerbPattern) -> Vec<&Token> {
        self.tokens
            .iter()
            .filter(|t| pattern.matches(&t.pos))
            .collect()
    }

    pub fn nouns_of(&self) -> Vec<&Token> {
        self.tokens.iter().filter(|t| is_noun_tag(&t.pos)).collect()
    }

    pub fn is_verb(&self, index: usize, pattern: VerbPattern) -> bool {
        self.token(index).is_some_and(|t| pattern.matches(&t.pos))
    }

    pub fn is_noun(&self, index: usize) -> bool {
        self.token(index).is_some_and(|t| is_noun_tag(&t.pos))
    }

    /// All edges labelled `dep`, optionally filtered by governor and dependent
    /// gloss (case-insensitive).
    pub fn edges_with(
        &self,
        dep: &str,
        governor_gloss: Option<&str>,
        dependent_gloss: Option<&str>,
    ) -> Vec<&DependencyEdge> {
        self.edges
            .iter()
            .filter(|e| e.dep == dep)
            .filter(|e| governor_gloss.is_none_or(|g| e.governor_gloss.eq_ignore_ascii_case(g)))
            .filter(|e| dependent_gloss.is_none_or(|d| e.dependent_gloss.eq_ignore_ascii_case(d)))
            .collect()
    }

    /// Labels on the path from `index` up to the root, nearest first.
    pub fn ancestor_labels(&self, index: usize) -> Vec<&str> {
        let mut labels = Vec::new();
        let mut cur = index;
        while let Some(edge) = self.head_edge(cur) {
            labels.push(edge.dep.as_str());
            if edge.governor == 0 || labels.len() > self.tokens.len() {
                break;
            }
            cur = edge.governor;
        }
        labels
    }

    /// Replace the quoted spans, dropping any range outside the token list.
    pub fn set_quoted_spans(&mut self, spans: Vec<(usize, usize)>) {
        let max = self.max_index();
        self.quoted_spans = spans
            .into_iter()
            .filter(|&(s, e)| s >= 1 && s <= e && e <= max)
            .collect();
    }

    /// Ranges enclosed by quote tokens, when the parse kept them.
    fn quote_token_spans(&self) -> Vec<(usize, usize)> {
        let marks: Vec<usize> = self
            .tokens
            .iter()
            .filter(|t| {
                matches!(
                    t.surface.as_str(),
                    "\"" | "``" | "''" | "\u{201c}" | "\u{201d}"
                )
            })
            .map(|t| t.index)
            .collect();
        marks
            .chunks_exact(2)
            .filter(|pair| pair[1] > pair[0] + 1)
            .map(|pair| (pair[0] + 1, pair[1] - 1))
            .collect()
    }
}

/// Shared constructor for the readers: normalize, validate, pick up quote tokens.
pub(crate) fn build_headline(
    headline_id: String,
    raw_text: String,
    tokens: Vec<Token>,
    edges: Vec<DependencyEdge>,
) -> Result<ParsedHeadline, IngestError> {
    let edges = normalize_labels(&edges, &tokens);
    let mut headline = ParsedHeadline::new(headline_id, raw_text, tokens, edges)?;
    headline.quoted_spans = headline.quote_token_spans();
    Ok(headline)
}

impl ParsedHeadline {
    /// Like [`ParsedHeadline::new`], but normalizes labels first and picks
    /// up quoted spans from quote tokens, as the file readers do.
    pub fn normalized(
        headline_id: impl Into<String>,
        raw_text: impl Into<String>,
        tokens: Vec<Token>,
        edges: Vec<DependencyEdge>,
    ) -> Result<Self, IngestError> {
        build_headline(headline_id.into(), raw_text.into(), tokens, edges)
    }

    /// Build from `(surface, pos)` pairs and `(dep, governor, dependent)`
    /// triples; glosses are filled in from the tokens.
    pub fn from_triples(
        headline_id: impl Into<String>,
        raw_text: impl Into<String>,
        toks: &[(&str, &str)],
        deps: &[(&str, usize, usize)],
    ) -> Result<Self, IngestError> {
        let tokens: Vec<Token> = toks
            .iter()
            .enumerate()
            .map(|(i, (s, p))| Token::new(i + 1, *s, *p))
            .collect();
        let gloss = |i: usize| match i {
            0 => ROOT_GLOSS.to_string(),
            i => tokens
                .get(i - 1)
                .map_or_else(String::new, |t| t.surface.clone()),
        };
        let edges = deps
            .iter()
            .map(|&(d, g, t)| DependencyEdge::new(d, g, gloss(g), t, gloss(t)))
            .collect();
        Self::normalized(headline_id, raw_text, tokens, edges)
    }
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn headline(
        raw: &str,
        toks: &[(&str, &str)],
        deps: &[(&str, usize, usize)],
    ) -> ParsedHeadline {
        ParsedHeadline::from_triples("t", raw, toks, deps).expect("valid test headline")
    }
}
