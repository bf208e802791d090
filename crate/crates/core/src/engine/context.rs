//! Tree queries and phrase rendering shared by the rules.

use crate::corpus::PreprocessedHeadline;
use crate::morphology::{Morphology, VerbForm};
use crate::parse::{DependencyEdge, ParsedHeadline};

use super::lexicon::{LexClass, LexEntry};
use super::EngineConfig;

const ARTICLES: &[&str] = &["a", "an", "the"];

pub(crate) fn is_nmod(label: &str) -> bool {
    label == "nmod" || (label.starts_with("nmod:") && label != "nmod:poss")
}

fn is_subject(label: &str) -> bool {
    matches!(label, "nsubj" | "nsubjpass" | "nsubj:pass")
}

pub(crate) struct Ctx<'a> {
    pub h: &'a ParsedHeadline,
    pub p: &'a PreprocessedHeadline,
    pub cfg: &'a EngineConfig,
}

/// A lexicon hit: the token nearest the root among the matched words, and
/// all matched tokens.
pub(crate) struct LexMatch<'e> {
    pub anchor: usize,
    pub span: Vec<usize>,
    pub entry: &'e LexEntry,
}

impl<'a> Ctx<'a> {
    pub fn new(h: &'a ParsedHeadline, p: &'a PreprocessedHeadline, cfg: &'a EngineConfig) -> Self {
        Ctx { h, p, cfg }
    }

    pub fn morph(&self) -> &Morphology {
        &self.cfg.morphology
    }

    pub fn surface(&self, i: usize) -> &str {
        self.h.surface(i)
    }

    pub fn lower(&self, i: usize) -> String {
        self.surface(i).to_lowercase()
    }

    /// Base form: the parser's lemma when it supplied one, else ours.
    pub fn lemma(&self, i: usize) -> String {
        let Some(t) = self.h.token(i) else {
            return String::new();
        };
        match &t.lemma {
            Some(l) if !l.is_empty() => l.to_lowercase(),
            _ => self.morph().lemma(&t.surface, &t.pos),
        }
    }

    pub fn form(&self, i: usize, form: VerbForm) -> String {
        self.morph().conjugate(&self.lemma(i), form)
    }

    pub fn is_verb(&self, i: usize) -> bool {
        self.h.is_verb(i, self.cfg.verb_pattern)
    }

    pub fn is_noun(&self, i: usize) -> bool {
        self.h.is_noun(i)
    }

    /// Has at least one letter or digit; quote marks and other stray
    /// punctuation tokens never fill a template slot.
    pub fn is_word(&self, i: usize) -> bool {
        self.surface(i).chars().any(char::is_alphanumeric)
    }

    /// Word dependents of `i` whose label satisfies `pred`, in token order.
    pub fn dependents(&self, i: usize, pred: impl Fn(&str) -> bool) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .h
            .children_with(i, pred)
            .map(|e| e.dependent)
            .filter(|&d| self.is_word(d))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn first(&self, i: usize, label: &str) -> Option<usize> {
        self.dependents(i, |l| l == label).into_iter().next()
    }

    pub fn has_child_gloss(&self, i: usize, label: &str, gloss: &[&str]) -> Option<usize> {
        self.h
            .children_with(i, |l| l == label)
            .find(|e| {
                gloss
                    .iter()
                    .any(|g| e.dependent_gloss.eq_ignore_ascii_case(g))
            })
            .map(|e| e.dependent)
    }

    pub fn head(&self, i: usize) -> Option<&DependencyEdge> {
        self.h.head_edge(i)
    }

    pub fn subject(&self, v: usize) -> Option<usize> {
        self.dependents(v, is_subject).into_iter().next()
    }

    /// Subject of `v`, or of the nearest ancestor that has one; failing
    /// that, a nominal root.
    pub fn controller(&self, v: usize) -> Option<usize> {
        let mut cur = v;
        for _ in 0..=self.h.tokens().len() {
            if let Some(s) = self.subject(cur) {
                return Some(s);
            }
            match self.head(cur) {
                Some(e) if e.governor != 0 => cur = e.governor,
                _ => break,
            }
        }
        self.h
            .root()
            .filter(|&r| r != v && self.is_noun(r) && self.is_word(r))
    }

    pub fn negated(&self, v: usize) -> Option<usize> {
        self.first(v, "neg")
            .or_else(|| self.has_child_gloss(v, "advmod", &["not", "n't", "never"]))
    }

    pub fn particle(&self, v: usize) -> Option<usize> {
        self.dependents(v, |l| l == "compound:prt" || l == "prt")
            .into_iter()
            .next()
    }

    /// The noun and its pre-modifiers: compounds, adjectives, non-article
    /// determiners, numbers and possessors, in surface order.
    pub fn phrase_tokens(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut stack = vec![i];
        while let Some(cur) = stack.pop() {
            for e in self.h.children(cur) {
                let take = match e.dep.as_str() {
                    "compound" | "amod" | "nummod" => true,
                    "det" => !ARTICLES.contains(&e.dependent_gloss.to_lowercase().as_str()),
                    "nmod:poss" | "poss" => {
                        if let Some(c) = self.first(e.dependent, "case") {
                            out.push(c);
                        }
                        true
                    }
                    _ => false,
                };
                if take
                    && self.is_word(e.dependent)
                    && !out.contains(&e.dependent)
                    && out.len() <= self.h.tokens().len()
                {
                    out.push(e.dependent);
                    stack.push(e.dependent);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Surfaces in index order, with clitics ('s, n't) attached.
    pub fn render(&self, idx: &[usize]) -> String {
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut out = String::new();
        for i in sorted {
            let s = self.surface(i);
            if s.is_empty() {
                continue;
            }
            let clitic =
                (s.starts_with('\'') || s.starts_with('\u{2019}') || s.eq_ignore_ascii_case("n't"))
                    && s.len() <= 4;
            if !out.is_empty() && !clitic {
                out.push(' ');
            }
            out.push_str(s);
        }
        out
    }

    /// A verb with its auxiliaries, negation and particle.
    pub fn predicate_tokens(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        for e in self.h.children(v) {
            let take = match e.dep.as_str() {
                "aux" | "auxpass" | "aux:pass" | "neg" | "compound:prt" | "prt" => true,
                "advmod" => matches!(e.dependent_gloss.to_lowercase().as_str(), "not" | "n't"),
                _ => false,
            };
            if take {
                out.push(e.dependent);
            }
        }
        out.sort_unstable();
        out
    }

    /// Object attachments of `v`: the direct object, then nominal modifiers
    /// with their prepositions, in token order.
    pub fn objects(&self, v: usize) -> Vec<(String, Vec<usize>)> {
        let mut items: Vec<(usize, String, Vec<usize>)> = Vec::new();
        if let Some(o) = self.first(v, "dobj") {
            let toks = self.phrase_tokens(o);
            items.push((o, self.render(&toks), toks));
        }
        for n in self.dependents(v, is_nmod) {
            items.push(self.attachment(n));
        }
        items.sort_by_key(|(i, _, _)| *i);
        items.into_iter().map(|(_, s, t)| (s, t)).collect()
    }

    /// "case noun-phrase" for an nmod dependent.
    pub fn attachment(&self, n: usize) -> (usize, String, Vec<usize>) {
        let mut toks = self.phrase_tokens(n);
        let mut text = self.render(&toks);
        if let Some(c) = self.first(n, "case") {
            text = format!("{} {text}", self.surface(c));
            toks.push(c);
        }
        (n, text, toks)
    }

    /// "<verb in form> [particle] <objects>", for restating a clause.
    pub fn clause(&self, v: usize, form: VerbForm) -> (String, Vec<usize>) {
        let verb = if form == VerbForm::Gerund && self.h.pos(v) == "VBG" {
            self.lower(v)
        } else {
            self.form(v, form)
        };
        let mut parts = vec![verb];
        let mut span = vec![v];
        if let Some(p) = self.particle(v) {
            parts.push(self.surface(p).to_string());
            span.push(p);
        }
        for (text, toks) in self.objects(v) {
            parts.push(text);
            span.extend(toks);
        }
        (parts.join(" "), span)
    }

    /// Depth from the root; tokens off the tree sort last.
    pub fn depth(&self, i: usize) -> usize {
        let labels = self.h.ancestor_labels(i);
        if labels.is_empty() {
            usize::MAX
        } else {
            labels.len()
        }
    }

    fn token_matches(&self, i: usize, word: &str, key: &str) -> bool {
        let surface = self.lower(i);
        surface == word || surface == key || self.lemma(i) == key
    }

    /// Every place an entry of `class` occurs.
    pub fn lexicon_matches(&self, class: LexClass) -> Vec<LexMatch<'a>> {
        let tokens = self.h.tokens();
        let mut out: Vec<LexMatch<'a>> = Vec::new();
        for entry in self.cfg_lexicon().entries(class) {
            let k = entry.words.len();
            if k == 0 || k > tokens.len() {
                continue;
            }
            for start in 0..=tokens.len() - k {
                let window = &tokens[start..start + k];
                let hit = window
                    .iter()
                    .zip(entry.words.iter().zip(&entry.keys))
                    .all(|(t, (w, key))| self.token_matches(t.index, w, key));
                if !hit {
                    continue;
                }
                let span: Vec<usize> = window.iter().map(|t| t.index).collect();
                let anchor = *span.iter().min_by_key(|&&i| (self.depth(i), i)).unwrap();
                if out.iter().all(|m| m.anchor != anchor) {
                    out.push(LexMatch {
                        anchor,
                        span,
                        entry,
                    });
                }
            }
        }
        out.sort_by_key(|m| m.anchor);
        out
    }

    fn cfg_lexicon(&self) -> &'a super::TriggerLexicon {
        &self.cfg.lexicon
    }
}
