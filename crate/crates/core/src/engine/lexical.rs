//! Lexicon-driven triggers: iteratives, change of state, factives,
//! implicatives, verbs of judging, and temporal clauses.

use crate::morphology::VerbForm;

use super::context::{is_nmod, Ctx, LexMatch};
use super::lexicon::LexClass;
use super::{Inference, InferenceKind, RuleId};

fn presupposition(text: impl AsRef<str>, rule: RuleId, span: Vec<usize>) -> Inference {
    Inference::new(InferenceKind::Presupposition, text, rule, span)
}

/// The verb a lexical hit attaches to: the anchor itself, or the verb it
/// modifies ("anymore", "another time").
fn host_verb(cx: &Ctx<'_>, m: &LexMatch<'_>) -> Option<usize> {
    if cx.is_verb(m.anchor) {
        return Some(m.anchor);
    }
    cx.head(m.anchor)
        .map(|e| e.governor)
        .filter(|&g| g != 0 && cx.is_verb(g))
}

/// xcomp or ccomp verb under `v`.
fn complement(cx: &Ctx<'_>, v: usize) -> Option<usize> {
    cx.dependents(v, |l| l == "xcomp" || l == "ccomp")
        .into_iter()
        .find(|&c| cx.is_verb(c))
}

/// Noun phrase reached through an nmod on `v` whose preposition is one of
/// `cases`.
fn place(cx: &Ctx<'_>, v: usize, cases: &[&str]) -> Option<(String, Vec<usize>)> {
    cx.dependents(v, is_nmod).into_iter().find_map(|n| {
        let c = cx.has_child_gloss(n, "case", cases)?;
        let mut toks = cx.phrase_tokens(n);
        let text = cx.render(&toks);
        toks.push(c);
        Some((text, toks))
    })
}

pub(crate) fn iterative(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for m in cx.lexicon_matches(LexClass::Iterative) {
        // "again" has its own structural rule.
        if m.entry.text == "again" {
            continue;
        }
        let Some(v) = host_verb(cx, &m) else { continue };
        let subject = cx.controller(v);
        let mut span = m.span.clone();
        span.push(v);

        let returning = cx.lemma(v) == "return" || m.entry.text.ends_with("come back");
        if let (true, Some(s), Some((where_, toks))) = (returning, subject, place(cx, v, &["to"])) {
            let subj = cx.phrase_tokens(s);
            let text = format!("{} had been in {where_} previously", cx.render(&subj));
            span.extend(subj);
            span.extend(toks);
            out.push(presupposition(text, RuleId::LexicalIterative, span));
            continue;
        }
        if let (Some(c), Some(s)) = (complement(cx, v), subject) {
            let subj = cx.phrase_tokens(s);
            let (body, toks) = cx.clause(c, VerbForm::PastParticiple);
            let text = format!("{} had {body} previously", cx.render(&subj));
            span.extend(subj);
            span.extend(toks);
            out.push(presupposition(text, RuleId::LexicalIterative, span));
            continue;
        }
        let thing = cx.first(v, "dobj").or(subject);
        if let Some(t) = thing {
            let toks = cx.phrase_tokens(t);
            let text = format!("{} has happened before", cx.render(&toks));
            span.extend(toks);
            out.push(presupposition(text, RuleId::LexicalIterative, span));
        }
    }
    out
}

pub(crate) fn change_of_state(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for m in cx.lexicon_matches(LexClass::ChangeOfState) {
        let Some(v) = host_verb(cx, &m) else { continue };
        let Some(s) = cx.controller(v) else { continue };
        let subj = cx.phrase_tokens(s);
        let mut span = m.span.clone();
        span.push(v);
        span.extend(subj.iter().copied());
        let lemma = cx.lemma(v);
        let key = if m.entry.words.len() > 1 {
            m.entry.text.as_str()
        } else {
            lemma.as_str()
        };

        if let Some(c) = complement(cx, v) {
            let aspect = match key {
                "continue" | "carry on" | "keep" => "was",
                "stop" | "cease" | "finish" | "quit" => "had been",
                "begin" | "start" => "had not been",
                _ => continue,
            };
            let (body, toks) = cx.clause(c, VerbForm::Gerund);
            span.extend(toks);
            let text = format!("{} {aspect} {body}", cx.render(&subj));
            out.push(presupposition(text, RuleId::LexicalChangeOfState, span));
            continue;
        }
        let (aspect, cases): (&str, &[&str]) = match key {
            "leave" => ("had been in", &["from"]),
            "enter" => ("had not been in", &["into", "in"]),
            "arrive" => ("had not been in", &["in", "at"]),
            _ => continue,
        };
        let target = match (key, cx.first(v, "dobj")) {
            ("leave" | "enter", Some(o)) => {
                let toks = cx.phrase_tokens(o);
                Some((cx.render(&toks), toks))
            }
            _ => place(cx, v, cases),
        };
        if let Some((where_, toks)) = target {
            span.extend(toks);
            let text = format!("{} {aspect} {where_}", cx.render(&subj));
            out.push(presupposition(text, RuleId::LexicalChangeOfState, span));
        }
    }
    out
}

pub(crate) fn factive(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for m in cx.lexicon_matches(LexClass::Factive) {
        let a = m.anchor;
        let mut span = m.span.clone();
        let clausal = cx
            .dependents(a, |l| l == "ccomp" || l == "xcomp")
            .into_iter()
            .find(|&c| cx.is_verb(c) && cx.subject(c).is_some());
        if let Some(c) = clausal {
            let s = cx.subject(c).expect("checked above");
            let subj = cx.phrase_tokens(s);
            let (body, toks) = cx.clause(c, VerbForm::Past);
            span.extend(subj.iter().copied());
            span.extend(toks);
            out.push(presupposition(
                format!("{} {body}", cx.render(&subj)),
                RuleId::LexicalFactive,
                span,
            ));
            continue;
        }
        if let Some(o) = cx.first(a, "dobj").filter(|&o| cx.is_noun(o)) {
            let toks = cx.phrase_tokens(o);
            let text = format!("There exists {}", cx.render(&toks));
            span.extend(toks);
            out.push(presupposition(text, RuleId::LexicalFactive, span));
        }
    }
    out
}

pub(crate) fn implicative(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for m in cx.lexicon_matches(LexClass::Implicative) {
        let a = m.anchor;
        let Some(c) = cx
            .dependents(a, |l| l == "xcomp")
            .into_iter()
            .find(|&c| cx.is_verb(c))
        else {
            continue;
        };
        let Some(s) = cx.subject(c).or_else(|| cx.controller(a)) else {
            continue;
        };
        let subj = cx.phrase_tokens(s);
        let (body, toks) = cx.clause(c, VerbForm::Past);
        let mut span = m.span.clone();
        span.extend(subj.iter().copied());
        span.extend(toks);
        out.push(presupposition(
            format!("{} {body}", cx.render(&subj)),
            RuleId::LexicalImplicative,
            span,
        ));
    }
    out
}

pub(crate) fn judging(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for m in cx.lexicon_matches(LexClass::Judging) {
        let Some(v) = host_verb(cx, &m) else { continue };
        let Some(s) = cx.controller(v) else { continue };
        let object = match cx.first(v, "dobj") {
            Some(o) => {
                let toks = cx.phrase_tokens(o);
                Some((cx.render(&toks), toks))
            }
            None => place(cx, v, &["for", "over"]),
        };
        let Some((obj, toks)) = object else { continue };
        let subj = cx.phrase_tokens(s);
        let text = format!("{} thinks that {obj} is bad", cx.render(&subj));
        let mut span = m.span.clone();
        span.push(v);
        span.extend(subj);
        span.extend(toks);
        out.push(presupposition(text, RuleId::LexicalJudging, span));
    }
    out
}

/// "before/while/after/when/during X": X took place.
pub(crate) fn temporal(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    let lex = &cx.cfg.lexicon;
    for e in cx.h.edges().iter().filter(|e| {
        (e.dep == "case" || e.dep == "mark")
            && e.governor != 0
            && lex.contains_word(LexClass::Temporal, &e.dependent_gloss)
    }) {
        let g = e.governor;
        if !cx.is_word(g) {
            continue;
        }
        if cx.is_noun(g) {
            let mut toks = cx.phrase_tokens(g);
            let text = format!("There was {}", cx.render(&toks));
            toks.push(e.dependent);
            out.push(presupposition(text, RuleId::Temporal, toks));
        } else if cx.is_verb(g) {
            let Some(s) = cx.subject(g) else { continue };
            let subj = cx.phrase_tokens(s);
            let (body, toks) = cx.clause(g, VerbForm::Past);
            let text = format!("{} {body}", cx.render(&subj));
            let mut span = subj;
            span.extend(toks);
            span.push(e.dependent);
            out.push(presupposition(text, RuleId::Temporal, span));
        }
    }
    out
}
