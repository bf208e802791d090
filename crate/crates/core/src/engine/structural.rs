//! Rules keyed on dependency structure alone.

use crate::morphology::VerbForm;

use super::context::{is_nmod, Ctx};
use super::{Inference, InferenceKind, RuleId};

const SUBORDINATE: &[&str] = &[
    "advcl",
    "ccomp",
    "acl",
    "acl:relcl",
    "csubj",
    "csubjpass",
    "xcomp",
];

fn presupposition(text: impl AsRef<str>, rule: RuleId, span: Vec<usize>) -> Inference {
    Inference::new(InferenceKind::Presupposition, text, rule, span)
}

/// `will` + direct object: the event has not happened yet.
pub(crate) fn future(cx: &Ctx<'_>) -> Vec<Inference> {
    let h = cx.h;
    let mut out = Vec::new();
    for aux in h.edges_with("aux", None, Some("will")) {
        for obj in h.edges().iter().filter(|e| {
            e.dep == "dobj"
                && e.governor == aux.governor
                && e.governor_gloss == aux.governor_gloss
                && cx.is_word(e.dependent)
        }) {
            let text = format!(
                "{} is not yet {}",
                obj.dependent_gloss,
                cx.form(aux.governor, VerbForm::PastParticiple)
            );
            out.push(presupposition(
                text,
                RuleId::Future,
                vec![aux.dependent, aux.governor, obj.dependent],
            ));
        }
    }
    out
}

/// "X but Y": X was expected not to lead to Y.
pub(crate) fn but(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for e in cx.h.edges().iter().filter(|e| {
        e.dep == "conj:but" && e.governor != 0 && cx.is_word(e.governor) && cx.is_word(e.dependent)
    }) {
        let d = e.dependent;
        let gerund = if cx.h.pos(d) == "VBG" {
            cx.lower(d)
        } else {
            cx.form(d, VerbForm::Gerund)
        };
        let neg = cx.negated(d);
        let text = format!(
            "being {} was {}expecting {gerund}",
            e.governor_gloss,
            if neg.is_some() { "not " } else { "" }
        );
        let mut span = vec![e.governor, d];
        span.extend(neg);
        span.extend(cx.has_child_gloss(d, "cc", &["but"]));
        span.extend(cx.has_child_gloss(e.governor, "cc", &["but"]));
        out.push(Inference::new(
            InferenceKind::ConventionalImplicature,
            text,
            RuleId::But,
            span,
        ));
    }
    out
}

pub(crate) fn again(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for adv in cx.h.edges_with("advmod", None, Some("again")) {
        let v = adv.governor;
        let Some(s) = cx.subject(v) else { continue };
        let subject = cx.phrase_tokens(s);
        let mut parts = vec![
            cx.render(&subject),
            "has".into(),
            cx.form(v, VerbForm::PastParticiple),
        ];
        let mut span = subject;
        span.extend([v, adv.dependent]);
        if let Some(p) = cx.particle(v) {
            parts.push(cx.surface(p).to_string());
            span.push(p);
        }
        if let Some(o) = cx.first(v, "dobj") {
            let obj = cx.phrase_tokens(o);
            parts.push(cx.render(&obj));
            span.extend(obj);
        }
        parts.push("before".into());
        out.push(presupposition(parts.join(" "), RuleId::Again, span));
    }
    out
}

pub(crate) fn further(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for adv in cx.h.edges_with("advmod", None, Some("further")) {
        let v = adv.governor;
        if !cx.is_verb(v) {
            continue;
        }
        let subject = cx.subject(v).or_else(|| {
            cx.h.tokens()
                .iter()
                .rev()
                .find(|t| t.index < v && cx.is_noun(t.index))
                .map(|t| t.index)
        });
        let Some(s) = subject else { continue };
        let text = format!("{} is already {}", cx.surface(s), cx.lemma(v));
        out.push(presupposition(
            text,
            RuleId::Further,
            vec![s, v, adv.dependent],
        ));
    }
    out
}

pub(crate) fn noun_compound(cx: &Ctx<'_>) -> Vec<Inference> {
    let link = cx.cfg.compound_rendering.phrase();
    cx.h.edges()
        .iter()
        .filter(|e| e.dep == "compound" && cx.is_noun(e.governor) && cx.is_noun(e.dependent))
        .map(|e| {
            presupposition(
                format!("{} {link} {}", e.dependent_gloss, e.governor_gloss),
                RuleId::Compound,
                vec![e.dependent, e.governor],
            )
        })
        .collect()
}

/// A main-clause past tense verb: the event has happened.
pub(crate) fn past_tense(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for t in
        cx.h.tokens()
            .iter()
            .filter(|t| t.pos == "VBD" && cx.is_verb(t.index))
    {
        let v = t.index;
        if cx
            .h
            .ancestor_labels(v)
            .iter()
            .any(|l| SUBORDINATE.contains(l))
        {
            continue;
        }
        let Some(s) = cx.dependents(v, |l| l == "nsubj").first().copied() else {
            continue;
        };
        let mut parts = vec![
            cx.surface(s).to_string(),
            "has".into(),
            cx.form(v, VerbForm::PastParticiple),
        ];
        let mut span = vec![s, v];
        if let Some(p) = cx.particle(v) {
            parts.push(cx.surface(p).to_string());
            span.push(p);
        }
        if let Some(o) = cx.first(v, "dobj") {
            let obj = cx.phrase_tokens(o);
            parts.push(cx.render(&obj));
            span.extend(obj);
        }
        out.push(presupposition(parts.join(" "), RuleId::Past, span));
    }
    out
}

/// "N1 of N2": N2 has N1. With `relaxed_nmod`, any nominal modifier between
/// two nouns reads the same way.
pub(crate) fn nmod_of(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for e in
        cx.h.edges()
            .iter()
            .filter(|e| e.governor != 0 && cx.is_word(e.governor) && cx.is_word(e.dependent))
    {
        let of = if e.dep == "nmod" || e.dep == "nmod:of" {
            cx.has_child_gloss(e.dependent, "case", &["of"])
        } else {
            None
        };
        let relaxed = cx.cfg.relaxed_nmod
            && is_nmod(&e.dep)
            && !matches!(e.dep.as_str(), "nmod:tmod" | "nmod:npmod")
            && cx.is_noun(e.governor)
            && cx.is_noun(e.dependent);
        if of.is_none() && !relaxed {
            continue;
        }
        let mut span = vec![e.dependent, e.governor];
        span.extend(of);
        out.push(presupposition(
            format!("{} has {}", e.dependent_gloss, e.governor_gloss),
            RuleId::NmodOf,
            span,
        ));
    }
    out
}
