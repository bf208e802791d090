//! Triggers that read the headline's surface: wh-questions and quotations.

use crate::corpus::clean;

use super::context::Ctx;
use super::{Inference, InferenceKind, RuleId};

const WH: &[(&str, &str)] = &[
    ("what", "something"),
    ("who", "someone"),
    ("where", "somewhere"),
    ("how", "somehow"),
    ("when", "sometime"),
];

const SPEECH_VERBS: &[&str] = &["say", "tell", "claim", "add", "warn", "announce"];

fn is_punct(pos: &str) -> bool {
    matches!(
        pos,
        "." | "," | ":" | "``" | "''" | "-LRB-" | "-RRB-" | "PUNCT" | "HYPH"
    )
}

fn expand_contraction(word: &str, pos: &str) -> String {
    let w = word.to_lowercase().replace('\u{2019}', "'");
    match w.as_str() {
        "'s" if pos != "POS" => "is".into(),
        "'re" => "are".into(),
        "'m" => "am".into(),
        "'ve" => "have".into(),
        "n't" => "not".into(),
        "'ll" => "will".into(),
        "'d" => "would".into(),
        _ => word.to_string(),
    }
}

/// A wh-question presupposes its answer exists: "What's missing from X?"
/// gives "something is missing from X". Yes/no questions give nothing.
pub(crate) fn question(cx: &Ctx<'_>) -> Vec<Inference> {
    let original = if cx.p.original.is_empty() {
        &cx.h.raw_text
    } else {
        &cx.p.original
    };
    if !original.trim_end().ends_with('?') {
        return Vec::new();
    }
    let words: Vec<usize> =
        cx.h.tokens()
            .iter()
            .filter(|t| !is_punct(&t.pos))
            .map(|t| t.index)
            .collect();
    let Some(&wh) = words.first() else {
        return Vec::new();
    };
    let Some(&(_, stand_in)) = WH.iter().find(|(w, _)| cx.lower(wh) == *w) else {
        return Vec::new();
    };

    let wh_is_subject = cx
        .head(wh)
        .is_some_and(|e| matches!(e.dep.as_str(), "nsubj" | "nsubjpass" | "nsubj:pass"));
    let aux = words.get(1).copied().filter(|&a| {
        cx.head(a)
            .is_some_and(|e| matches!(e.dep.as_str(), "aux" | "auxpass" | "aux:pass" | "cop"))
    });

    // Undo subject-aux inversion: "How did X do Y" -> "X did do Y somehow".
    let reordered = match (wh_is_subject, aux) {
        (false, Some(a)) => {
            let clause = cx.head(a).map(|e| e.governor).unwrap_or(0);
            cx.subject(clause).map(|s| {
                let subj = cx.phrase_tokens(s);
                let mut order: Vec<usize> = subj.clone();
                order.push(a);
                order.extend(
                    words
                        .iter()
                        .copied()
                        .filter(|&w| w != wh && w != a && !subj.contains(&w)),
                );
                (order, true)
            })
        }
        _ => None,
    };
    let (order, trailing) = reordered.unwrap_or_else(|| (words.clone(), false));

    let mut out_words: Vec<String> = Vec::new();
    for &i in &order {
        if i == wh {
            out_words.push(stand_in.to_string());
            continue;
        }
        let pos = cx.h.pos(i);
        let w = expand_contraction(cx.surface(i), pos);
        if pos == "POS" {
            match out_words.last_mut() {
                Some(prev) => prev.push_str(&w),
                None => out_words.push(w),
            }
        } else {
            out_words.push(w);
        }
    }
    if trailing {
        out_words.push(stand_in.to_string());
    }
    let mut span = vec![wh];
    span.extend(aux);
    vec![Inference::new(
        InferenceKind::Presupposition,
        out_words.join(" "),
        RuleId::Question,
        span,
    )]
}

/// Token indices covering a quoted run of words.
fn align(cx: &Ctx<'_>, quoted: &str, start: usize, end: usize) -> Vec<usize> {
    let (cleaned, _) = clean(quoted);
    let want: Vec<String> = cleaned.split_whitespace().map(str::to_lowercase).collect();
    let tokens = cx.h.tokens();
    if !want.is_empty() && want.len() <= tokens.len() {
        for s in 0..=tokens.len() - want.len() {
            let window = &tokens[s..s + want.len()];
            if window
                .iter()
                .zip(&want)
                .all(|(t, w)| t.surface.to_lowercase() == *w)
            {
                return window.iter().map(|t| t.index).collect();
            }
        }
    }
    let max = tokens.last().map_or(0, |t| t.index);
    (start + 1..=end.min(max)).collect()
}

/// More than two quoted words: something was said, by whoever the speech
/// verb's subject is.
pub(crate) fn quotes(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut spans: Vec<(String, Vec<usize>)> =
        cx.p.quoted_spans
            .iter()
            .filter(|q| q.word_count() > 2)
            .map(|q| {
                (
                    q.text.trim().to_string(),
                    align(cx, &q.text, q.start, q.end),
                )
            })
            .collect();
    if cx.p.quoted_spans.is_empty() {
        spans =
            cx.h.quoted_spans
                .iter()
                .filter(|(s, e)| e + 1 - s > 2)
                .map(|&(s, e)| {
                    let toks: Vec<usize> = (s..=e).collect();
                    (cx.render(&toks), toks)
                })
                .collect();
    }
    let speaker = cx.h.tokens().iter().find_map(|t| {
        let is_speech = cx.is_verb(t.index) && SPEECH_VERBS.contains(&cx.lemma(t.index).as_str());
        if !is_speech {
            return None;
        }
        cx.subject(t.index).map(|s| (t.index, s))
    });
    let mut out = Vec::new();
    for (text, toks) in spans {
        let mut span = toks;
        let rendered = match speaker {
            Some((v, s)) => {
                let subj = cx.phrase_tokens(s);
                let line = format!("{} says \"{text}\"", cx.render(&subj));
                span.push(v);
                span.extend(subj);
                line
            }
            None => "something is said".to_string(),
        };
        if span.is_empty() {
            continue;
        }
        out.push(Inference::new(
            InferenceKind::Presupposition,
            rendered,
            RuleId::Quotes,
            span,
        ));
    }
    out
}
