//! Dataset and gold-annotation file formats, plus headline text cleanup.
//!
//! Dataset lines look like
//! `Headline text [source: Reuters June 23, 2017 07:18 PM IST]`. Gold files
//! list a headline, its inferences prefixed with `>>`, and a closing `||`.

use std::fmt::Write as _;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: missing \"[source: ...]\" in {raw:?}")]
    MissingSource { line: usize, raw: String },
    #[error("line {line}: empty headline text")]
    EmptyHeadline { line: usize },
    #[error("line {line}: inference line before any headline")]
    InferenceBeforeHeadline { line: usize },
    #[error("line {line}: empty inference text")]
    EmptyInference { line: usize },
    #[error("line {line}: \"||\" without an open headline")]
    StrayTerminator { line: usize },
    #[error("headline {headline:?} (line {line}) is not terminated with \"||\"")]
    Unterminated { line: usize, headline: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadlineRecord {
    pub text: String,
    pub source: String,
    /// Kept verbatim; never parsed.
    pub timestamp_raw: String,
    /// 1-based line in the dataset file (1 for single-line parsing).
    pub line: usize,
}

const MONTHS: &[&str] = &[
    "jan",
    "january",
    "feb",
    "february",
    "mar",
    "march",
    "apr",
    "april",
    "may",
    "jun",
    "june",
    "jul",
    "july",
    "aug",
    "august",
    "sep",
    "sept",
    "september",
    "oct",
    "october",
    "nov",
    "november",
    "dec",
    "december",
];

static NUMERIC_DATE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^(?:\d{4}-\d{1,2}-\d{1,2}|\d{1,2}[/.]\d{1,2}[/.]\d{2,4})").unwrap()
});

fn starts_timestamp(words: &[&str], i: usize) -> bool {
    let word = words[i].trim_end_matches([',', '.']).to_ascii_lowercase();
    if MONTHS.contains(&word.as_str()) {
        return true;
    }
    if NUMERIC_DATE.is_match(words[i]) {
        return true;
    }
    // "23 June 2017"
    word.len() <= 2
        && word.chars().all(|c| c.is_ascii_digit())
        && words.get(i + 1).is_some_and(|next| {
            let next = next.trim_end_matches([',', '.']).to_ascii_lowercase();
            MONTHS.contains(&next.as_str())
        })
}

/// Parse one `Headline [source: Source Timestamp]` line.
pub fn parse_dataset_line(line: &str) -> Result<HeadlineRecord, FormatError> {
    parse_dataset_line_at(line, 1)
}

fn parse_dataset_line_at(line: &str, lineno: usize) -> Result<HeadlineRecord, FormatError> {
    let missing = || FormatError::MissingSource {
        line: lineno,
        raw: line.to_string(),
    };
    let trimmed = line.trim();
    let open = trimmed.rfind("[source:").ok_or_else(missing)?;
    let rest = trimmed[open + "[source:".len()..]
        .strip_suffix(']')
        .ok_or_else(missing)?;
    let text = trimmed[..open].trim();
    if text.is_empty() {
        return Err(FormatError::EmptyHeadline { line: lineno });
    }
    let words: Vec<&str> = rest.split_whitespace().collect();
    let split = (0..words.len()).find(|&i| i > 0 && starts_timestamp(&words, i));
    let (source, timestamp) = match split {
        Some(i) => (words[..i].join(" "), words[i..].join(" ")),
        None => (words.join(" "), String::new()),
    };
    Ok(HeadlineRecord {
        text: text.to_string(),
        source,
        timestamp_raw: timestamp,
        line: lineno,
    })
}

/// Parse a dataset file. Blank lines and `#` comments are skipped.
pub fn parse_dataset(document: &str) -> Result<Vec<HeadlineRecord>, FormatError> {
    document
        .lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_dataset_line_at(l, i + 1))
        .collect()
}

/// A run of quoted text, in word offsets of the cleaned headline
/// (`start` inclusive, `end` exclusive).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotedSpan {
    pub start: usize,
    pub end: usize,
    pub text: String,
}

impl QuotedSpan {
    pub fn word_count(&self) -> usize {
        self.end.saturating_sub(self.start)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PreprocessedHeadline {
    pub original: String,
    pub cleaned: String,
    pub quoted_spans: Vec<QuotedSpan>,
    pub removed_chars: usize,
}

impl PreprocessedHeadline {
    pub fn is_question(&self) -> bool {
        self.original.trim_end().ends_with('?')
    }

    pub fn words(&self) -> Vec<&str> {
        self.cleaned.split_whitespace().collect()
    }
}

fn is_double_quote(c: char) -> bool {
    matches!(
        c,
        '"' | '\u{201c}' | '\u{201d}' | '\u{201e}' | '\u{00ab}' | '\u{00bb}'
    )
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2018}' | '\u{2019}')
}

fn is_dash(c: char) -> bool {
    matches!(c, '-' | '\u{2013}' | '\u{2014}' | '\u{2012}' | '\u{2010}')
}

/// Characters removed by [`clean`].
pub fn is_punctuation(c: char) -> bool {
    matches!(c, '.' | ',' | '!' | '?' | ';' | ':' | '(' | ')' | '[' | ']')
        || is_double_quote(c)
        || is_apostrophe(c)
        || is_dash(c)
}

/// Strip punctuation and collapse whitespace.
///
/// Dashes, brackets and quote marks become spaces. Other marks are deleted
/// when they sit between two alphanumerics (`U.S.` → `US`) and become spaces
/// otherwise. Apostrophes between letters (`It's`) are kept. Returns the
/// cleaned text and the number of characters removed.
pub fn clean(text: &str) -> (String, usize) {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut removed = 0;
    for (i, &c) in chars.iter().enumerate() {
        if !is_punctuation(c) {
            out.push(c);
            continue;
        }
        let between_words = i > 0
            && i + 1 < chars.len()
            && chars[i - 1].is_alphanumeric()
            && chars[i + 1].is_alphanumeric();
        if is_apostrophe(c) && between_words {
            out.push(c);
            continue;
        }
        removed += 1;
        let spaced = is_dash(c)
            || is_double_quote(c)
            || is_apostrophe(c)
            || matches!(c, '(' | ')' | '[' | ']');
        if spaced || !between_words {
            out.push(' ');
        }
    }
    (
        out.split_whitespace().collect::<Vec<_>>().join(" "),
        removed,
    )
}

/// Record quoted spans and strip punctuation.
///
/// Double quotes (straight or curly) pair up left to right; a final unpaired
/// quote yields no span and is stripped like any other mark.
pub fn preprocess(text: &str) -> PreprocessedHeadline {
    let marks: Vec<(usize, char)> = text
        .char_indices()
        .filter(|&(_, c)| is_double_quote(c))
        .collect();
    let word_count = |s: &str| clean(s).0.split_whitespace().count();
    let quoted_spans = marks
        .chunks_exact(2)
        .filter_map(|pair| {
            let (open, oc) = pair[0];
            let (close, _) = pair[1];
            let inner = &text[open + oc.len_utf8()..close];
            if inner.trim().is_empty() {
                return None;
            }
            Some(QuotedSpan {
                start: word_count(&text[..open]),
                end: word_count(&text[..close]),
                text: inner.to_string(),
            })
        })
        .collect();
    let (cleaned, removed_chars) = clean(text);
    PreprocessedHeadline {
        original: text.to_string(),
        cleaned,
        quoted_spans,
        removed_chars,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldInference {
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trigger: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldAnnotation {
    pub headline: String,
    pub inferences: Vec<GoldInference>,
}

static TRIGGER_TAG: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\s@([A-Za-z][A-Za-z0-9_.:-]*)\s*$").unwrap());

fn gold_inference(body: &str, line: usize) -> Result<GoldInference, FormatError> {
    let body = body.trim();
    let (text, trigger) = match TRIGGER_TAG.captures(body) {
        Some(caps) => {
            let whole = caps.get(0).unwrap();
            (body[..whole.start()].trim(), Some(caps[1].to_string()))
        }
        None if body.starts_with('@') && TRIGGER_TAG.is_match(&format!(" {body}")) => {
            return Err(FormatError::EmptyInference { line });
        }
        None => (body, None),
    };
    if text.is_empty() {
        return Err(FormatError::EmptyInference { line });
    }
    Ok(GoldInference {
        text: text.to_string(),
        trigger,
    })
}

/// Parse a gold annotation document.
pub fn parse_gold(document: &str) -> Result<Vec<GoldAnnotation>, FormatError> {
    let mut out = Vec::new();
    let mut open: Option<(usize, GoldAnnotation)> = None;

    for (i, raw) in document.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t == "||" {
            let (_, ann) = open.take().ok_or(FormatError::StrayTerminator { line })?;
            out.push(ann);
            continue;
        }
        if let Some(body) = t.strip_prefix(">>") {
            let Some((_, ann)) = open.as_mut() else {
                return Err(FormatError::InferenceBeforeHeadline { line });
            };
            // Tolerate "|| " glued onto the last inference line.
            match body.trim_end().strip_suffix("||") {
                Some(body) => {
                    ann.inferences.push(gold_inference(body, line)?);
                    out.push(open.take().unwrap().1);
                }
                None => ann.inferences.push(gold_inference(body, line)?),
            }
            continue;
        }
        if let Some((start, ann)) = open.take() {
            return Err(FormatError::Unterminated {
                line: start,
                headline: ann.headline,
            });
        }
        open = Some((
            line,
            GoldAnnotation {
                headline: t.to_string(),
                inferences: Vec::new(),
            },
        ));
    }
    match open {
        Some((line, ann)) => Err(FormatError::Unterminated {
            line,
            headline: ann.headline,
        }),
        None => Ok(out),
    }
}

/// Write annotations in the format read by [`parse_gold`].
pub fn render_gold(annotations: &[GoldAnnotation]) -> String {
    let mut out = String::new();
    for ann in annotations {
        let _ = writeln!(out, "{}", ann.headline);
        for inf in &ann.inferences {
            match &inf.trigger {
                Some(t) => {
                    let _ = writeln!(out, ">> {} @{t}", inf.text);
                }
                None => {
                    let _ = writeln!(out, ">> {}", inf.text);
                }
            }
        }
        out.push_str("||\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_line_with_timestamp() {
        let r = parse_dataset_line(
            "Schaeuble says British were \"deceived\" in Brexit campaign [source: Reuters June 23, 2017 07:18 PM IST]",
        )
        .unwrap();
        assert_eq!(
            r.text,
            "Schaeuble says British were \"deceived\" in Brexit campaign"
        );
        assert_eq!(r.source, "Reuters");
        assert_eq!(r.timestamp_raw, "June 23, 2017 07:18 PM IST");
    }

    #[test]
    fn dataset_line_variants() {
        let r = parse_dataset_line("X [source: BBC]").unwrap();
        assert_eq!(
            (r.text.as_str(), r.source.as_str(), r.timestamp_raw.as_str()),
            ("X", "BBC", "")
        );
        let r = parse_dataset_line("Y [source: The Hindu 23 June 2017]").unwrap();
        assert_eq!(
            (r.source.as_str(), r.timestamp_raw.as_str()),
            ("The Hindu", "23 June 2017")
        );
        let r = parse_dataset_line("Z [source: BBC 2018-02-07 10:00]").unwrap();
        assert_eq!(r.timestamp_raw, "2018-02-07 10:00");
        assert!(matches!(
            parse_dataset_line("no bracket here"),
            Err(FormatError::MissingSource { .. })
        ));
    }

    #[test]
    fn dataset_skips_comments() {
        let doc = "# header\nA [source: BBC]\n\nB [source: Reuters]\n";
        let recs = parse_dataset(doc).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].line, 4);
    }

    #[test]
    fn preprocess_strips_marks_and_splits_hyphens() {
        let p = preprocess("Olympics-It's ready but will they come?");
        assert_eq!(p.cleaned, "Olympics It's ready but will they come");
        assert!(p.quoted_spans.is_empty());
        assert_eq!(p.removed_chars, 2);
        assert_eq!(
            preprocess("U.S. vows new sanctions").cleaned,
            "US vows new sanctions"
        );
        assert_eq!(
            preprocess("Labour MPs' resignations").cleaned,
            "Labour MPs resignations"
        );
    }

    #[test]
    fn preprocess_records_quotes() {
        let p = preprocess("Schaeuble says British were \"deceived\" in Brexit campaign");
        assert_eq!(
            p.cleaned,
            "Schaeuble says British were deceived in Brexit campaign"
        );
        assert_eq!(
            p.quoted_spans,
            vec![QuotedSpan {
                start: 4,
                end: 5,
                text: "deceived".into()
            }]
        );
        let p = preprocess(
            "Merkel says May\u{2019}s Brexit proposals \u{201c}not the breakthrough\u{201d}.",
        );
        assert_eq!(p.quoted_spans[0].text, "not the breakthrough");
        assert_eq!(p.quoted_spans[0].word_count(), 3);
        assert_eq!(
            p.cleaned,
            "Merkel says May\u{2019}s Brexit proposals not the breakthrough"
        );
    }

    #[test]
    fn unmatched_quote_is_dropped() {
        let p = preprocess("a \"b c");
        assert!(p.quoted_spans.is_empty());
        assert_eq!(p.cleaned, "a b c");
        assert_eq!(preprocess("").cleaned, "");
    }

    #[test]
    fn gold_block() {
        let doc = "Corbyn 'regrets' Labour MPs' resignations\n>> Labour MPs resigned.\n||\n";
        let g = parse_gold(doc).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].headline, "Corbyn 'regrets' Labour MPs' resignations");
        assert_eq!(
            g[0].inferences,
            vec![GoldInference {
                text: "Labour MPs resigned.".into(),
                trigger: None
            }]
        );
    }

    #[test]
    fn gold_trigger_tag_and_empty_block() {
        let g = parse_gold("H\n>> inference @again\n||\nK\n||\n").unwrap();
        assert_eq!(
            g[0].inferences[0],
            GoldInference {
                text: "inference".into(),
                trigger: Some("again".into())
            }
        );
        assert!(g[1].inferences.is_empty());
        let g = parse_gold("H\n>> x @lexical.factive\n||").unwrap();
        assert_eq!(
            g[0].inferences[0].trigger.as_deref(),
            Some("lexical.factive")
        );
    }

    #[test]
    fn gold_errors() {
        assert_eq!(
            parse_gold(">> x\n||\n").unwrap_err(),
            FormatError::InferenceBeforeHeadline { line: 1 }
        );
        assert_eq!(
            parse_gold("H\n>> x\n").unwrap_err(),
            FormatError::Unterminated {
                line: 1,
                headline: "H".into()
            }
        );
        assert_eq!(
            parse_gold("H\n>>   \n||").unwrap_err(),
            FormatError::EmptyInference { line: 2 }
        );
        assert!(parse_gold("").unwrap().is_empty());
    }

    #[test]
    fn glued_terminator() {
        let g = parse_gold("H\n>> a\n>> b ||\n").unwrap();
        assert_eq!(g[0].inferences.len(), 2);
        assert_eq!(g[0].inferences[1].text, "b");
    }
}
