//! Matching computed inferences against gold annotations, and the
//! per-headline and per-trigger scores built on the matches.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{clean, GoldAnnotation};
use crate::engine::{Inference, InferenceRecord};

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("jaccard threshold {0} is outside [0, 1]")]
    Threshold(f64),
    #[error("unknown match mode {0:?} (expected exact or jaccard)")]
    Mode(String),
    #[error("labels line {line}: {message}")]
    Labels { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchMode {
    #[default]
    ExactNormalized,
    TokenJaccard,
}

impl FromStr for MatchMode {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" | "exact_normalized" => Ok(MatchMode::ExactNormalized),
            "jaccard" | "token_jaccard" => Ok(MatchMode::TokenJaccard),
            other => Err(EvalError::Mode(other.to_string())),
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchMode::ExactNormalized => "exact",
            MatchMode::TokenJaccard => "jaccard",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchConfig {
    pub mode: MatchMode,
    pub jaccard_threshold: f64,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            mode: MatchMode::ExactNormalized,
            jaccard_threshold: 0.6,
        }
    }
}

impl MatchConfig {
    pub fn new(mode: MatchMode, jaccard_threshold: f64) -> Result<MatchConfig, EvalError> {
        if !(0.0..=1.0).contains(&jaccard_threshold) {
            return Err(EvalError::Threshold(jaccard_threshold));
        }
        Ok(MatchConfig {
            mode,
            jaccard_threshold,
        })
    }
}

static CAN_BE_HAVE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\bcan (?:be can have|have can be|be|have)\b").unwrap());

/// Lowercase, strip punctuation, fold the "can be/can have" family into
/// "can-have", collapse whitespace.
pub fn normalize(text: &str) -> String {
    let lowered = text.to_lowercase().replace('/', " ");
    let (cleaned, _) = clean(&lowered);
    let no_apostrophes: String = cleaned
        .chars()
        .filter(|c| !matches!(c, '\'' | '\u{2018}' | '\u{2019}'))
        .collect();
    let collapsed = no_apostrophes
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ");
    CAN_BE_HAVE.replace_all(&collapsed, "can-have").into_owned()
}

/// Jaccard similarity of the normalized token sets. Two empty texts score 1.
pub fn jaccard(a: &str, b: &str) -> f64 {
    let na = normalize(a);
    let nb = normalize(b);
    let sa: HashSet<&str> = na.split_whitespace().collect();
    let sb: HashSet<&str> = nb.split_whitespace().collect();
    if sa.is_empty() && sb.is_empty() {
        return 1.0;
    }
    let inter = sa.intersection(&sb).count() as f64;
    inter / sa.union(&sb).count() as f64
}

/// One-to-one pairing of computed (left) and gold (right) items by index.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Alignment {
    /// `(computed, gold)` index pairs, sorted by gold index.
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_computed: Vec<usize>,
    pub unmatched_gold: Vec<usize>,
    pub computed_count: usize,
    pub gold_count: usize,
}

impl Alignment {
    pub fn matched(&self) -> usize {
        self.pairs.len()
    }

    pub fn gold_for(&self, computed: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == computed).map(|p| p.1)
    }

    pub fn computed_for(&self, gold: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == gold).map(|p| p.0)
    }
}

/// Greedy alignment of texts. `judged` pairs (computed, gold) are taken
/// first, then exact normalized matches in gold order, then in Jaccard mode
/// the best remaining pairs at or above the threshold.
pub fn match_texts(
    computed: &[&str],
    gold: &[&str],
    cfg: &MatchConfig,
    judged: &[(usize, usize)],
) -> Alignment {
    let nc: Vec<String> = computed.iter().map(|t| normalize(t)).collect();
    let ng: Vec<String> = gold.iter().map(|t| normalize(t)).collect();
    let mut used_c = vec![false; computed.len()];
    let mut used_g = vec![false; gold.len()];
    let mut pairs = Vec::new();
    let mut take = |c: usize, g: usize, used_c: &mut [bool], used_g: &mut [bool]| {
        used_c[c] = true;
        used_g[g] = true;
        pairs.push((c, g));
    };

    for &(c, g) in judged {
        if c < computed.len() && g < gold.len() && !used_c[c] && !used_g[g] {
            take(c, g, &mut used_c, &mut used_g);
        }
    }

    for g in 0..gold.len() {
        if used_g[g] {
            continue;
        }
        if let Some(c) = (0..computed.len()).find(|&c| !used_c[c] && nc[c] == ng[g]) {
            take(c, g, &mut used_c, &mut used_g);
        }
    }

    if cfg.mode == MatchMode::TokenJaccard {
        let mut candidates: Vec<(f64, usize, usize)> = Vec::new();
        for g in (0..gold.len()).filter(|&g| !used_g[g]) {
            for c in (0..computed.len()).filter(|&c| !used_c[c]) {
                let w = jaccard(&nc[c], &ng[g]);
                if w >= cfg.jaccard_threshold && w > 0.0 {
                    candidates.push((w, g, c));
                }
            }
        }
        candidates.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        for (_, g, c) in candidates {
            if !used_c[c] && !used_g[g] {
                take(c, g, &mut used_c, &mut used_g);
            }
        }
    }

    pairs.sort_by_key(|&(c, g)| (g, c));
    Alignment {
        pairs,
        unmatched_computed: (0..computed.len()).filter(|&c| !used_c[c]).collect(),
        unmatched_gold: (0..gold.len()).filter(|&g| !used_g[g]).collect(),
        computed_count: computed.len(),
        gold_count: gold.len(),
    }
}

/// Human judgments for one headline: computed texts that are wrong, and
/// computed/gold pairs that mean the same thing despite different wording.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadlineLabels {
    pub headline: String,
    #[serde(default)]
    pub incorrect: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub matched: Vec<(String, String)>,
}

impl HeadlineLabels {
    fn judged_pairs(&self, computed: &[&str], gold: &[&str]) -> Vec<(usize, usize)> {
        let nc: Vec<String> = computed.iter().map(|t| normalize(t)).collect();
        let ng: Vec<String> = gold.iter().map(|t| normalize(t)).collect();
        self.matched
            .iter()
            .filter_map(|(c, g)| {
                let (c, g) = (normalize(c), normalize(g));
                Some((
                    nc.iter().position(|x| *x == c)?,
                    ng.iter().position(|x| *x == g)?,
                ))
            })
            .collect()
    }

    fn incorrect_set(&self) -> HashSet<String> {
        self.incorrect.iter().map(|t| normalize(t)).collect()
    }
}

/// Read a JSON Lines labels file. Blank lines are skipped.
pub fn read_labels(document: &str) -> Result<Vec<HeadlineLabels>, EvalError> {
    document
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| EvalError::Labels {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Align a headline's computed inferences with its gold block.
pub fn match_inferences(
    computed: &[Inference],
    gold: &GoldAnnotation,
    cfg: &MatchConfig,
    labels: Option<&HeadlineLabels>,
) -> Alignment {
    let c: Vec<&str> = computed.iter().map(|i| i.text.as_str()).collect();
    let g: Vec<&str> = gold.inferences.iter().map(|i| i.text.as_str()).collect();
    let judged = labels.map(|l| l.judged_pairs(&c, &g)).unwrap_or_default();
    match_texts(&c, &g, cfg, &judged)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeadlineScore {
    pub headline: String,
    pub gold_count: usize,
    pub computed_count: usize,
    pub matched_count: usize,
    pub incorrect_count: usize,
    pub percent_correct: f64,
    pub percent_incorrect: f64,
}

fn percent(num: usize, den: usize) -> f64 {
    num as f64 * 100.0 / den as f64
}

/// Round to one decimal place, for display.
pub fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

/// Score from raw counts.
pub fn score_counts(
    headline: &str,
    gold: usize,
    computed: usize,
    matched: usize,
    incorrect: usize,
) -> HeadlineScore {
    let percent_correct = match (gold, computed) {
        (0, 0) => 100.0,
        (0, _) => 0.0,
        _ => percent(matched, gold),
    };
    let percent_incorrect = if computed == 0 {
        0.0
    } else {
        percent(incorrect, computed)
    };
    HeadlineScore {
        headline: headline.to_string(),
        gold_count: gold,
        computed_count: computed,
        matched_count: matched,
        incorrect_count: incorrect,
        percent_correct,
        percent_incorrect,
    }
}

/// Which computed inferences count as incorrect: those named in the labels,
/// or without labels every unmatched one.
fn incorrect_flags(
    computed: &[&str],
    alignment: &Alignment,
    labels: Option<&HeadlineLabels>,
) -> Vec<bool> {
    match labels {
        Some(l) => {
            let wrong = l.incorrect_set();
            computed
                .iter()
                .map(|t| wrong.contains(&normalize(t)))
                .collect()
        }
        None => (0..computed.len())
            .map(|c| alignment.unmatched_computed.contains(&c))
            .collect(),
    }
}

pub fn score_headline(
    headline: &str,
    computed: &[&str],
    alignment: &Alignment,
    labels: Option<&HeadlineLabels>,
) -> HeadlineScore {
    let incorrect = incorrect_flags(computed, alignment, labels)
        .iter()
        .filter(|&&b| b)
        .count();
    score_counts(
        headline,
        alignment.gold_count,
        alignment.computed_count,
        alignment.matched(),
        incorrect,
    )
}

/// Per-trigger percentages. A column is `None` when its denominator is
/// empty: no computed inferences for accurate/inaccurate, no tagged gold for
/// missing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriggerScore {
    pub trigger: String,
    pub computed: usize,
    pub matched: usize,
    pub incorrect: usize,
    pub gold_tagged: usize,
    pub gold_missing: usize,
    pub percent_accurate: Option<f64>,
    pub percent_inaccurate: Option<f64>,
    pub percent_missing: Option<f64>,
}

/// Everything needed to score one headline.
#[derive(Debug, Clone)]
pub struct ScoredHeadline<'a> {
    pub computed: &'a [Inference],
    pub gold: &'a GoldAnnotation,
    pub alignment: Alignment,
    pub labels: Option<&'a HeadlineLabels>,
}

#[derive(Default)]
struct Tally {
    computed: usize,
    matched: usize,
    incorrect: usize,
    gold_tagged: usize,
    gold_missing: usize,
}

/// Gold trigger tags are compared after lowercasing, with `_` and `-`
/// treated alike, so `@noun-compound` counts for `noun_compound`.
fn trigger_key(t: &str) -> String {
    t.trim().to_lowercase().replace('-', "_")
}

pub fn score_by_trigger(items: &[ScoredHeadline<'_>]) -> Vec<TriggerScore> {
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    for item in items {
        let texts: Vec<&str> = item.computed.iter().map(|i| i.text.as_str()).collect();
        let wrong = incorrect_flags(&texts, &item.alignment, item.labels);
        for (c, inf) in item.computed.iter().enumerate() {
            let t = tallies.entry(trigger_key(&inf.trigger)).or_default();
            t.computed += 1;
            if item.alignment.gold_for(c).is_some() {
                t.matched += 1;
            }
            if wrong[c] {
                t.incorrect += 1;
            }
        }
        for (g, gi) in item.gold.inferences.iter().enumerate() {
            let Some(tag) = &gi.trigger else { continue };
            let t = tallies.entry(trigger_key(tag)).or_default();
            t.gold_tagged += 1;
            if item.alignment.computed_for(g).is_none() {
                t.gold_missing += 1;
            }
        }
    }
    tallies
        .into_iter()
        .map(|(trigger, t)| {
            let over_computed = |n| (t.computed > 0).then(|| percent(n, t.computed));
            TriggerScore {
                percent_accurate: over_computed(t.matched),
                percent_inaccurate: over_computed(t.incorrect),
                percent_missing: (t.gold_tagged > 0)
                    .then(|| percent(t.gold_missing, t.gold_tagged)),
                trigger,
                computed: t.computed,
                matched: t.matched,
                incorrect: t.incorrect,
                gold_tagged: t.gold_tagged,
                gold_missing: t.gold_missing,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub match_config: MatchConfig,
    pub headlines: Vec<HeadlineScore>,
    pub triggers: Vec<TriggerScore>,
    /// Gold headlines with no inference record.
    pub missing_records: Vec<String>,
}

fn cell(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| format!("{:.1}", round1(v)))
}

impl EvalReport {
    /// Per-trigger table, one row per trigger.
    pub fn trigger_tsv(&self) -> String {
        let mut out = String::from(
            "Inference Trigger\tPercentage of Accurate Inferences\tPercentage of Inaccurate Inferences\tPercentage of Missing Inferences\n",
        );
        for t in &self.triggers {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                t.trigger,
                cell(t.percent_accurate),
                cell(t.percent_inaccurate),
                cell(t.percent_missing)
            ));
        }
        out
    }

    /// Per-headline table.
    pub fn headline_tsv(&self) -> String {
        let mut out = String::from(
            "Headline\tGold\tComputed\tMatched\tPercentage of Correct Inferences\tPercentage of Incorrect results\n",
        );
        for h in &self.headlines {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{:.1}\t{:.1}\n",
                h.headline,
                h.gold_count,
                h.computed_count,
                h.matched_count,
                round1(h.percent_correct),
                round1(h.percent_incorrect)
            ));
        }
        out
    }
}

/// Score a whole run. Gold headlines are looked up in `records` by
/// normalized headline text; a gold headline without a record is scored
/// against an empty computed list and listed in `missing_records`.
pub fn evaluate(
    records: &[InferenceRecord],
    gold: &[GoldAnnotation],
    labels: &[HeadlineLabels],
    cfg: &MatchConfig,
) -> EvalReport {
    let by_text: HashMap<String, &InferenceRecord> = records
        .iter()
        .rev()
        .map(|r| (normalize(&r.headline), r))
        .collect();
    let label_map: HashMap<String, &HeadlineLabels> =
        labels.iter().map(|l| (normalize(&l.headline), l)).collect();
    let have_labels = !labels.is_empty();

    let mut missing_records = Vec::new();
    let mut scored = Vec::with_capacity(gold.len());
    for g in gold {
        let key = normalize(&g.headline);
        let computed: &[Inference] = match by_text.get(&key) {
            Some(r) => &r.inferences,
            None => {
                missing_records.push(g.headline.clone());
                &[]
            }
        };
        // With a labels file, a headline it does not mention has no wrong
        // inferences on record rather than falling back to automatic mode.
        let label = match label_map.get(&key) {
            Some(l) => Some(*l),
            None if have_labels => Some(empty_labels()),
            None => None,
        };
        let alignment = match_inferences(computed, g, cfg, label);
        scored.push(ScoredHeadline {
            computed,
            gold: g,
            alignment,
            labels: label,
        });
    }

    let headlines = scored
        .iter()
        .map(|s| {
            let texts: Vec<&str> = s.computed.iter().map(|i| i.text.as_str()).collect();
            score_headline(&s.gold.headline, &texts, &s.alignment, s.labels)
        })
        .collect();
    EvalReport {
        match_config: *cfg,
        headlines,
        triggers: score_by_trigger(&scored),
        missing_records,
    }
}

fn empty_labels() -> &'static HeadlineLabels {
    static EMPTY: LazyLock<HeadlineLabels> = LazyLock::new(HeadlineLabels::default);
    &EMPTY
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::GoldInference;
    use crate::engine::InferenceKind;

    fn exact() -> MatchConfig {
        MatchConfig::default()
    }

    fn inf(text: &str, trigger: &str) -> Inference {
        Inference {
            kind: InferenceKind::Presupposition,
            text: text.into(),
            trigger: trigger.into(),
            span: vec![1],
        }
    }

    fn gold(headline: &str, items: &[(&str, Option<&str>)]) -> GoldAnnotation {
        GoldAnnotation {
            headline: headline.into(),
            inferences: items
                .iter()
                .map(|(t, tag)| GoldInference {
                    text: t.to_string(),
                    trigger: tag.map(str::to_string),
                })
                .collect(),
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize("Olympic can be /can have ban"),
            "olympic can-have ban"
        );
        assert_eq!(normalize("England has Bank."), "england has bank");
        assert_eq!(normalize(""), "");
        assert_eq!(
            normalize("Brexit can be/ can have campaign"),
            normalize("Brexit can have campaign")
        );
        assert_eq!(normalize("X can be Y"), normalize("X can have Y"));
        assert_eq!(
            normalize("Labour MPs' resignations"),
            "labour mps resignations"
        );
        assert_eq!(
            normalize("company kept out 'subversives'"),
            normalize("company kept out subversives")
        );
    }

    #[test]
    fn match_examples() {
        let a = match_texts(
            &["Olympics has medals"],
            &["Olympics has medals"],
            &exact(),
            &[],
        );
        assert_eq!(a.matched(), 1);
        let a = match_texts(&["a b"], &["c d"], &exact(), &[]);
        assert_eq!(a.matched(), 0);
        assert_eq!(a.unmatched_computed, [0]);
        assert_eq!(a.unmatched_gold, [0]);
        let a = match_texts(
            &["Brexit can be/ can have campaign"],
            &["Brexit can have campaign"],
            &exact(),
            &[],
        );
        assert_eq!(a.matched(), 1);
    }

    #[test]
    fn duplicates_match_once_each() {
        let a = match_texts(&["x", "x", "x"], &["x", "x"], &exact(), &[]);
        assert_eq!(a.pairs, [(0, 0), (1, 1)]);
        assert_eq!(a.unmatched_computed, [2]);
    }

    #[test]
    fn jaccard_mode_pairs_near_misses() {
        let cfg = MatchConfig::new(MatchMode::TokenJaccard, 0.6).unwrap();
        // {olympics, has, medals, won} vs {olympics, has, medals}: 3/4.
        let a = match_texts(
            &["Olympics has medals won"],
            &["Olympics has medals"],
            &cfg,
            &[],
        );
        assert_eq!(a.matched(), 1);
        let a = match_texts(
            &["Olympics has medals won"],
            &["Olympics has medals"],
            &exact(),
            &[],
        );
        assert_eq!(a.matched(), 0);
        let cfg = MatchConfig::new(MatchMode::TokenJaccard, 0.8).unwrap();
        let a = match_texts(
            &["Olympics has medals won"],
            &["Olympics has medals"],
            &cfg,
            &[],
        );
        assert_eq!(a.matched(), 0);
    }

    #[test]
    fn jaccard_prefers_higher_weight() {
        let cfg = MatchConfig::new(MatchMode::TokenJaccard, 0.3).unwrap();
        let a = match_texts(&["a b c", "a b c d"], &["a b c d e"], &cfg, &[]);
        assert_eq!(a.pairs, [(1, 0)]);
    }

    #[test]
    fn threshold_range_checked() {
        assert_eq!(
            MatchConfig::new(MatchMode::TokenJaccard, 1.5),
            Err(EvalError::Threshold(1.5))
        );
        assert!(MatchConfig::new(MatchMode::TokenJaccard, 0.0).is_ok());
        assert_eq!(
            "jaccard".parse::<MatchMode>().unwrap(),
            MatchMode::TokenJaccard
        );
        assert!("fuzzy".parse::<MatchMode>().is_err());
    }

    #[test]
    fn score_examples() {
        let s = score_counts("", 5, 3, 2, 0);
        assert_eq!(
            (round1(s.percent_correct), round1(s.percent_incorrect)),
            (40.0, 0.0)
        );
        let s = score_counts("", 6, 3, 1, 1);
        assert_eq!(
            (round1(s.percent_correct), round1(s.percent_incorrect)),
            (16.7, 33.3)
        );
        let s = score_counts("", 4, 3, 3, 0);
        assert_eq!(
            (round1(s.percent_correct), round1(s.percent_incorrect)),
            (75.0, 0.0)
        );
        assert_eq!(score_counts("", 0, 0, 0, 0).percent_correct, 100.0);
        assert_eq!(score_counts("", 0, 2, 0, 2).percent_correct, 0.0);
        assert_eq!(score_counts("", 3, 0, 0, 0).percent_incorrect, 0.0);
    }

    #[test]
    fn automatic_mode_counts_unmatched_as_incorrect() {
        let c = ["a", "b", "c"];
        let a = match_texts(&c, &["a"], &exact(), &[]);
        let s = score_headline("h", &c, &a, None);
        assert_eq!(s.incorrect_count, 2);
        let labels = HeadlineLabels {
            headline: "h".into(),
            incorrect: vec!["C".into()],
            matched: vec![],
        };
        let s = score_headline("h", &c, &a, Some(&labels));
        assert_eq!(s.incorrect_count, 1);
    }

    #[test]
    fn judged_pairs_come_first() {
        let labels = HeadlineLabels {
            headline: "h".into(),
            incorrect: vec![],
            matched: vec![(
                "Korea can have deadline".into(),
                "North Korea has deadline".into(),
            )],
        };
        let c = [inf("Korea can have deadline", "compound")];
        let g = gold("h", &[("North Korea has deadline", None)]);
        assert_eq!(match_inferences(&c, &g, &exact(), None).matched(), 0);
        assert_eq!(
            match_inferences(&c, &g, &exact(), Some(&labels)).matched(),
            1
        );
    }

    #[test]
    fn trigger_saturation() {
        let c = [inf("UK is already slow", "further")];
        let g = gold("h", &[("UK is already slow", Some("further"))]);
        let alignment = match_inferences(&c, &g, &exact(), None);
        let rows = score_by_trigger(&[ScoredHeadline {
            computed: &c,
            gold: &g,
            alignment,
            labels: None,
        }]);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].percent_accurate, Some(100.0));
        assert_eq!(rows[0].percent_inaccurate, Some(0.0));
        assert_eq!(rows[0].percent_missing, Some(0.0));
    }

    #[test]
    fn trigger_without_tagged_gold_has_no_missing_column() {
        let c = [inf("x has y", "nmod_of")];
        let g = gold("h", &[("x has y", None)]);
        let alignment = match_inferences(&c, &g, &exact(), None);
        let rows = score_by_trigger(&[ScoredHeadline {
            computed: &c,
            gold: &g,
            alignment,
            labels: None,
        }]);
        assert_eq!(rows[0].percent_accurate, Some(100.0));
        assert_eq!(rows[0].percent_missing, None);
    }

    #[test]
    fn report_flags_missing_records() {
        let g = vec![gold("Nothing here", &[("x", None)])];
        let r = evaluate(&[], &g, &[], &exact());
        assert_eq!(r.missing_records, ["Nothing here"]);
        assert_eq!(r.headlines[0].percent_correct, 0.0);
        assert!(r.trigger_tsv().starts_with("Inference Trigger\t"));
        assert_eq!(r.headline_tsv().lines().count(), 2);
    }

    #[test]
    fn labels_reader() {
        let doc = r#"{"headline": "h", "incorrect": ["a"]}

{"headline": "k", "incorrect": [], "matched": [["x", "y"]]}"#;
        let l = read_labels(doc).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l[1].matched, [("x".to_string(), "y".to_string())]);
        assert!(matches!(
            read_labels("{"),
            Err(EvalError::Labels { line: 1, .. })
        ));
    }
}
