#![allow(dead_code)]

use std::path::PathBuf;

use headline_inference::parse::ParsedHeadline;
use proptest::prelude::*;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub const VOCAB: &[(&str, &str)] = &[
    ("What", "WP"),
    ("How", "WRB"),
    ("will", "MD"),
    ("not", "RB"),
    ("again", "RB"),
    ("further", "RB"),
    ("but", "CC"),
    ("of", "IN"),
    ("before", "IN"),
    ("during", "IN"),
    ("to", "TO"),
    ("the", "DT"),
    ("says", "VBZ"),
    ("returns", "VBZ"),
    ("stopped", "VBD"),
    ("managed", "VBD"),
    ("blames", "VBZ"),
    ("regrets", "VBZ"),
    ("broadcast", "VB"),
    ("slow", "VB"),
    ("rejects", "VBZ"),
    ("went", "VBD"),
    ("coming", "VBG"),
    ("is", "VBZ"),
    ("Britain", "NNP"),
    ("bank", "NN"),
    ("plans", "NNS"),
    ("market", "NN"),
    ("ready", "JJ"),
    ("'s", "POS"),
    ("\"", "``"),
    ("out", "RP"),
];

pub const LABELS: &[&str] = &[
    "nsubj",
    "nsubjpass",
    "dobj",
    "obj",
    "nmod",
    "obl",
    "case",
    "mark",
    "aux",
    "auxpass",
    "cop",
    "neg",
    "advmod",
    "amod",
    "compound",
    "compound:prt",
    "det",
    "nmod:poss",
    "cc",
    "conj",
    "xcomp",
    "ccomp",
    "advcl",
    "acl",
    "dep",
    "nummod",
    "punct",
];

/// A random tree: `(surface, pos)` tokens plus `(label, governor, dependent)`
/// triples with exactly one root.
#[derive(Debug, Clone)]
pub struct RandomTree {
    pub tokens: Vec<(&'static str, &'static str)>,
    pub edges: Vec<(&'static str, usize, usize)>,
    pub question: bool,
}

impl RandomTree {
    pub fn raw_text(&self) -> String {
        let mut s = self
            .tokens
            .iter()
            .map(|t| t.0)
            .collect::<Vec<_>>()
            .join(" ");
        if self.question {
            s.push('?');
        }
        s
    }

    pub fn headline(&self) -> ParsedHeadline {
        ParsedHeadline::from_triples("r", self.raw_text(), &self.tokens, &self.edges)
            .expect("random tree is a valid headline")
    }
}

pub fn random_tree(max_tokens: usize) -> impl Strategy<Value = RandomTree> {
    (1..=max_tokens).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..VOCAB.len(), n),
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            proptest::collection::vec(any::<prop::sample::Index>(), n),
            proptest::collection::vec(0..LABELS.len(), n),
            any::<bool>(),
        )
            .prop_map(|(words, order, parents, labels, question)| {
                let tokens = words.iter().map(|&w| VOCAB[w]).collect();
                let mut edges = vec![("root", 0, order[0])];
                for k in 1..order.len() {
                    let parent = order[parents[k].index(k)];
                    edges.push((LABELS[labels[k]], parent, order[k]));
                }
                RandomTree {
                    tokens,
                    edges,
                    question,
                }
            })
    })
}
