mod common;

use common::random_tree;
use headline_inference::corpus::preprocess;
use headline_inference::engine::{infer_all, infer_raw, EngineConfig, RuleId};
use proptest::prelude::*;

fn cfg_with(mask: u16) -> EngineConfig {
    let rules = RuleId::ALL
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, r)| r);
    EngineConfig::default().with_rules(rules)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn no_empty_inference(tree in random_tree(10), relaxed in any::<bool>()) {
        let h = tree.headline();
        let p = preprocess(&tree.raw_text());
        let cfg = EngineConfig::default().with_relaxed_nmod(relaxed);
        for inf in infer_raw(&h, &p, &cfg) {
            prop_assert!(!inf.text.trim().is_empty(), "{inf:?}");
            prop_assert!(!inf.span.is_empty(), "{inf:?}");
        }
    }

    #[test]
    fn spans_are_sound(tree in random_tree(10)) {
        let h = tree.headline();
        let p = preprocess(&tree.raw_text());
        for inf in infer_all(&h, &p, &EngineConfig::default().with_relaxed_nmod(true)) {
            prop_assert!(inf.span.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(inf.span.iter().all(|&i| h.token(i).is_some()), "{inf:?}");
            let text = inf.text.to_lowercase();
            let mentioned = inf.span.iter().any(|&i| {
                let s = h.surface(i).to_lowercase();
                s.chars().any(char::is_alphanumeric) && text.contains(&s)
            });
            // Question and quote inferences are licensed by the wh-word or
            // the quote marks, which the text rewrites.
            let site = match inf.trigger.as_str() {
                "question" => inf.span.iter().any(|&i| matches!(h.pos(i), "WP" | "WRB")),
                "quotes" => true,
                _ => false,
            };
            prop_assert!(mentioned || site, "{inf:?} over {:?}", tree.tokens);
        }
    }

    #[test]
    fn deterministic(tree in random_tree(10)) {
        let h = tree.headline();
        let p = preprocess(&tree.raw_text());
        let cfg = EngineConfig::default();
        let a = serde_json::to_string(&infer_all(&h, &p, &cfg)).unwrap();
        let b = serde_json::to_string(&infer_all(&h, &p, &cfg)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn enabling_rules_only_adds(tree in random_tree(10), small in any::<u16>(), extra in any::<u16>()) {
        let h = tree.headline();
        let p = preprocess(&tree.raw_text());
        let fewer = infer_raw(&h, &p, &cfg_with(small));
        let mut more = infer_raw(&h, &p, &cfg_with(small | extra));
        for inf in fewer {
            let pos = more.iter().position(|m| *m == inf);
            prop_assert!(pos.is_some(), "lost {inf:?}");
            more.remove(pos.unwrap());
        }
    }

    #[test]
    fn future_fires_iff_will_and_dobj_share_a_governor(tree in random_tree(10)) {
        let h = tree.headline();
        let edges = h.edges();
        let expected = edges.iter().any(|a| {
            a.dep == "aux"
                && a.dependent_gloss.eq_ignore_ascii_case("will")
                && edges.iter().any(|o| {
                    o.dep == "dobj"
                        && o.governor == a.governor
                        && o.dependent_gloss.chars().any(char::is_alphanumeric)
                })
        });
        let cfg = EngineConfig::default().with_rules([RuleId::Future]);
        let got = infer_raw(&h, &preprocess(&tree.raw_text()), &cfg);
        prop_assert_eq!(!got.is_empty(), expected);
    }
}

#[test]
fn zero_rule_headline_gives_nothing() {
    let h = headline_inference::parse::ParsedHeadline::from_triples(
        "z",
        "Hello",
        &[("Hello", "UH")],
        &[("root", 0, 1)],
    )
    .unwrap();
    assert!(infer_all(&h, &preprocess("Hello"), &EngineConfig::default()).is_empty());
}
