use headline_inference::morphology::{conjugate, lemma, Morphology, VerbForm, REGULAR_SAMPLE};
use proptest::prelude::*;

#[test]
fn oracle_over_table_and_sample() {
    let m = Morphology::bundled();
    let mut bases: Vec<&str> = m.irregulars().iter().map(|e| e.base.as_str()).collect();
    bases.extend(REGULAR_SAMPLE);
    let mut failures = Vec::new();
    for b in &bases {
        for f in VerbForm::ALL {
            let surface = m.conjugate(b, f);
            let back = m.lemma(&surface, f.tag());
            if back != *b {
                failures.push(format!("{b} -{f}-> {surface} -> {back}"));
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(m.irregulars().len() >= 150);
}

#[test]
fn headline_verb_forms() {
    assert_eq!(conjugate("reject", VerbForm::Past), "rejected");
    assert_eq!(conjugate("come", VerbForm::Gerund), "coming");
    assert_eq!(
        conjugate("broadcast", VerbForm::PastParticiple),
        "broadcast"
    );
    assert_eq!(conjugate("will", VerbForm::Past), "will");
    assert_eq!(lemma("rejects", "VBZ"), "reject");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn base_form_is_identity(b in "[a-z]{1,12}") {
        prop_assert_eq!(conjugate(&b, VerbForm::Base), b);
    }

    #[test]
    fn never_empty(b in "\\PC{1,12}", i in 0usize..5) {
        prop_assert!(!conjugate(&b, VerbForm::ALL[i]).is_empty());
    }

    #[test]
    fn regular_past_adds_ed(b in "[a-z]{1,6}(nd|rk|st|lp|mp|nt|rt|sk|ft|ct|ain|oil|eam)") {
        prop_assume!(Morphology::bundled().irregular(&b).is_none());
        prop_assert_eq!(conjugate(&b, VerbForm::Past), format!("{b}ed"));
    }
}
