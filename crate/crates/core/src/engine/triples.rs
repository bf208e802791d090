//! Subject-predicate-object statements read straight off the headline.

use super::context::{is_nmod, Ctx};
use super::{Inference, InferenceKind, RuleId};

/// For each verb with a subject: "S P O" when there is a direct object, and
/// "S P [O] prep N" for each nominal modifier of the verb or the object.
pub(crate) fn extract_triplets(cx: &Ctx<'_>) -> Vec<Inference> {
    let mut out = Vec::new();
    for t in cx.h.tokens() {
        let v = t.index;
        if !cx.is_verb(v) {
            continue;
        }
        let Some(s) = cx.subject(v) else { continue };
        let subj = cx.phrase_tokens(s);
        let pred = cx.predicate_tokens(v);
        let mut head = vec![cx.render(&subj), cx.render(&pred)];
        let mut base_span: Vec<usize> = subj.iter().chain(&pred).copied().collect();

        let obj = cx.first(v, "dobj");
        let mut hosts = vec![v];
        if let Some(o) = obj {
            let toks = cx.phrase_tokens(o);
            head.push(cx.render(&toks));
            base_span.extend(toks);
            out.push(Inference::new(
                InferenceKind::ExplicitTriple,
                head.join(" "),
                RuleId::Triple,
                base_span.clone(),
            ));
            hosts.push(o);
        }

        let mut mods: Vec<usize> = hosts
            .iter()
            .flat_map(|&x| cx.dependents(x, is_nmod))
            .filter(|n| !base_span.contains(n))
            .collect();
        mods.sort_unstable();
        mods.dedup();
        for n in mods {
            let (_, text, toks) = cx.attachment(n);
            let mut span = base_span.clone();
            span.extend(toks);
            out.push(Inference::new(
                InferenceKind::ExplicitTriple,
                format!("{} {text}", head.join(" ")),
                RuleId::Triple,
                span,
            ));
        }
    }
    out
}
