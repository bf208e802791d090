use super::{DependencyEdge, Token};

/// Map UD v2 relation labels onto the Stanford-dependency names the rules
/// are written against.
///
/// `obj` becomes `dobj`, `obl` (and its subtypes) becomes `nmod`, `nn`
/// becomes `compound`, and a `conj` whose coordination is marked by "but"
/// becomes `conj:but`. Anything else passes through untouched, so the
/// function is idempotent.
pub fn normalize_labels(edges: &[DependencyEdge], _tokens: &[Token]) -> Vec<DependencyEdge> {
    let mut out: Vec<DependencyEdge> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if let Some(label) = rename(&e.dep) {
                e.dep = label;
            }
            e
        })
        .collect();

    let but_markers: Vec<(usize, usize)> = out
        .iter()
        .filter(|e| e.dep == "cc" && e.dependent_gloss.eq_ignore_ascii_case("but"))
        .map(|e| (e.governor, e.dependent))
        .collect();
    if but_markers.is_empty() {
        return out;
    }

    let mut rewrite = Vec::new();
    for &(marked, but_at) in &but_markers {
        // UD v2 hangs the cc on the second conjunct.
        if let Some(i) = out
            .iter()
            .position(|e| e.dep == "conj" && e.dependent == marked)
        {
            rewrite.push(i);
            continue;
        }
        // Older schemes hang it on the first conjunct; take the conjunct that
        // directly follows the "but".
        let next = out
            .iter()
            .enumerate()
            .filter(|(_, e)| e.dep == "conj" && e.governor == marked && e.dependent > but_at)
            .min_by_key(|(_, e)| e.dependent)
            .map(|(i, _)| i);
        if let Some(i) = next {
            rewrite.push(i);
        }
    }
    for i in rewrite {
        out[i].dep = "conj:but".to_string();
    }
    out
}

fn rename(label: &str) -> Option<String> {
    match label {
        "obj" => Some("dobj".into()),
        "obl" => Some("nmod".into()),
        "nn" => Some("compound".into()),
        _ => label.strip_prefix("obl:").map(|sub| format!("nmod:{sub}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dep: &str, g: usize, gg: &str, d: usize, dg: &str) -> DependencyEdge {
        DependencyEdge::new(dep, g, gg, d, dg)
    }

    #[test]
    fn table_lookups() {
        let out = normalize_labels(
            &[
                e("obj", 8, "divide", 9, "Britain"),
                e("obl:tmod", 2, "x", 3, "y"),
                e("nsubj", 8, "divide", 2, "rules"),
            ],
            &[],
        );
        assert_eq!(out[0], e("dobj", 8, "divide", 9, "Britain"));
        assert_eq!(out[1].dep, "nmod:tmod");
        assert_eq!(out[2].dep, "nsubj");
    }

    #[test]
    fn but_on_second_conjunct() {
        let out = normalize_labels(
            &[
                e("conj", 4, "ready", 8, "come"),
                e("cc", 8, "come", 5, "but"),
            ],
            &[],
        );
        assert_eq!(out[0].dep, "conj:but");
        assert_eq!(out[1].dep, "cc");
    }

    #[test]
    fn but_on_first_conjunct_picks_following_conjunct() {
        let out = normalize_labels(
            &[
                e("conj", 1, "cheap", 3, "fast"),
                e("cc", 1, "cheap", 4, "but"),
                e("conj", 1, "cheap", 5, "slow"),
            ],
            &[],
        );
        assert_eq!(out[0].dep, "conj");
        assert_eq!(out[2].dep, "conj:but");
    }

    #[test]
    fn plain_and_is_untouched() {
        let edges = [e("conj", 1, "a", 3, "b"), e("cc", 3, "b", 2, "and")];
        assert_eq!(normalize_labels(&edges, &[]), edges.to_vec());
    }
}
