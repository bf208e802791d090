//! CoNLL-U reader.

use super::{build_headline, DependencyEdge, IngestError, ParsedHeadline, Token, ROOT_GLOSS};

struct Row {
    line: usize,
    index: usize,
    head: usize,
    deprel: String,
}

#[derive(Default)]
struct Pending {
    sent_id: Option<String>,
    text: Option<String>,
    tokens: Vec<Token>,
    rows: Vec<Row>,
}

impl Pending {
    fn is_empty(&self) -> bool {
        self.tokens.is_empty() && self.sent_id.is_none() && self.text.is_none()
    }

    fn finish(self, ordinal: usize) -> Result<ParsedHeadline, IngestError> {
        let raw_text = self.text.unwrap_or_else(|| {
            self.tokens
                .iter()
                .map(|t| t.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        });
        let gloss = |i: usize| -> Result<String, IngestError> {
            if i == 0 {
                return Ok(ROOT_GLOSS.to_string());
            }
            self.tokens
                .iter()
                .find(|t| t.index == i)
                .map(|t| t.surface.clone())
                .ok_or_else(|| IngestError::Consistency {
                    headline: raw_text.clone(),
                    message: format!("head index {i} does not name a token"),
                })
        };
        let mut edges = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let governor_gloss = gloss(row.head).map_err(|e| match e {
                IngestError::Consistency { headline, message } => IngestError::Consistency {
                    headline,
                    message: format!("line {}: {message}", row.line),
                },
                other => other,
            })?;
            edges.push(DependencyEdge::new(
                row.deprel.clone(),
                row.head,
                governor_gloss,
                row.index,
                gloss(row.index)?,
            ));
        }
        let id = self.sent_id.unwrap_or_else(|| ordinal.to_string());
        build_headline(id, raw_text, self.tokens, edges)
    }
}

/// Read every sentence of a CoNLL-U document.
///
/// Penn tags come from the XPOS column; when it is `_` the UPOS tag is
/// mapped to a coarse Penn equivalent. Multi-word-token ranges (`1-2`) and
/// empty nodes (`1.1`) are skipped. Sentences without a `# sent_id` comment
/// are numbered from 1 in document order.
pub fn parse_conllu(document: &str) -> Result<Vec<ParsedHeadline>, IngestError> {
    let mut out = Vec::new();
    let mut pending = Pending::default();

    for (lineno, line) in document.lines().enumerate() {
        let lineno = lineno + 1;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.trim().is_empty() {
            if !pending.is_empty() {
                let ordinal = out.len() + 1;
                out.push(std::mem::take(&mut pending).finish(ordinal)?);
            }
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                match key.trim() {
                    "sent_id" => pending.sent_id = Some(value.trim().to_string()),
                    "text" => pending.text = Some(value.trim().to_string()),
                    _ => {}
                }
            }
            continue;
        }

        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() != 10 {
            return Err(IngestError::ColumnCount {
                line: lineno,
                found: cols.len(),
            });
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let index = parse_index(cols[0], lineno, "ID")?;
        let head = parse_index(cols[6], lineno, "HEAD")?;
        let pos = if cols[4] != "_" {
            cols[4].to_string()
        } else {
            upos_to_ptb(cols[3]).to_string()
        };
        let mut token = Token::new(index, cols[1], pos);
        if cols[2] != "_" {
            token.lemma = Some(cols[2].to_string());
        }
        pending.tokens.push(token);
        pending.rows.push(Row {
            line: lineno,
            index,
            head,
            deprel: cols[7].to_string(),
        });
    }
    if !pending.is_empty() {
        let ordinal = out.len() + 1;
        out.push(pending.finish(ordinal)?);
    }
    Ok(out)
}

fn parse_index(value: &str, line: usize, field: &'static str) -> Result<usize, IngestError> {
    value.parse().map_err(|_| IngestError::BadNumber {
        line,
        field,
        value: value.to_string(),
    })
}

fn upos_to_ptb(upos: &str) -> &'static str {
    match upos {
        "NOUN" => "NN",
        "PROPN" => "NNP",
        "VERB" => "VB",
        "AUX" => "MD",
        "ADJ" => "JJ",
        "ADV" => "RB",
        "PRON" => "PRP",
        "DET" => "DT",
        "ADP" => "IN",
        "SCONJ" => "IN",
        "CCONJ" => "CC",
        "NUM" => "CD",
        "PART" => "RP",
        "INTJ" => "UH",
        "PUNCT" => ".",
        "SYM" => "SYM",
        _ => "FW",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RESCUE: &str = "# sent_id = rescue\n\
# text = Rescue rules by Bank of England will divide Britain\n\
1\tRescue\trescue\tNOUN\tNN\t_\t2\tcompound\t_\t_\n\
2\trules\trule\tNOUN\tNNS\t_\t8\tnsubj\t_\t_\n\
3\tby\tby\tADP\tIN\t_\t4\tcase\t_\t_\n\
4\tBank\tBank\tPROPN\tNNP\t_\t2\tnmod\t_\t_\n\
5\tof\tof\tADP\tIN\t_\t6\tcase\t_\t_\n\
6\tEngland\tEngland\tPROPN\tNNP\t_\t4\tnmod\t_\t_\n\
7\twill\twill\tAUX\tMD\t_\t8\taux\t_\t_\n\
8\tdivide\tdivide\tVERB\tVB\t_\t0\troot\t_\t_\n\
9\tBritain\tBritain\tPROPN\tNNP\t_\t8\tobj\t_\t_\n";

    #[test]
    fn empty_document() {
        assert!(parse_conllu("").unwrap().is_empty());
        assert!(parse_conllu("\n\n").unwrap().is_empty());
    }

    #[test]
    fn reads_rescue_rules_sentence() {
        let parsed = parse_conllu(RESCUE).unwrap();
        assert_eq!(parsed.len(), 1);
        let h = &parsed[0];
        assert_eq!(h.headline_id, "rescue");
        let has = |dep: &str, g: &str, d: &str| !h.edges_with(dep, Some(g), Some(d)).is_empty();
        assert!(has("nmod", "rules", "Bank"));
        assert!(has("case", "England", "of"));
        assert!(has("nmod", "Bank", "England"));
        assert!(has("aux", "divide", "will"));
        assert!(has("dobj", "divide", "Britain"));
        let dobj = h.edges_with("dobj", None, None)[0];
        assert_eq!((dobj.governor, dobj.dependent), (8, 9));
    }

    #[test]
    fn skips_multiword_and_empty_nodes() {
        let doc = "1-2\tIt's\t_\t_\t_\t_\t_\t_\t_\t_\n\
1\tIt\tit\tPRON\tPRP\t_\t3\tnsubj\t_\t_\n\
2\t's\tbe\tAUX\tVBZ\t_\t3\tcop\t_\t_\n\
2.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n\
3\tready\tready\tADJ\t_\t_\t0\troot\t_\t_\n";
        let h = &parse_conllu(doc).unwrap()[0];
        assert_eq!(h.tokens().len(), 3);
        assert_eq!(h.pos(3), "JJ");
        assert_eq!(h.headline_id, "1");
        assert_eq!(h.raw_text, "It 's ready");
    }

    #[test]
    fn dangling_head_is_an_error() {
        let doc = "1\ta\t_\tNOUN\tNN\t_\t0\troot\t_\t_\n\
2\tb\t_\tNOUN\tNN\t_\t1\tdep\t_\t_\n\
3\tc\t_\tNOUN\tNN\t_\t1\tdep\t_\t_\n\
4\td\t_\tNOUN\tNN\t_\t99\tdep\t_\t_\n\
5\te\t_\tNOUN\tNN\t_\t1\tdep\t_\t_\n";
        let err = parse_conllu(doc).unwrap_err();
        assert!(
            matches!(err, IngestError::Consistency { ref message, .. } if message.contains("99"))
        );
    }

    #[test]
    fn column_and_number_errors_name_the_line() {
        let err = parse_conllu("1\ta\tb\n").unwrap_err();
        assert_eq!(err, IngestError::ColumnCount { line: 1, found: 3 });
        let err = parse_conllu("# c\n1\ta\t_\tNOUN\tNN\t_\tx\troot\t_\t_\n").unwrap_err();
        assert!(matches!(
            err,
            IngestError::BadNumber {
                line: 2,
                field: "HEAD",
                ..
            }
        ));
    }
}
