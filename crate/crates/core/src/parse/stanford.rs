//! CoreNLP-style JSON: one object per headline with `tokens` and
//! `dependencies` arrays. Dependency objects use the CoreNLP tuple keys
//! verbatim.

use serde_json::{json, Map, Value};

use super::{build_headline, DependencyEdge, IngestError, ParsedHeadline, Token};

/// Parse one headline object.
pub fn parse_stanford_json(document: &str) -> Result<ParsedHeadline, IngestError> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| IngestError::Json(e.to_string()))?;
    from_value(&value, 1)
}

/// Parse a file of headline objects: either a JSON array or one object per
/// line. Headlines without an `id` key are numbered from 1.
pub fn parse_stanford_document(document: &str) -> Result<Vec<ParsedHeadline>, IngestError> {
    let trimmed = document.trim_start();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    if trimmed.starts_with('[') {
        let value: Value =
            serde_json::from_str(trimmed).map_err(|e| IngestError::Json(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| IngestError::Json("expected an array".into()))?;
        return items
            .iter()
            .enumerate()
            .map(|(i, v)| from_value(v, i + 1))
            .collect();
    }
    let mut out = Vec::new();
    for (lineno, line) in document.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(line)
            .map_err(|e| IngestError::Json(format!("line {}: {e}", lineno + 1)))?;
        out.push(from_value(&value, out.len() + 1)?);
    }
    Ok(out)
}

fn field<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    context: &str,
) -> Result<&'a Value, IngestError> {
    obj.get(key).ok_or_else(|| IngestError::MissingKey {
        key: key.to_string(),
        context: context.to_string(),
    })
}

fn str_field(obj: &Map<String, Value>, key: &str, context: &str) -> Result<String, IngestError> {
    field(obj, key, context)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| wrong_type(key, context))
}

fn index_field(obj: &Map<String, Value>, key: &str, context: &str) -> Result<usize, IngestError> {
    field(obj, key, context)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| wrong_type(key, context))
}

fn wrong_type(key: &str, context: &str) -> IngestError {
    IngestError::WrongType {
        key: key.to_string(),
        context: context.to_string(),
    }
}

fn as_object<'a>(value: &'a Value, context: &str) -> Result<&'a Map<String, Value>, IngestError> {
    value
        .as_object()
        .ok_or_else(|| IngestError::Json(format!("{context} is not an object")))
}

fn from_value(value: &Value, ordinal: usize) -> Result<ParsedHeadline, IngestError> {
    let obj = as_object(value, "headline")?;
    let headline = str_field(obj, "headline", "headline object")?;
    let id = match obj.get("id") {
        Some(Value::String(s)) => s.clone(),
        Some(Value::Number(n)) => n.to_string(),
        Some(_) => return Err(wrong_type("id", "headline object")),
        None => ordinal.to_string(),
    };

    let tokens = field(obj, "tokens", "headline object")?
        .as_array()
        .ok_or_else(|| wrong_type("tokens", "headline object"))?;
    let mut toks = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        let ctx = format!("token #{}", i + 1);
        let t = as_object(t, &ctx)?;
        let mut token = Token::new(
            index_field(t, "index", &ctx)?,
            str_field(t, "word", &ctx)?,
            str_field(t, "pos", &ctx)?,
        );
        if let Some(lemma) = t.get("lemma") {
            token.lemma = Some(
                lemma
                    .as_str()
                    .ok_or_else(|| wrong_type("lemma", &ctx))?
                    .to_string(),
            );
        }
        toks.push(token);
    }

    let deps = field(obj, "dependencies", "headline object")?
        .as_array()
        .ok_or_else(|| wrong_type("dependencies", "headline object"))?;
    let mut edges = Vec::with_capacity(deps.len());
    for (i, d) in deps.iter().enumerate() {
        let ctx = format!("dependency #{}", i + 1);
        let d = as_object(d, &ctx)?;
        edges.push(DependencyEdge {
            dep: str_field(d, "dep", &ctx)?,
            governor: index_field(d, "governor", &ctx)?,
            governor_gloss: str_field(d, "governorGloss", &ctx)?,
            dependent: index_field(d, "dependent", &ctx)?,
            dependent_gloss: str_field(d, "dependentGloss", &ctx)?,
        });
    }
    build_headline(id, headline, toks, edges)
}

/// Render a headline back into the JSON shape read by [`parse_stanford_json`].
pub fn to_stanford_json(h: &ParsedHeadline) -> Value {
    let tokens: Vec<Value> = h
        .tokens()
        .iter()
        .map(|t| {
            let mut v = json!({ "index": t.index, "word": t.surface, "pos": t.pos });
            if let Some(lemma) = &t.lemma {
                v["lemma"] = json!(lemma);
            }
            v
        })
        .collect();
    json!({
        "id": h.headline_id,
        "headline": h.raw_text,
        "tokens": tokens,
        "dependencies": h.edges(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIVIDE: &str = r#"{
      "headline": "Britain divide",
      "tokens": [{"index": 1, "word": "Britain", "pos": "NNP"}, {"index": 2, "word": "divide", "pos": "VB"}],
      "dependencies": [
        {"dep": "root", "governor": 0, "governorGloss": "ROOT", "dependent": 2, "dependentGloss": "divide"},
        {"dep": "dobj", "governor": 2, "governorGloss": "divide", "dependent": 1, "dependentGloss": "Britain"}
      ]
    }"#;

    #[test]
    fn reads_tuple_fields_verbatim() {
        let h = parse_stanford_json(DIVIDE).unwrap();
        assert_eq!(
            h.edges()[1],
            DependencyEdge::new("dobj", 2, "divide", 1, "Britain")
        );
        assert_eq!(h.headline_id, "1");
    }

    #[test]
    fn missing_key_is_named() {
        let doc = DIVIDE.replace("\"governorGloss\": \"divide\", ", "");
        let err = parse_stanford_json(&doc).unwrap_err();
        assert_eq!(
            err,
            IngestError::MissingKey {
                key: "governorGloss".into(),
                context: "dependency #2".into()
            }
        );
    }

    #[test]
    fn gloss_mismatch_is_a_consistency_error() {
        let doc = DIVIDE.replace(r#""word": "divide""#, r#""word": "divides""#);
        assert!(matches!(
            parse_stanford_json(&doc),
            Err(IngestError::Consistency { .. })
        ));
    }

    #[test]
    fn single_token_without_edges_has_no_root() {
        let doc = r#"{"headline": "Brexit", "tokens": [{"index": 1, "word": "Brexit", "pos": "NNP"}], "dependencies": []}"#;
        assert!(matches!(
            parse_stanford_json(doc),
            Err(IngestError::Consistency { .. })
        ));
    }

    #[test]
    fn document_forms() {
        assert!(parse_stanford_document("  ").unwrap().is_empty());
        let line = DIVIDE.replace('\n', " ");
        let jsonl = format!("{line}\n\n{line}\n");
        let hs = parse_stanford_document(&jsonl).unwrap();
        assert_eq!(hs.len(), 2);
        assert_eq!(hs[1].headline_id, "2");
        let array = format!("[{DIVIDE}]");
        assert_eq!(parse_stanford_document(&array).unwrap().len(), 1);
    }

    #[test]
    fn renders_back() {
        let h = parse_stanford_json(DIVIDE).unwrap();
        let again = parse_stanford_json(&to_stanford_json(&h).to_string()).unwrap();
        assert_eq!(h, again);
    }
}
