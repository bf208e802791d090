use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use headline_inference::batch::{infer_corpus, Job};
use headline_inference::corpus::{clean, parse_dataset, parse_gold, HeadlineRecord};
use headline_inference::engine::{
    parse_rule_list, read_records, write_records, ConfigFile, EngineConfig, InferenceRecord,
    TriggerLexicon,
};
use headline_inference::evaluation::{evaluate, read_labels, MatchConfig, MatchMode};
use headline_inference::morphology::{Morphology, VerbForm};
use headline_inference::parse::{parse_conllu, parse_stanford_document, ParsedHeadline};
use serde::Serialize;
use sha2::{Digest, Sha256};

const LEXICON_DIR_ENV: &str = "HEADLINE_INFER_LEXICON_DIR";

#[derive(Parser)]
#[command(
    name = "headline-infer",
    version,
    about = "Presupposition inference for news headlines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the trigger rules over a parsed dataset.
    Infer(InferArgs),
    /// Score inferences against gold annotations.
    Eval(EvalArgs),
    /// Conjugate a verb.
    Morph {
        verb: String,
        /// base, past, participle, gerund or 3sg
        form: String,
    },
    /// Count headlines and sources in a dataset.
    Stats {
        #[arg(long)]
        dataset: PathBuf,
    },
}

#[derive(Args)]
struct InferArgs {
    #[arg(long)]
    dataset: PathBuf,
    /// CoNLL-U (.conllu) or CoreNLP-style JSON / JSON Lines.
    #[arg(long)]
    parses: PathBuf,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output JSON Lines; stdout when absent. The run manifest is written
    /// next to it as <out>.manifest.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fail when any headline has no parse.
    #[arg(long)]
    strict: bool,
    /// Comma-separated rule ids; overrides the config file.
    #[arg(long)]
    rules: Option<String>,
    #[arg(long)]
    relaxed_nmod: bool,
    /// Directory holding lexicon.tsv and/or irregular_verbs.tsv.
    #[arg(long, env = LEXICON_DIR_ENV)]
    lexicon_dir: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// JSON Lines written by `infer`.
    #[arg(long)]
    inferences: PathBuf,
    #[arg(long)]
    gold: PathBuf,
    /// JSON Lines of human judgments: {"headline", "incorrect", "matched"}.
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long, default_value = "exact")]
    match_mode: String,
    #[arg(long, default_value_t = 0.6)]
    jaccard_threshold: f64,
    /// Report JSON; a per-trigger TSV goes to the same path with .tsv.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

/// Engine configuration plus the exact table texts it was built from.
struct LoadedConfig {
    engine: EngineConfig,
    lexicon_text: String,
    irregular_text: String,
}

impl LoadedConfig {
    /// sha256 over every setting and both data tables.
    fn hash(&self) -> String {
        let e = &self.engine;
        let mut h = Sha256::new();
        for part in [
            format!("rules={}", e.rule_list()),
            format!("verb_pattern={}", e.verb_pattern.as_str()),
            format!("compound_rendering={}", e.compound_rendering.as_str()),
            format!("relaxed_nmod={}", e.relaxed_nmod),
        ] {
            h.update(part.as_bytes());
            h.update(b"\n");
        }
        h.update(b"lexicon\n");
        h.update(self.lexicon_text.as_bytes());
        h.update(b"\nirregular_verbs\n");
        h.update(self.irregular_text.as_bytes());
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn load_config(args: &InferArgs) -> Result<LoadedConfig> {
    let mut engine = EngineConfig::default();
    let mut lexicon_path: Option<PathBuf> = None;
    let mut irregular_path: Option<PathBuf> = None;

    if let Some(dir) = &args.lexicon_dir {
        let lex = dir.join("lexicon.tsv");
        let irr = dir.join("irregular_verbs.tsv");
        if !lex.exists() && !irr.exists() {
            bail!(
                "{} holds neither lexicon.tsv nor irregular_verbs.tsv",
                dir.display()
            );
        }
        lexicon_path = lex.exists().then_some(lex);
        irregular_path = irr.exists().then_some(irr);
    }

    if let Some(path) = &args.config {
        let file =
            ConfigFile::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?;
        file.apply(&mut engine);
        let base = path.parent().unwrap_or(Path::new("."));
        if let Some(p) = &file.lexicon {
            lexicon_path = Some(base.join(p));
        }
        if let Some(p) = &file.irregular_verbs {
            irregular_path = Some(base.join(p));
        }
    }

    if let Some(list) = &args.rules {
        engine.rules = parse_rule_list(list)?;
    }
    if args.relaxed_nmod {
        engine.relaxed_nmod = true;
    }

    let lexicon_text = match &lexicon_path {
        Some(p) => {
            let text = read(p)?;
            let lex =
                TriggerLexicon::from_tsv(&text).with_context(|| format!("in {}", p.display()))?;
            engine.lexicon = Arc::new(lex);
            text
        }
        None => TriggerLexicon::bundled_source().to_string(),
    };
    let irregular_text = match &irregular_path {
        Some(p) => {
            let text = read(p)?;
            let m = Morphology::from_tsv(&text).with_context(|| format!("in {}", p.display()))?;
            engine.morphology = Arc::new(m);
            text
        }
        None => Morphology::bundled_table_source().to_string(),
    };
    Ok(LoadedConfig {
        engine,
        lexicon_text,
        irregular_text,
    })
}

fn load_parses(path: &Path) -> Result<Vec<ParsedHeadline>> {
    let text = read(path)?;
    let is_conllu = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("conllu") || e.eq_ignore_ascii_case("conll"));
    let parsed = if is_conllu {
        parse_conllu(&text)
    } else {
        parse_stanford_document(&text)
    };
    parsed.with_context(|| format!("cannot parse {}", path.display()))
}

/// Pair each dataset record with a parse: by id equal to the record's line
/// number, then by headline text, then by position.
fn key_parses(records: &[HeadlineRecord], parses: &[ParsedHeadline]) -> Vec<Option<usize>> {
    let mut used = vec![false; parses.len()];
    let mut out: Vec<Option<usize>> = vec![None; records.len()];

    let by_id: HashMap<&str, usize> = parses
        .iter()
        .enumerate()
        .rev()
        .map(|(i, p)| (p.headline_id.as_str(), i))
        .collect();
    let mut by_text: HashMap<String, Vec<usize>> = HashMap::new();
    for (i, p) in parses.iter().enumerate() {
        by_text
            .entry(clean(&p.raw_text).0.to_lowercase())
            .or_default()
            .push(i);
    }

    for (r, rec) in records.iter().enumerate() {
        if let Some(&i) = by_id.get(rec.line.to_string().as_str()) {
            let same_text = clean(&parses[i].raw_text)
                .0
                .eq_ignore_ascii_case(&clean(&rec.text).0);
            if !used[i] && (same_text || parses[i].raw_text.is_empty()) {
                used[i] = true;
                out[r] = Some(i);
            }
        }
    }
    for (r, rec) in records.iter().enumerate() {
        if out[r].is_some() {
            continue;
        }
        let key = clean(&rec.text).0.to_lowercase();
        if let Some(i) = by_text
            .get(&key)
            .and_then(|c| c.iter().copied().find(|&i| !used[i]))
        {
            used[i] = true;
            out[r] = Some(i);
        }
    }
    for (r, slot) in out.iter_mut().enumerate() {
        if slot.is_none() && r < parses.len() && !used[r] {
            used[r] = true;
            *slot = Some(r);
        }
    }
    out
}

#[derive(Serialize)]
struct Inputs {
    dataset: String,
    parses: String,
    config: Option<String>,
    lexicon_dir: Option<String>,
}

#[derive(Serialize)]
struct HeadlineCount {
    line: usize,
    headline: String,
    parse_id: String,
    inferences: usize,
}

#[derive(Serialize)]
struct Skipped {
    line: usize,
    headline: String,
}

#[derive(Serialize)]
struct RunManifest {
    tool_version: &'static str,
    inputs: Inputs,
    config_hash: String,
    rules: Vec<String>,
    verb_pattern: &'static str,
    compound_rendering: &'static str,
    relaxed_nmod: bool,
    headlines: Vec<HeadlineCount>,
    skipped: Vec<Skipped>,
    created_unix: u64,
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

fn cmd_infer(args: &InferArgs) -> Result<bool> {
    let cfg = load_config(args)?;
    let records = parse_dataset(&read(&args.dataset)?)
        .with_context(|| format!("cannot parse {}", args.dataset.display()))?;
    let parses = load_parses(&args.parses)?;
    let keyed = key_parses(&records, &parses);

    let mut jobs = Vec::new();
    let mut kept = Vec::new();
    let mut skipped = Vec::new();
    for (rec, slot) in records.iter().zip(&keyed) {
        match slot {
            Some(i) => {
                jobs.push(Job {
                    text: &rec.text,
                    parse: &parses[*i],
                });
                kept.push((rec, *i));
            }
            None => skipped.push(Skipped {
                line: rec.line,
                headline: rec.text.clone(),
            }),
        }
    }

    let results = infer_corpus(&jobs, &cfg.engine);
    let out_records: Vec<InferenceRecord> = kept
        .iter()
        .zip(results)
        .map(|((rec, _), inferences)| InferenceRecord {
            id: rec.line.to_string(),
            headline: rec.text.clone(),
            inferences,
        })
        .collect();
    let body = write_records(&out_records);

    for s in &skipped {
        eprintln!("warning: no parse for line {}: {}", s.line, s.headline);
    }

    match &args.out {
        Some(out) => {
            write(out, &body)?;
            let manifest = RunManifest {
                tool_version: env!("CARGO_PKG_VERSION"),
                inputs: Inputs {
                    dataset: args.dataset.display().to_string(),
                    parses: args.parses.display().to_string(),
                    config: args.config.as_ref().map(|p| p.display().to_string()),
                    lexicon_dir: args.lexicon_dir.as_ref().map(|p| p.display().to_string()),
                },
                config_hash: cfg.hash(),
                rules: cfg
                    .engine
                    .rules
                    .iter()
                    .map(|r| r.as_str().to_string())
                    .collect(),
                verb_pattern: cfg.engine.verb_pattern.as_str(),
                compound_rendering: cfg.engine.compound_rendering.as_str(),
                relaxed_nmod: cfg.engine.relaxed_nmod,
                headlines: kept
                    .iter()
                    .zip(&out_records)
                    .map(|((rec, i), r)| HeadlineCount {
                        line: rec.line,
                        headline: rec.text.clone(),
                        parse_id: parses[*i].headline_id.clone(),
                        inferences: r.inferences.len(),
                    })
                    .collect(),
                skipped,
                created_unix: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            };
            let json = serde_json::to_string_pretty(&manifest)?;
            write(&manifest_path(out), &(json + "\n"))?;
            eprintln!(
                "{} headlines, {} skipped, wrote {}",
                out_records.len(),
                manifest.skipped.len(),
                out.display()
            );
            Ok(!(args.strict && !manifest.skipped.is_empty()))
        }
        None => {
            print!("{body}");
            Ok(!(args.strict && !skipped.is_empty()))
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<bool> {
    let mode: MatchMode = args.match_mode.parse()?;
    let cfg = MatchConfig::new(mode, args.jaccard_threshold)?;
    let records = read_records(&read(&args.inferences)?)
        .with_context(|| format!("cannot parse {}", args.inferences.display()))?;
    let gold = parse_gold(&read(&args.gold)?)
        .with_context(|| format!("cannot parse {}", args.gold.display()))?;
    let labels = match &args.labels {
        Some(p) => {
            read_labels(&read(p)?).with_context(|| format!("cannot parse {}", p.display()))?
        }
        None => Vec::new(),
    };

    let report = evaluate(&records, &gold, &labels, &cfg);
    for h in &report.missing_records {
        eprintln!("warning: no inferences for gold headline: {h}");
    }
    print!("{}", report.headline_tsv());
    println!();
    print!("{}", report.trigger_tsv());

    if let Some(out) = &args.out {
        write(out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
        write(&out.with_extension("tsv"), &report.trigger_tsv())?;
    }
    Ok(true)
}

fn cmd_morph(verb: &str, form: &str) -> Result<bool> {
    let form: VerbForm = form.parse().map_err(|_| {
        anyhow::anyhow!(
            "unknown form {form:?}; expected one of {}",
            VerbForm::ALL.map(|f| f.name()).join(", ")
        )
    })?;
    println!("{}", Morphology::bundled().conjugate(verb, form));
    Ok(true)
}

fn cmd_stats(dataset: &Path) -> Result<bool> {
    let records = parse_dataset(&read(dataset)?)
        .with_context(|| format!("cannot parse {}", dataset.display()))?;
    let mut sources: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &records {
        *sources.entry(r.source.as_str()).or_default() += 1;
    }
    println!("headlines\t{}", records.len());
    println!("sources\t{}", sources.len());
    for (s, n) in sources {
        println!("{s}\t{n}");
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Infer(a) => cmd_infer(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Morph { verb, form } => cmd_morph(verb, form),
        Command::Stats { dataset } => cmd_stats(dataset),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: some headlines were skipped (--strict)");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(line: usize, text: &str) -> HeadlineRecord {
        HeadlineRecord {
            text: text.into(),
            source: "S".into(),
            timestamp_raw: String::new(),
            line,
        }
    }

    fn parse(id: &str, text: &str) -> ParsedHeadline {
        ParsedHeadline::from_triples(id, text, &[("X", "NN")], &[("root", 0, 1)]).unwrap()
    }

    #[test]
    fn keying_prefers_line_id_then_text_then_position() {
        let records = [rec(1, "Alpha"), rec(2, "Beta"), rec(4, "Gamma")];
        let parses = [parse("9", "Beta"), parse("1", "Alpha"), parse("x", "Other")];
        assert_eq!(key_parses(&records, &parses), [Some(1), Some(0), Some(2)]);
        let parses = [parse("a", "Alpha")];
        assert_eq!(key_parses(&records, &parses), [Some(0), None, None]);
    }

    #[test]
    fn manifest_sits_next_to_output() {
        assert_eq!(
            manifest_path(Path::new("/tmp/run/out.jsonl")),
            PathBuf::from("/tmp/run/out.jsonl.manifest.json")
        );
    }
}
