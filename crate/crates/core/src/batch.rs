//! Running the engine over many headlines.
//!
//! With the `parallel` feature (on by default) headlines are spread over a
//! rayon pool; results always come back in input order.

use crate::corpus::{preprocess, PreprocessedHeadline};
use crate::engine::{infer_all, EngineConfig, Inference};
use crate::parse::ParsedHeadline;

/// A headline's text paired with its parse.
#[derive(Debug, Clone, Copy)]
pub struct Job<'a> {
    pub text: &'a str,
    pub parse: &'a ParsedHeadline,
}

fn run_one(job: &Job<'_>, cfg: &EngineConfig) -> Vec<Inference> {
    let p: PreprocessedHeadline = preprocess(job.text);
    infer_all(job.parse, &p, cfg)
}

pub fn infer_corpus_sequential(jobs: &[Job<'_>], cfg: &EngineConfig) -> Vec<Vec<Inference>> {
    jobs.iter().map(|j| run_one(j, cfg)).collect()
}

#[cfg(feature = "parallel")]
pub fn infer_corpus_parallel(jobs: &[Job<'_>], cfg: &EngineConfig) -> Vec<Vec<Inference>> {
    use rayon::prelude::*;
    jobs.par_iter().map(|j| run_one(j, cfg)).collect()
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn infer_corpus(jobs: &[Job<'_>], cfg: &EngineConfig) -> Vec<Vec<Inference>> {
    #[cfg(feature = "parallel")]
    {
        infer_corpus_parallel(jobs, cfg)
    }
    #[cfg(not(feature = "parallel"))]
    {
        infer_corpus_sequential(jobs, cfg)
    }
}
