//! Rule-based presupposition and conventional-implicature inference for
//! news headlines, driven by dependency parses.

pub mod batch;
pub mod corpus;
pub mod engine;
pub mod evaluation;
pub mod morphology;
pub mod parse;
