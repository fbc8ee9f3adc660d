//! Named verification experiments. Each takes string parameters and a seed,
//! and produces a deterministic [`Report`].

mod algebra;
mod classes;
mod families;
mod layered;

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use sgraph::gen::{rng, SgRng};
use sgraph::{ColorError, GenError};
use thiserror::Error;

use crate::report::{Report, Row};
use crate::sgfile::SgFileError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    SgFile(#[from] SgFileError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Color(#[from] ColorError),
}

/// `key=value` parameters. Every lookup records the value used, so the
/// report lists defaults too.
#[derive(Clone, Debug, Default)]
pub struct Params {
    given: BTreeMap<String, String>,
    used: BTreeMap<String, String>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.given.insert(key.to_string(), value.to_string());
        self
    }

    /// Parses `key=value`.
    pub fn parse_pair(&mut self, pair: &str) -> Result<(), HarnessError> {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| HarnessError::BadParams(format!("expected key=value, got `{pair}`")))?;
        self.set(k.trim(), v.trim());
        Ok(())
    }

    pub fn get<T: FromStr + ToString>(&mut self, key: &str, default: T) -> Result<T, HarnessError> {
        let value = match self.given.get(key) {
            Some(raw) => raw
                .parse()
                .map_err(|_| HarnessError::BadParams(format!("cannot parse {key}=`{raw}`")))?,
            None => default,
        };
        self.used.insert(key.to_string(), value.to_string());
        Ok(value)
    }

    pub fn unused(&self) -> Vec<&str> {
        self.given.keys().filter(|k| !self.used.contains_key(*k)).map(String::as_str).collect()
    }
}

/// Collects rows in instance order and forwards each to the sink.
pub(crate) struct Rows<'s> {
    rows: Vec<Row>,
    notes: Vec<String>,
    sink: &'s mut dyn FnMut(&Row),
}

impl Rows<'_> {
    pub(crate) fn push(&mut self, row: Row) {
        (self.sink)(&row);
        self.rows.push(row);
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Runs `count` independent instances on the thread pool. Rows come out
    /// ordered by instance id whatever the completion order; chunks keep the
    /// output streaming.
    pub(crate) fn par_instances<F>(&mut self, count: usize, f: F)
    where
        F: Fn(usize) -> Vec<Row> + Sync,
    {
        const CHUNK: usize = 32;
        for start in (0..count).step_by(CHUNK) {
            let end = (start + CHUNK).min(count);
            let chunk: Vec<Vec<Row>> = (start..end).into_par_iter().map(&f).collect();
            for row in chunk.into_iter().flatten() {
                self.push(row);
            }
        }
    }
}

/// The generator for instance `id` of a run with `seed`.
pub(crate) fn instance_rng(seed: u64, id: usize) -> SgRng {
    rng(seed ^ (id as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

type Runner = fn(&mut Params, u64, &mut Rows) -> Result<(), HarnessError>;

const EXPERIMENTS: [(&str, Runner); 14] = [
    ("lemma6-sandwich", families::lemma6_sandwich),
    ("neg-clique-chi", families::neg_clique_chi),
    ("shift-growth", families::shift_growth),
    ("thm15-membership", families::thm15_membership),
    ("thm18-membership", families::thm18_membership),
    ("thm16-sandwich", families::thm16_sandwich),
    ("thm20-bound", layered::thm20_bound),
    ("cor21-bound", layered::cor21_bound),
    ("thm30-six", classes::thm30_six),
    ("cor31-bound", layered::cor31_bound),
    ("prop33-lower", classes::prop33_lower),
    ("conjecture-probe", classes::conjecture_probe),
    ("prop26-equivalence", algebra::prop26_equivalence),
    ("switching-algebra", algebra::switching_algebra),
];

pub fn experiment_names() -> impl Iterator<Item = &'static str> {
    EXPERIMENTS.iter().map(|e| e.0)
}

/// Runs an experiment, handing every row to `sink` as soon as it (and all
/// rows before it) are known.
pub fn run_experiment(
    name: &str,
    params: &Params,
    seed: u64,
    sink: &mut dyn FnMut(&Row),
) -> Result<Report, HarnessError> {
    let runner = EXPERIMENTS
        .iter()
        .find(|e| e.0 == name)
        .ok_or_else(|| HarnessError::UnknownExperiment(name.to_string()))?
        .1;
    let mut params = params.clone();
    let mut rows = Rows {
        rows: Vec::new(),
        notes: Vec::new(),
        sink,
    };
    runner(&mut params, seed, &mut rows)?;
    let unused = params.unused();
    if !unused.is_empty() {
        return Err(HarnessError::BadParams(format!("unknown parameters for {name}: {}", unused.join(", "))));
    }
    let pass = rows.rows.iter().all(|r| r.pass);
    Ok(Report {
        experiment: name.to_string(),
        seed,
        params: params.used,
        rows: rows.rows,
        notes: rows.notes,
        pass,
    })
}
