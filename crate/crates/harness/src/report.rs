//! Experiment reports: rows stream out as they are produced, the JSON form
//! holds everything.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use sgraph::SignedGraph;

use crate::sgfile::format_sg;

/// Enough to replay a failing row: the instance in SG format and the inputs
/// given to the operation under test.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub graph: String,
    pub inputs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub instance_id: usize,
    pub n: usize,
    pub m: usize,
    pub metric_name: String,
    pub value: i64,
    pub expected: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Row {
    /// A row about `g`; failing rows get a witness built from `g` and `inputs`.
    pub fn new(
        instance_id: usize,
        g: &SignedGraph,
        metric: &str,
        value: i64,
        expected: impl Into<String>,
        pass: bool,
        inputs: impl FnOnce() -> String,
    ) -> Row {
        Row {
            instance_id,
            n: g.n(),
            m: g.m(),
            metric_name: metric.to_string(),
            value,
            expected: expected.into(),
            pass,
            witness: (!pass).then(|| Witness {
                graph: format_sg(g),
                inputs: inputs(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub experiment: String,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub const CSV_HEADER: [&str; 7] = ["instance_id", "n", "m", "metric_name", "value", "expected", "pass"];

/// Writes rows as CSV, flushing after each so an interrupted run keeps its
/// partial output.
pub struct CsvSink<W: Write> {
    out: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(w: W) -> csv::Result<Self> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER)?;
        out.flush()?;
        Ok(CsvSink { out })
    }

    pub fn write(&mut self, r: &Row) -> csv::Result<()> {
        self.out.write_record([
            r.instance_id.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.metric_name.clone(),
            r.value.to_string(),
            r.expected.clone(),
            r.pass.to_string(),
        ])?;
        self.out.flush()?;
        Ok(())
    }
}
