//! File format, reports and experiment runners for the `sg` tool.

pub mod experiments;
pub mod report;
pub mod sgfile;

pub use experiments::{experiment_names, run_experiment, HarnessError, Params};
pub use report::{CsvSink, Report, Row, Witness, CSV_HEADER};
pub use sgfile::{format_sg, parse_sg, read_sg, write_sg, SgFileError};
