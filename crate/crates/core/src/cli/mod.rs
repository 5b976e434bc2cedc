//! File formats, reports, table rendering and verification suites behind the
//! `hstrata` binary.

mod document;
mod render;
mod report;
mod verify;

pub use document::{Coefficient, FieldName, FieldSpec, FormSpaceDocument, LoadedSpace};
pub use render::{nose_table, poset_graph, strata_table, GraphFormat, TableFormat};
pub use report::{analyze_document, analyze_space, StratumReport};
pub use verify::{nose_closure_agrees, poset_is_consistent, run_suite, Suite, SuiteSummary, VerifyOptions};
