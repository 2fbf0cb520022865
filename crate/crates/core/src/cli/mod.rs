//! Manifest ingestion, suite execution and report emission.

pub mod catalog;
pub mod emit;
pub mod manifest;
pub mod suites;

pub use emit::{emit_report, Format};
pub use manifest::{load_manifest, parse_manifest, HypersurfaceSpec, Manifest, Request};
pub use suites::{run_suite, run_suites, SUITES};
