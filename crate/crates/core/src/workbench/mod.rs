//! Instance files, generation, reduction pipelines with oracle audits,
//! timing and SVG figures.

mod bench;
mod config;
mod generate;
mod instance;
mod pipeline;
mod render;

pub use bench::{bench, doubling_ratios, to_csv, BenchRecord, BenchSolver};
pub use config::Config;
pub use generate::generate;
pub use instance::{GenMode, Instance, InstanceFile, Kind, Provenance};
pub use pipeline::{
    audit, reduce_file, reduce_step, run_pipeline, solve_instance, validate_chain, AuditRecord, AuditReport,
    AuditSummary, OracleCheck, StageRecord,
};
pub use render::{render_svg, svg_string, RenderObject};

#[cfg(test)]
mod tests;
