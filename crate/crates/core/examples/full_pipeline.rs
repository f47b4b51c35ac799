//! Runs every stage of a scenario file and prints the checks.
//!
//! `cargo run --release --example full_pipeline -- configs/gaussian.toml /tmp/run`

use std::path::PathBuf;

use congested_transport::pipeline::{self, RunOptions, Stage};
use congested_transport::scenario::load_config;

fn main() -> congested_transport::Result<()> {
    let mut args = std::env::args().skip(1);
    let config_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/degenerate.toml"));
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("congested-example"));

    let config = load_config(&config_path)?;
    let options = RunOptions {
        out: Some(out.clone()),
        ..RunOptions::default()
    };
    let run = pipeline::run(Stage::All, &config, &options)?;
    for c in &run.checks {
        let mark = if c.passed { "ok" } else { "FAIL" };
        let limit = c.limit.map(|l| format!(" (limit {l:.4e})")).unwrap_or_default();
        println!("{mark:>4} {}/{} = {:.4e}{limit}", c.stage, c.metric, c.value);
    }
    println!("{} files written to {}", run.manifest.files.len(), out.display());
    println!("passed: {}", run.passed());
    Ok(())
}
