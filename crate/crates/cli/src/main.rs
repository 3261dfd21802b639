use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;

use cmw_cli::cache::DiskStore;
use cmw_cli::exec::{execute, exit_code, Options};

/// Run a workbench script and report the results.
#[derive(Parser, Debug)]
#[command(name = "cmw", version)]
struct Args {
    /// Script file; `-` or nothing reads standard input.
    script: Option<PathBuf>,
    /// Emit the report as JSON instead of text tables.
    #[arg(long)]
    json: bool,
    /// Directory of cached resolutions.
    #[arg(long, env = "CMW_CACHE_DIR", default_value = ".cmw-cache")]
    cache_dir: PathBuf,
    /// Do not read or write the on-disk cache.
    #[arg(long)]
    no_cache: bool,
    /// Truncation bound for every command.
    #[arg(long)]
    bound: Option<usize>,
    /// Stop at the first failing command.
    #[arg(long)]
    fail_fast: bool,
    /// Campaign seed when the script gives none.
    #[arg(long)]
    seed: Option<u64>,
    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_input(args.script.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cmw: cannot read script: {e}");
            return ExitCode::from(2);
        }
    };
    let program = match cmw_cli::load(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cmw: {e}");
            return ExitCode::from(2);
        }
    };
    if !args.no_cache {
        match DiskStore::open(&args.cache_dir) {
            Ok(s) => cmw_core::resolve::set_resolution_store(Some(Arc::new(s))),
            Err(e) => eprintln!("cmw: cache disabled: {e}"),
        }
    }
    let opts = Options { bound: args.bound, fail_fast: args.fail_fast, seed: args.seed, timings: args.timings };
    let report = execute(&program, &text, &opts);
    let out = if args.json { report.to_json() } else { report.to_text() };
    print!("{out}");
    ExitCode::from(exit_code(&report) as u8)
}
