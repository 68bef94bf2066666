//! Runs the fifteen acceptance criteria in order and prints one line each.
//! Set `NONCROSS_ONLY` to a comma-separated list of groups to run a subset.

use noncross::battery::{run_battery, Group};
use std::process::ExitCode;

fn main() -> ExitCode {
    let groups: Vec<Group> = match std::env::var("NONCROSS_ONLY") {
        Ok(list) => match list.split(',').map(str::parse).collect() {
            Ok(groups) => groups,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
        },
        Err(_) => Vec::new(),
    };
    let results = run_battery(&groups, |r| println!("{r}"));
    let failed: Vec<u8> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    println!("acceptance: {} passed, {} failed", results.len() - failed.len(), failed.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
