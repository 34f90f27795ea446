// Driving the command line in-process and reading its JSON report.

use reflexive_forge::cli::{execute, Cli};

use clap::Parser;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cli = Cli::try_parse_from(["reflexive-forge", "census", "--d", "3", "--no-cache"])?;
    let report = execute(&cli)?;
    println!("{}", report.to_text());
    println!("exit code {}", report.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
