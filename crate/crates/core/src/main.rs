use clap::Parser;
use signcond::cli::{main_with, RunConfig};

fn main() {
    std::process::exit(main_with(RunConfig::parse()));
}
