use clap::Parser;

fn main() {
    std::process::exit(gtcat::cli::run(gtcat::cli::Cli::parse()));
}
