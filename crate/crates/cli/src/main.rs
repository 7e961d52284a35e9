use clap::Parser;

fn main() {
    let cli = acmgate::Cli::parse();
    std::process::exit(acmgate::run(cli));
}
