use clap::Parser;

fn main() {
    let cli = bsent_cli::Cli::parse();
    if let Err(e) = bsent_cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
