use clap::Parser;
use knotforge_cli::commands::execute;
use knotforge_cli::Cli;

fn main() {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match execute(&cli, echo) {
        Ok(report) => print!("{}", if cli.json { report.to_json() } else { report.to_text() }),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
