use clap::Parser;
use schubkit_cli::app::{run, Cli};
use schubkit_cli::EXIT_OPERATIONAL;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("SCHUBKIT_LOG", "warn")).init();
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_OPERATIONAL
        }
    };
    std::process::exit(code);
}
