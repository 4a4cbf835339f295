use arakelov_xn::config::Args;
use arakelov_xn::{commands, CliError, RunConfig};
use clap::Parser;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args = Args::parse();
    let result = RunConfig::from_args(args).and_then(|cfg| commands::execute(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe (e.g. `| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "arakelov-xn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
