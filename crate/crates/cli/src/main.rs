use std::process::ExitCode;

fn main() -> ExitCode {
    match bseries_cli::run(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            match e {
                bseries_cli::CliError::Display(text) => print!("{text}"),
                // clap messages carry their own prefix
                bseries_cli::CliError::Usage(msg) if msg.starts_with("error:") => eprintln!("{msg}"),
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(code)
        }
    }
}
