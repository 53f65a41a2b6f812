use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(actforge::cli::run(std::env::args_os()))
}
