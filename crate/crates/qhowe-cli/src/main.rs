use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qhowe_cli::run(std::env::args_os()) as u8)
}
