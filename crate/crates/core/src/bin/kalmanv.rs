use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kalman_varieties::cli::run(std::env::args()) as u8)
}
