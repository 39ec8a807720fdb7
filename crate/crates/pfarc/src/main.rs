use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pfarc::cli::run(std::env::args_os()))
}
