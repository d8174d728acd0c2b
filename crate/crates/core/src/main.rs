use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let result = brieskorn::cli::run(&argv);
    result.emit();
    ExitCode::from(result.status.exit_code())
}
