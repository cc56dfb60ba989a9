use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(poincare_rep_cli::main_with_args(std::env::args_os()))
}
