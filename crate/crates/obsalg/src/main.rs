use std::process::ExitCode;

fn main() -> ExitCode {
    obsalg::cli::run(std::env::args_os())
}
