use std::process::ExitCode;

fn main() -> ExitCode {
    baskakov_entropy::cli::main_with_args(std::env::args_os())
}
