use std::process::ExitCode;

fn main() -> ExitCode {
    ncriem::cli::main()
}
