use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = frontal_helicoid_cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
