use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = numbergate_cli::run(&args);
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
