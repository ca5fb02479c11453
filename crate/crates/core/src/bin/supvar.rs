use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let seed = std::env::var("SUPVAR_SEED").ok();
    let (out, err, code) = supvar::cli::run_with(std::env::args_os(), seed.as_deref());
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
