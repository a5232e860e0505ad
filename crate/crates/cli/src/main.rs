use std::io::Write;
use std::process::ExitCode;

use hsc_cli::{run_command, Config, BUDGETS_ENV};

fn main() -> ExitCode {
    let env = std::env::var(BUDGETS_ENV).ok();
    let cfg = match Config::load(None, env.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {BUDGETS_ENV}: {e}");
            return ExitCode::from(1);
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let out = run_command(&argv, &cfg);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
