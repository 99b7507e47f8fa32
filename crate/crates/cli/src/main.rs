use std::process::exit;

use specbound_cli::args::parse_args;
use specbound_cli::{execute, ExitStatus};

fn main() {
    let config = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { ExitStatus::Usage.code() } else { 0 };
            let _ = e.print();
            exit(code);
        }
    };
    exit(execute(&config));
}
