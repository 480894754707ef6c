use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = numtok_cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut io::stderr());
    drop(out);
    ExitCode::from(status as u8)
}
