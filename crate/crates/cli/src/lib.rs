//! Command-line front end for `zsig-core`.
//!
//! Exit codes: 0 on success or a non-failing verdict, 1 on usage, parse
//! or computation errors, 2 on a `counterexample` verdict.

mod args;
mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Char2Args, Cli, Command, Common, Format, Kind, Mode, SeqInput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

/// Parses `argv` (program name first), runs the command and writes its
/// output to `stdout` or to `--out`. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_ERROR
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let out = match commands::execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let written = match &cli.common().out {
        Some(path) => std::fs::write(path, &out.body),
        None => stdout.write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_ERROR;
    }
    if out.counterexample {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}
