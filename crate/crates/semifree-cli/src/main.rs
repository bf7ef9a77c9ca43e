use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

fn main() {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let code = catch_unwind(AssertUnwindSafe(|| {
        semifree_cli::run(std::env::args_os(), &mut out, &mut err)
    }))
    .unwrap_or_else(|_| {
        let _ = writeln!(std::io::stderr(), "internal error");
        semifree_cli::EXIT_INTERNAL
    });
    std::process::exit(code);
}
