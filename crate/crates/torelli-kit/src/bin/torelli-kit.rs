use std::io::{stderr, stdout};

fn main() {
    let code = torelli_kit::cli::run_from(std::env::args_os(), &mut stdout(), &mut stderr());
    std::process::exit(code);
}
