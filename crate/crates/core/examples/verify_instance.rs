//! Parses an instance description and prints its verification report.
//!
//! Pass a path to check a file, e.g.
//! `cargo run --example verify_instance -- crates/core/instances/cone.tb`.

use totalbetti::harness::{parse_instance, run, RunOptions};

const DEFAULT: &str = "\
ring R = F(101)[x,y]
quotient (x*y)
module M = coker [[x - y]]
complex F = resolve(M)
check beh on M
check equality on M
check psi2 on F
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable instance file"),
        None => DEFAULT.to_string(),
    };
    let inst = match parse_instance(&text) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = run(&inst, &RunOptions { oracle: true, ..RunOptions::default() });
    print!("{}", report.to_text());
    if report.any_fails() {
        std::process::exit(1);
    }
}
