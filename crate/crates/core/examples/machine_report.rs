//! Structured reports: the JSON record for a Dutta check.

use totalbetti::harness::{parse_instance, run, RunOptions};

fn main() {
    let text = "ring R = F(5)[x,y]\nmodule M = coker [[x^2, y]]\ncheck dutta on M emax=2\n";
    let report = run(&parse_instance(text).unwrap(), &RunOptions::default());
    let rec = report.record("dutta", "M").unwrap();
    println!("verdict: {}", rec.verdict.label());
    println!("normalized chi: {}", rec.data["F"]["normalized"]);
    println!("psi2 terms:     {}", rec.data["psi2"]);
    print!("{}", report.to_machine());
}
