//! Hilbert functions and lengths of finite-length graded modules.

use totalbetti::algebra::PrimeField;
use totalbetti::graded::{GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(101).unwrap();
    let r = GradedRing::polynomial_ring(field, &["x", "y"]).unwrap();
    let cases: [&[&str]; 4] = [&["x", "y"], &["x^2", "y"], &["x^2", "x*y", "y^2"], &["x^3", "y^2"]];
    for gens in cases {
        let m = ModulePresentation::cyclic_from_strs(r.clone(), gens).unwrap();
        let h: Vec<u64> = (0..5).map(|t| m.hilbert_function(t)).collect();
        println!("{:<24} H(t) = {:?}  length {:?}", m.render(), h, m.length());
    }

    let node = GradedRing::quotient(field, &["x", "y"], &["x*y"]).unwrap();
    let line = ModulePresentation::cyclic_from_strs(node, &["x - y"]).unwrap();
    println!("over the node: {} has length {:?}", line.render(), line.length());
}
