//! Graded quotient rings: normal forms, dimension and the complete-intersection flag.

use totalbetti::algebra::PrimeField;
use totalbetti::graded::GradedRing;

fn main() {
    let field = PrimeField::new(101).unwrap();
    let rings = [
        GradedRing::polynomial_ring(field, &["x", "y", "z"]).unwrap(),
        GradedRing::quotient(field, &["x", "y"], &["x*y"]).unwrap(),
        GradedRing::quotient(field, &["x", "y", "z"], &["x^2 - y*z"]).unwrap(),
        GradedRing::quotient(field, &["x", "y", "z"], &["x^2", "x*y", "y^2"]).unwrap(),
    ];
    for r in &rings {
        println!("{:<28} dim {}  CI {}", r.describe(), r.dimension(), r.is_complete_intersection());
    }

    let cone = &rings[2];
    for text in ["x^3", "x^2*y + y*z", "(x + y)^2"] {
        let f = cone.parse(text).unwrap();
        println!("{text:>12} -> {}", cone.render(&cone.reduce(&f)));
    }
}
