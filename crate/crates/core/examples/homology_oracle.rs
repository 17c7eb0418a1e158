//! Gröbner-based homology lengths against dense graded linear algebra.

use totalbetti::algebra::PrimeField;
use totalbetti::complex::{homology_lengths, homology_lengths_bruteforce, suggested_degree_bound, sym2, tensor_square};
use totalbetti::graded::{minimal_free_resolution, GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(101).unwrap();
    let cone = GradedRing::quotient(field, &["x", "y", "z"], &["x^2 - y*z"]).unwrap();
    let m = ModulePresentation::cyclic_from_strs(cone, &["x", "y + z"]).unwrap();
    let f = minimal_free_resolution(&m, 5).unwrap().complex;

    let family = [("F", f.clone()), ("T2F", tensor_square(&f).unwrap().complex), ("S2F", sym2(&f).unwrap())];
    for (name, c) in family {
        let bound = suggested_degree_bound(&c).unwrap();
        let fast = homology_lengths(&c).unwrap();
        let slow = homology_lengths_bruteforce(&c, bound).unwrap();
        println!("{name:<4} groebner {:?}  dense(<= {bound}) {:?}", fast.lengths, slow.lengths);
    }
}
