//! Tensor square, its swap involution, and the symmetric and exterior parts.

use totalbetti::algebra::PrimeField;
use totalbetti::complex::{euler_characteristic, homology_lengths, AdamsSquares};
use totalbetti::graded::{koszul_complex, minimal_free_resolution, GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(101).unwrap();
    let r = GradedRing::polynomial_ring(field, &["x", "y"]).unwrap();
    let k = koszul_complex(&r, &[r.parse("x^2").unwrap(), r.parse("y").unwrap()]).unwrap();

    let sq = AdamsSquares::new(&k).unwrap();
    println!("T2 ranks {:?}", sq.tensor.complex.ranks());
    println!("S2 ranks {:?}", sq.sym.ranks());
    println!("L2 ranks {:?}", sq.wedge.ranks());
    println!("swap is an involution: {}", sq.tau.is_involution());
    println!("swap is a chain map:   {}", sq.tau.commutes_with(&sq.tensor));
    println!("S2 + L2 = T2:          {}", sq.inclusion_is_isomorphism());

    for (name, c) in [("T2", &sq.tensor.complex), ("S2", &sq.sym), ("L2", &sq.wedge)] {
        println!("H({name}) = {:?}", homology_lengths(c).unwrap().lengths);
    }
    let chi = euler_characteristic(&k).unwrap();
    println!("chi(F) = {chi}, chi(psi2 F) = {}, 2^d chi(F) = {}", sq.psi2_euler().unwrap(), 4 * chi);

    let node = GradedRing::quotient(field, &["x", "y"], &["x*y"]).unwrap();
    let m = ModulePresentation::cyclic_from_strs(node, &["x - y"]).unwrap();
    let f = minimal_free_resolution(&m, 3).unwrap().complex;
    let sq = AdamsSquares::new(&f).unwrap();
    println!("over the node: chi(F) = {}, chi(psi2 F) = {}", euler_characteristic(&f).unwrap(), sq.psi2_euler().unwrap());
}
