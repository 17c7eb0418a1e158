//! Frobenius twists and normalized Euler characteristics in characteristic p.

use totalbetti::algebra::PrimeField;
use totalbetti::complex::euler_characteristic;
use totalbetti::frobenius::{dutta_squares, frobenius_twist};
use totalbetti::graded::{minimal_free_resolution, GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(3).unwrap();
    let node = GradedRing::quotient(field, &["x", "y"], &["x*y"]).unwrap();
    let m = ModulePresentation::cyclic_from_strs(node.clone(), &["x - y"]).unwrap();
    let f = minimal_free_resolution(&m, 3).unwrap().complex;

    for e in 0..=2 {
        let phi = frobenius_twist(&f, e).unwrap();
        let d = phi.differential(1).unwrap().entry(0, 0);
        println!("e = {e}: d = [{}], chi = {}", node.render(d), euler_characteristic(&phi).unwrap());
    }

    let ds = dutta_squares(&f, 2).unwrap();
    println!("chi(phi^e F)/p^(de)    {:?}", ds.base.rendered_terms());
    println!("chi(S2 phi^e F)/p^(de) {:?}", ds.sym.rendered_terms());
    println!("chi(L2 phi^e F)/p^(de) {:?}", ds.wedge.rendered_terms());
    println!("termwise identity      {:?}", ds.identity_holds());
    println!("splitting commutes     {:?}", ds.splitting_commutes);
}
