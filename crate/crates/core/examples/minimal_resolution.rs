//! Minimal free resolutions and graded Betti tables.

use totalbetti::algebra::PrimeField;
use totalbetti::graded::{default_cap, minimal_free_resolution, GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(101).unwrap();
    let plane = GradedRing::polynomial_ring(field, &["x", "y", "z"]).unwrap();
    let cone = GradedRing::quotient(field, &["x", "y", "z"], &["x^2 - y*z"]).unwrap();

    for (ring, gens) in [(&plane, &["x", "y", "z"][..]), (&plane, &["x^2", "x*y", "y^2", "z"][..]), (&cone, &["y", "z"][..])] {
        let m = ModulePresentation::cyclic_from_strs(ring.clone(), gens).unwrap();
        let res = minimal_free_resolution(&m, default_cap(ring)).unwrap();
        println!("{} over {}", m.render(), ring.describe());
        print!("{}", res.betti);
        println!("sum of Betti numbers: {}\n", res.betti.sum());
    }

    let m = ModulePresentation::cyclic_from_strs(cone.clone(), &["x", "y"]).unwrap();
    match minimal_free_resolution(&m, 4) {
        Ok(res) => println!("unexpectedly finite: {:?}", res.betti.totals()),
        Err(e) => println!("(x, y) over the cone: {e}"),
    }
}
