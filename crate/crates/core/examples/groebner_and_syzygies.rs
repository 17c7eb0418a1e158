//! Reduced Gröbner basis and first syzygies of a homogeneous ideal.

use totalbetti::algebra::{parse_polynomial, MonomialOrder, PrimeField};
use totalbetti::groebner::{buchberger, syzygies, Ambient, FreeVector, GbOptions, ModuleOrder};

fn main() {
    let names: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
    let field = PrimeField::new(101).unwrap();
    let order = MonomialOrder::DegRevLex;
    let gens: Vec<_> = ["y*w - x^2", "z*w^2 - x^3"]
        .iter()
        .map(|s| FreeVector::from_polynomial(parse_polynomial(s, field, &names, order).unwrap()))
        .collect();

    let amb = Ambient::new(field, 4, order, vec![0]);
    let gb = buchberger(&amb, ModuleOrder::TermOverPosition(order), &gens, &GbOptions::default()).unwrap();
    println!("Gröbner basis ({} elements):", gb.len());
    for g in gb.generators() {
        println!("  {}", g.render(&names));
    }

    let syz = syzygies(&gb).unwrap();
    println!("syzygies ({} generators, twists {:?}):", syz.generators.len(), syz.ambient.twists);
    for s in &syz.generators {
        println!("  {}", s.render(&names));
    }

    for text in ["y^2*w^2 - x*z*w^2", "y^2 - x*z"] {
        let probe = FreeVector::from_polynomial(parse_polynomial(text, field, &names, order).unwrap());
        println!("{text} in ideal: {}", gb.contains(&probe).unwrap());
    }
}
