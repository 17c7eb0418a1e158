//! Sparse polynomials over a prime field and over the rationals.

use totalbetti::algebra::{parse_polynomial, Field, MonomialOrder, PrimeField, Rationals};

fn main() {
    let names: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let f7 = PrimeField::new(7).unwrap();

    let f = parse_polynomial("x^2 + 3*x*y - z", f7, &names, MonomialOrder::DegRevLex).unwrap();
    let g = parse_polynomial("x - y", f7, &names, MonomialOrder::DegRevLex).unwrap();
    println!("f       = {}", f.render(&names));
    println!("g       = {}", g.render(&names));
    println!("f * g   = {}", (&f * &g).render(&names));
    println!("g^7     = {}", g.pow(7).render(&names));
    println!("Frob(g) = {}", g.frobenius_map(7).render(&names));

    let q = Rationals;
    let h = parse_polynomial("1/2*x^2 - 2/3*y*z", q, &names, MonomialOrder::Lex).unwrap();
    let half = q.from_i64(2);
    println!("2 * h   = {}", h.scale(&half).render(&names));
    println!("lead(h) = {:?}", h.leading_monomial().unwrap());
}
