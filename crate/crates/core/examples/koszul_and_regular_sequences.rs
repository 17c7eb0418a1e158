//! Koszul complexes, regular sequences and the Tor_1 self test.

use totalbetti::algebra::PrimeField;
use totalbetti::complex::homology_lengths;
use totalbetti::graded::{is_regular_sequence, koszul_complex, tor1_self_test, GradedRing, ModulePresentation};

fn main() {
    let field = PrimeField::new(101).unwrap();
    let r = GradedRing::polynomial_ring(field, &["x", "y", "z"]).unwrap();

    for seq in [&["x", "y", "z"][..], &["x*y + z^2", "x^2 - y^2", "z"][..], &["x", "x*y"][..]] {
        let elems: Vec<_> = seq.iter().map(|s| r.parse(s).unwrap()).collect();
        let regular = is_regular_sequence(&r, &elems).unwrap();
        let k = koszul_complex(&r, &elems).unwrap();
        let h = homology_lengths(&k).map(|h| format!("{:?}", h.lengths)).unwrap_or_else(|e| e.to_string());
        println!("K({}) ranks {:?} regular {regular} homology {h}", seq.join(", "), k.ranks());
    }

    for gens in [&["x", "y", "z"][..], &["x^2", "x*y", "y^2", "z"][..]] {
        let m = ModulePresentation::cyclic_from_strs(r.clone(), gens).unwrap();
        let rep = tor1_self_test(&m, 5).unwrap();
        println!("{}: l(Tor_1) = {}, beta_1 * l(M) = {}", m.render(), rep.tor1_length, rep.beta1 * rep.module_length);
    }
}
