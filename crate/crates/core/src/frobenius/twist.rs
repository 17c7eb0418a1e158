use num_bigint::BigUint;

use crate::algebra::{Field, Polynomial};
use crate::complex::{homology_lengths, ChainComplex};
use crate::error::{Error, Result};
use crate::graded::GradedRing;

/// The `e`-th Frobenius iterate over a ring of characteristic `p` and Krull
/// dimension `d`, with normalizing factor `p^{de}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusTwistSpec {
    pub e: u32,
    pub p: u64,
    pub scale: BigUint,
}

impl FrobeniusTwistSpec {
    pub fn new<F: Field>(ring: &GradedRing<F>, e: u32) -> Result<Self> {
        let p = ring.characteristic();
        if p == 0 {
            return Err(Error::CharacteristicZero);
        }
        let scale = BigUint::from(p).pow(ring.dimension() as u32 * e);
        Ok(FrobeniusTwistSpec { e, p, scale })
    }

    /// `p^e`, the exponent applied to matrix entries.
    pub fn power(&self) -> Result<u32> {
        u32::try_from(self.p)
            .ok()
            .and_then(|p| p.checked_pow(self.e))
            .ok_or_else(|| Error::Semantic(format!("Frobenius power {}^{} overflows", self.p, self.e)))
    }
}

/// `r ↦ r^{p^e}`, reduced in the ring.
pub fn frobenius_polynomial<F: Field>(ring: &GradedRing<F>, f: &Polynomial<F>, e: u32) -> Result<Polynomial<F>> {
    let q = FrobeniusTwistSpec::new(ring, e)?.power()?;
    Ok(ring.reduce(&f.frobenius_map(q)))
}

/// `ϕᵉ(C)`: entries raised to the `p^e`-th power, twists multiplied by `p^e`.
pub fn frobenius_twist<F: Field>(c: &ChainComplex<F>, e: u32) -> Result<ChainComplex<F>> {
    let ring = c.ring().clone();
    let q = FrobeniusTwistSpec::new(&ring, e)?.power()?;
    if q == 1 {
        return Ok(c.clone());
    }
    c.map_entries(|t| t * q as i64, |p| ring.reduce(&p.frobenius_map(q)))
}

/// `ϕᵉF` is a minimal complex, exact in positive degrees with finite-length `H_0`.
pub fn frobenius_minimality_audit<F: Field>(f: &ChainComplex<F>, e: u32) -> Result<bool> {
    let t = frobenius_twist(f, e)?;
    if !t.is_minimal() {
        return Ok(false);
    }
    match homology_lengths(&t) {
        Ok(h) => Ok(h.iter().all(|(i, l)| i == 0 || l == 0) && h.get(0) > 0),
        Err(Error::NotFiniteLength) => Ok(false),
        Err(err) => Err(err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::graded::{koszul_complex, minimal_free_resolution, ModulePresentation};

    #[test]
    fn twist_of_koszul_is_koszul_on_powers() {
        let r = GradedRing::polynomial_ring(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let k = koszul_complex(&r, &[r.var(0), r.var(1)]).unwrap();
        let t = frobenius_twist(&k, 1).unwrap();
        let expect = koszul_complex(&r, &[r.parse("x^3").unwrap(), r.parse("y^3").unwrap()]).unwrap();
        assert_eq!(t.differentials(), expect.differentials());
        assert_eq!(t.modules(), expect.modules());
        assert_eq!(frobenius_twist(&k, 0).unwrap().differentials(), k.differentials());
    }

    #[test]
    fn twist_reduces_in_quotient() {
        let r = GradedRing::quotient(PrimeField::new(3).unwrap(), &["x", "y"], &["x*y"]).unwrap();
        let m = ModulePresentation::cyclic_from_strs(r.clone(), &["x - y"]).unwrap();
        let res = minimal_free_resolution(&m, 4).unwrap();
        let t = frobenius_twist(&res.complex, 1).unwrap();
        assert_eq!(r.render(t.differential(1).unwrap().entry(0, 0)), "x^3 - y^3");
    }

    #[test]
    fn twist_composes() {
        let r = GradedRing::polynomial_ring(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let k = koszul_complex(&r, &[r.parse("x+y").unwrap(), r.parse("x-y").unwrap()]).unwrap();
        let twice = frobenius_twist(&frobenius_twist(&k, 1).unwrap(), 1).unwrap();
        assert_eq!(twice.differentials(), frobenius_twist(&k, 2).unwrap().differentials());
    }

    #[test]
    fn minimality_audit_on_square_of_maximal_ideal() {
        let r = GradedRing::polynomial_ring(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let m = ModulePresentation::cyclic_from_strs(r, &["x^2", "x*y", "y^2"]).unwrap();
        let res = minimal_free_resolution(&m, 4).unwrap();
        assert!(frobenius_minimality_audit(&res.complex, 1).unwrap());
        let t = frobenius_twist(&res.complex, 1).unwrap();
        assert_eq!(homology_lengths(&t).unwrap().get(0), 27);
    }

    #[test]
    fn characteristic_zero_is_rejected() {
        let r = GradedRing::polynomial_ring(crate::algebra::Rationals, &["x"]).unwrap();
        let k = koszul_complex(&r, &[r.var(0)]).unwrap();
        assert_eq!(frobenius_twist(&k, 1).unwrap_err(), Error::CharacteristicZero);
    }
}
