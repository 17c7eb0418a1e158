use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Field;
use crate::complex::{euler_characteristic, AdamsSquares, ChainComplex};
use crate::error::Result;

use super::twist::{frobenius_twist, FrobeniusTwistSpec};

/// `χ(ϕᵉF) / p^{de}` for `e = 0..=e_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuttaSequence {
    pub p: u64,
    pub dimension: usize,
    pub euler: Vec<i64>,
    pub terms: Vec<BigRational>,
}

impl DuttaSequence {
    pub fn is_constant(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|t| t > &BigRational::from_integer(0.into()))
    }

    pub fn rendered_terms(&self) -> Vec<String> {
        self.terms.iter().map(render_rational).collect()
    }
}

#[derive(Serialize)]
struct DuttaRecord {
    p: u64,
    dimension: usize,
    euler: Vec<i64>,
    terms: Vec<String>,
    constant: bool,
}

impl Serialize for DuttaSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DuttaRecord {
            p: self.p,
            dimension: self.dimension,
            euler: self.euler.clone(),
            terms: self.rendered_terms(),
            constant: self.is_constant(),
        }
        .serialize(s)
    }
}

pub fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Normalized Euler characteristics of an arbitrary map `C ↦ complex` applied
/// after each Frobenius iterate.
pub fn normalized_sequence<F: Field>(
    f: &ChainComplex<F>,
    e_max: u32,
    build: impl Fn(&ChainComplex<F>) -> Result<ChainComplex<F>> + Sync,
) -> Result<DuttaSequence> {
    let ring = f.ring();
    let rows: Vec<(i64, BigRational)> = (0..=e_max)
        .into_par_iter()
        .map(|e| {
            let spec = FrobeniusTwistSpec::new(ring, e)?;
            let chi = euler_characteristic(&build(&frobenius_twist(f, e)?)?)?;
            Ok((chi, BigRational::new(BigInt::from(chi), BigInt::from(spec.scale))))
        })
        .collect::<Result<_>>()?;
    let (euler, terms) = rows.into_iter().unzip();
    Ok(DuttaSequence { p: ring.characteristic(), dimension: ring.dimension(), euler, terms })
}

/// `[χ(ϕᵉF)/p^{de}]` for `e = 0..=e_max`.
pub fn dutta_estimate<F: Field>(f: &ChainComplex<F>, e_max: u32) -> Result<DuttaSequence> {
    normalized_sequence(f, e_max, |c| Ok(c.clone()))
}

/// Normalized Euler characteristics of `ϕᵉF`, `S²ϕᵉF` and `Λ²ϕᵉF`, with an
/// audit that `ϕᵉ` commutes with the splitting at the matrix level.
#[derive(Clone, Debug)]
pub struct DuttaSquares {
    pub base: DuttaSequence,
    pub sym: DuttaSequence,
    pub wedge: DuttaSequence,
    pub splitting_commutes: Vec<bool>,
}

impl DuttaSquares {
    /// `χ(S²ϕᵉF)/p^{de} - χ(Λ²ϕᵉF)/p^{de}`.
    pub fn psi2_terms(&self) -> Vec<BigRational> {
        self.sym.terms.iter().zip(&self.wedge.terms).map(|(s, w)| s - w).collect()
    }

    /// `2^d · χ(ϕᵉF)/p^{de}`.
    pub fn scaled_base_terms(&self) -> Vec<BigRational> {
        let two_d = BigRational::from_integer(BigInt::from(1u32) << self.base.dimension);
        self.base.terms.iter().map(|t| t * &two_d).collect()
    }

    pub fn identity_holds(&self) -> Vec<bool> {
        self.psi2_terms().iter().zip(self.scaled_base_terms()).map(|(a, b)| *a == b).collect()
    }
}

pub fn dutta_squares<F: Field>(f: &ChainComplex<F>, e_max: u32) -> Result<DuttaSquares> {
    let ring = f.ring();
    let sq0 = AdamsSquares::new(f)?;
    let per_e: Vec<(i64, i64, i64, bool, BigInt)> = (0..=e_max)
        .into_par_iter()
        .map(|e| {
            let spec = FrobeniusTwistSpec::new(ring, e)?;
            let fe = frobenius_twist(f, e)?;
            let sq = AdamsSquares::new(&fe)?;
            let commutes = frobenius_twist(&sq0.sym, e)?.differentials() == sq.sym.differentials()
                && frobenius_twist(&sq0.wedge, e)?.differentials() == sq.wedge.differentials();
            Ok((
                euler_characteristic(&fe)?,
                euler_characteristic(&sq.sym)?,
                euler_characteristic(&sq.wedge)?,
                commutes,
                BigInt::from(spec.scale),
            ))
        })
        .collect::<Result<_>>()?;
    let seq = |pick: fn(&(i64, i64, i64, bool, BigInt)) -> i64| {
        let euler: Vec<i64> = per_e.iter().map(pick).collect();
        let terms = per_e.iter().zip(&euler).map(|(row, &chi)| BigRational::new(chi.into(), row.4.clone())).collect();
        DuttaSequence { p: ring.characteristic(), dimension: ring.dimension(), euler, terms }
    };
    Ok(DuttaSquares {
        base: seq(|r| r.0),
        sym: seq(|r| r.1),
        wedge: seq(|r| r.2),
        splitting_commutes: per_e.iter().map(|r| r.3).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::graded::{koszul_complex, minimal_free_resolution, GradedRing, ModulePresentation};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn koszul_is_constant_one() {
        let r = GradedRing::polynomial_ring(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let k = koszul_complex(&r, &[r.var(0), r.var(1)]).unwrap();
        let s = dutta_estimate(&k, 2).unwrap();
        assert_eq!(s.euler, vec![1, 9, 81]);
        assert_eq!(s.terms, vec![q(1), q(1), q(1)]);
        assert!(s.is_constant() && s.is_positive());
    }

    #[test]
    fn hypersurface_resolution_is_constant_two() {
        let r = GradedRing::quotient(PrimeField::new(3).unwrap(), &["x", "y"], &["x*y"]).unwrap();
        let m = ModulePresentation::cyclic_from_strs(r, &["x - y"]).unwrap();
        let res = minimal_free_resolution(&m, 4).unwrap();
        let s = dutta_estimate(&res.complex, 2).unwrap();
        assert_eq!(s.euler, vec![2, 6, 18]);
        assert_eq!(s.rendered_terms(), vec!["2", "2", "2"]);
    }

    #[test]
    fn psi2_terms_match_scaled_base() {
        let r = GradedRing::polynomial_ring(PrimeField::new(3).unwrap(), &["x", "y"]).unwrap();
        let k = koszul_complex(&r, &[r.var(0), r.var(1)]).unwrap();
        let d = dutta_squares(&k, 2).unwrap();
        assert_eq!(d.psi2_terms(), vec![q(4), q(4), q(4)]);
        assert!(d.identity_holds().iter().all(|&b| b));
        assert!(d.splitting_commutes.iter().all(|&b| b));
    }

    #[test]
    fn shift_negates_sequence() {
        let r = GradedRing::polynomial_ring(PrimeField::new(5).unwrap(), &["x"]).unwrap();
        let k = koszul_complex(&r, &[r.var(0)]).unwrap();
        let s = dutta_estimate(&k.shift(1), 1).unwrap();
        assert_eq!(s.terms, vec![q(-1), q(-1)]);
    }
}
