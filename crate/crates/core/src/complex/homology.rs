use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::graded::ModulePresentation;
use crate::groebner::{
    buchberger, finite_hilbert_function, module_numerator, preimage, Ambient, FreeVector, GbOptions,
    GroebnerBasis, LaurentPoly, ModuleOrder,
};

use super::chain::ChainComplex;

/// `ℓ(H_i)` for `i` in `start..start + lengths.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyLengths {
    pub start: i64,
    pub lengths: Vec<u64>,
}

impl HomologyLengths {
    pub fn get(&self, i: i64) -> u64 {
        let k = i - self.start;
        if k < 0 {
            return 0;
        }
        self.lengths.get(k as usize).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.lengths.iter().enumerate().map(move |(k, &l)| (self.start + k as i64, l))
    }

    pub fn total(&self) -> u64 {
        self.lengths.iter().sum()
    }

    /// `Σ (-1)^i ℓ(H_i)`.
    pub fn euler(&self) -> i64 {
        self.iter().map(|(i, l)| if i.rem_euclid(2) == 0 { l as i64 } else { -(l as i64) }).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.lengths.iter().all(|&l| l == 0)
    }
}

/// A complex of presented modules over the polynomial ring: position `k` is
/// `⊕ S(-twists[k]) / ⟨relations[k]⟩` and `columns[k]` describes the map from
/// position `k + 1` to position `k`.
pub(crate) struct PresentedComplex<F: Field> {
    field: F,
    nvars: usize,
    order: crate::algebra::MonomialOrder,
    start: i64,
    twists: Vec<Vec<i64>>,
    relations: Vec<Vec<FreeVector<F>>>,
    columns: Vec<Vec<FreeVector<F>>>,
}

impl<F: Field> PresentedComplex<F> {
    pub(crate) fn of_free(c: &ChainComplex<F>) -> Self {
        let ring = c.ring();
        let twists: Vec<Vec<i64>> = c.modules().iter().map(|m| m.twists.clone()).collect();
        let relations = twists.iter().map(|t| ring.relations(t)).collect();
        let columns = c.differentials().iter().map(|d| d.columns()).collect();
        PresentedComplex { field: ring.field(), nvars: ring.nvars(), order: ring.order(), start: c.start(), twists, relations, columns }
    }

    /// `F ⊗_R M`, with basis `e_a ⊗ g_c` at index `a · rank(M_0) + c`.
    pub(crate) fn of_tensor(c: &ChainComplex<F>, m: &ModulePresentation<F>) -> Self {
        let ring = c.ring();
        let mt = m.target_twists();
        let r = mt.len();
        let mrels = m.relations();
        let zero = ring.zero();
        let twists: Vec<Vec<i64>> =
            c.modules().iter().map(|f| f.twists.iter().flat_map(|a| mt.iter().map(move |b| a + b)).collect()).collect();
        let relations = c
            .modules()
            .iter()
            .map(|f| {
                let mut out = Vec::with_capacity(f.rank() * mrels.len());
                for a in 0..f.rank() {
                    for rel in &mrels {
                        let mut comps = vec![zero.clone(); f.rank() * r];
                        comps[a * r..(a + 1) * r].clone_from_slice(&rel.components);
                        out.push(FreeVector::new(comps));
                    }
                }
                out
            })
            .collect();
        let columns = c
            .differentials()
            .iter()
            .map(|d| {
                let mut out = Vec::with_capacity(d.cols() * r);
                for a in 0..d.cols() {
                    for cc in 0..r {
                        let mut comps = vec![zero.clone(); d.rows() * r];
                        for row in 0..d.rows() {
                            comps[row * r + cc] = d.entry(row, a).clone();
                        }
                        out.push(FreeVector::new(comps));
                    }
                }
                out
            })
            .collect();
        PresentedComplex { field: ring.field(), nvars: ring.nvars(), order: ring.order(), start: c.start(), twists, relations, columns }
    }

    fn ambient(&self, k: usize) -> Ambient<F> {
        Ambient::new(self.field, self.nvars, self.order, self.twists[k].clone())
    }

    fn boundaries(&self, k: usize) -> Result<GroebnerBasis<F>> {
        let mut gens = self.relations[k].clone();
        if let Some(cols) = self.columns.get(k) {
            gens.extend(cols.iter().cloned());
        }
        buchberger(&self.ambient(k), ModuleOrder::TermOverPosition(self.order), &gens, &GbOptions::default())
    }

    fn cycles(&self, k: usize) -> Result<Option<GroebnerBasis<F>>> {
        if k == 0 {
            return Ok(None);
        }
        preimage(&self.ambient(k - 1), &self.columns[k - 1], &self.twists[k], &self.relations[k - 1]).map(Some)
    }

    /// Numerator of the Hilbert series of `H` at position `k`.
    pub(crate) fn homology_numerator(&self, k: usize) -> Result<LaurentPoly> {
        let hs_l = module_numerator(&self.boundaries(k)?);
        let hs_n = match self.cycles(k)? {
            Some(gb) => module_numerator(&gb),
            None => LaurentPoly::zero(),
        };
        // HS(Z / B) = HS(P/B) - HS(P/Z)
        Ok(hs_l.sub(&hs_n))
    }

    pub(crate) fn vanishes(&self, k: usize) -> Result<bool> {
        if self.twists[k].is_empty() {
            return Ok(true);
        }
        let b = self.boundaries(k)?;
        match self.cycles(k)? {
            Some(z) => {
                for g in z.generators() {
                    if !b.contains(&g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            None => Ok((0..self.twists[k].len()).all(|c| b.leads_in_component(c).iter().any(|m| m.is_one()))),
        }
    }

    pub(crate) fn lengths(&self) -> Result<HomologyLengths> {
        let lengths = (0..self.twists.len())
            .into_par_iter()
            .map(|k| {
                if self.twists[k].is_empty() {
                    return Ok(0);
                }
                let num = self.homology_numerator(k)?;
                finite_hilbert_function(&num, self.nvars)
                    .map(|h| h.value_at_one() as u64)
                    .ok_or(Error::NotFiniteLength)
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(HomologyLengths { start: self.start, lengths })
    }

    pub(crate) fn series(&self) -> Result<Vec<(i64, LaurentPoly)>> {
        (0..self.twists.len())
            .into_par_iter()
            .map(|k| Ok((self.start + k as i64, self.homology_numerator(k)?)))
            .collect()
    }
}

/// Lengths of the homology modules of a complex of free modules; fails with
/// [`Error::NotFiniteLength`] if some homology has infinite length.
pub fn homology_lengths<F: Field>(c: &ChainComplex<F>) -> Result<HomologyLengths> {
    PresentedComplex::of_free(c).lengths()
}

/// Hilbert series numerators (over `(1 - t)^n`) of each homology module.
pub fn homology_hilbert_numerators<F: Field>(c: &ChainComplex<F>) -> Result<Vec<(i64, LaurentPoly)>> {
    PresentedComplex::of_free(c).series()
}

/// `H_i(c) = 0`, decided by membership without computing lengths.
pub fn homology_vanishes<F: Field>(c: &ChainComplex<F>, i: i64) -> Result<bool> {
    let k = i - c.start();
    if k < 0 || k as usize >= c.len() {
        return Ok(true);
    }
    PresentedComplex::of_free(c).vanishes(k as usize)
}

/// Lengths of `H_i(F ⊗ M)`.
pub fn tensor_module_homology<F: Field>(c: &ChainComplex<F>, m: &ModulePresentation<F>) -> Result<HomologyLengths> {
    PresentedComplex::of_tensor(c, m).lengths()
}

/// `χ(F) = Σ (-1)^i ℓ(H_i(F))`.
pub fn euler_characteristic<F: Field>(c: &ChainComplex<F>) -> Result<i64> {
    Ok(homology_lengths(c)?.euler())
}
