use std::sync::Arc;

use crate::algebra::Field;
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, preimage, Ambient, FreeVector, GbOptions, ModuleOrder};

use super::betti::BettiTable;
use super::free::{GradedFreeModule, GradedMap};
use super::presentation::ModulePresentation;
use super::ring::GradedRing;

/// A minimal graded free resolution `F → M → 0`, with `F_0` in degree 0.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub complex: ChainComplex<F>,
    pub betti: BettiTable,
}

impl<F: Field> Resolution<F> {
    pub fn projective_dimension(&self) -> i64 {
        self.betti.length().unwrap_or(0)
    }
}

pub fn default_cap<F: Field>(ring: &GradedRing<F>) -> usize {
    ring.nvars() + 2
}

/// Resolves `M` degree by degree, keeping a minimal generating set of each
/// syzygy module. Fails when more than `cap` steps would be needed.
pub fn minimal_free_resolution<F: Field>(m: &ModulePresentation<F>, cap: usize) -> Result<Resolution<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let ring = m.ring().clone();
    let f0 = m.target_twists().to_vec();
    let candidates: Vec<FreeVector<F>> = m.map().columns().iter().map(|c| ring.reduce_vector(c)).collect();
    let first = minimal_generators(&ring, &ring.ambient(f0.clone()), candidates)?;

    let mut modules = vec![GradedFreeModule::new(f0)];
    let mut diffs: Vec<GradedMap<F>> = Vec::new();
    let mut columns = first;
    loop {
        if columns.is_empty() {
            break;
        }
        let step = modules.len();
        if step > cap {
            return Err(Error::ProjectiveDimensionExceedsCap { cap });
        }
        let target = modules.last().unwrap().clone();
        let amb = ring.ambient(target.twists.clone());
        let twists: Vec<i64> = columns
            .iter()
            .map(|c| amb.degree_of(c).map(|d| d.expect("nonzero column")))
            .collect::<Result<_>>()?;
        let source = GradedFreeModule::new(twists.clone());
        let entries = (0..target.rank()).map(|i| columns.iter().map(|c| c.components[i].clone()).collect()).collect();
        diffs.push(GradedMap::new(&ring, source.clone(), target.clone(), entries)?);
        modules.push(source);

        let kernel = preimage(&amb, &columns, &twists, &ring.relations(&target.twists))?;
        let next: Vec<FreeVector<F>> = kernel
            .generators()
            .iter()
            .map(|v| ring.reduce_vector(v))
            .filter(|v| !v.is_zero())
            .collect();
        columns = if next.is_empty() { next } else { minimal_generators(&ring, &ring.ambient(twists), next)? };
    }
    let complex = ChainComplex::new(ring, 0, modules, diffs)?.prune().trimmed();
    let betti = BettiTable::from_complex(&complex);
    Ok(Resolution { complex, betti })
}

/// Minimal homogeneous generators of `⟨candidates⟩ + J·ambient` modulo `J·ambient`,
/// chosen greedily in degree order from `candidates`.
pub(crate) fn minimal_generators<F: Field>(
    ring: &Arc<GradedRing<F>>,
    amb: &Ambient<F>,
    mut candidates: Vec<FreeVector<F>>,
) -> Result<Vec<FreeVector<F>>> {
    let mut keyed = Vec::with_capacity(candidates.len());
    for v in candidates.drain(..) {
        if let Some(d) = amb.degree_of(&v)? {
            keyed.push((d, v));
        }
    }
    keyed.sort_by_key(|(d, _)| *d);
    let order = ModuleOrder::TermOverPosition(ring.order());
    let relations = ring.relations(&amb.twists);
    let mut kept: Vec<FreeVector<F>> = Vec::new();
    let mut gb = buchberger(amb, order.clone(), &relations, &GbOptions::default())?;
    for (_, v) in keyed {
        if gb.contains(&v)? {
            continue;
        }
        kept.push(v);
        let mut gens = relations.clone();
        gens.extend(kept.iter().cloned());
        gb = buchberger(amb, order.clone(), &gens, &GbOptions::default())?;
    }
    Ok(kept)
}
