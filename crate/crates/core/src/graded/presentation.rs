use std::sync::Arc;

use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, finite_hilbert_function, hilbert_function_value, module_numerator, Ambient, FreeVector,
    GbOptions, GroebnerBasis, LaurentPoly, ModuleOrder,
};

use super::free::{GradedFreeModule, GradedMap};
use super::ring::GradedRing;

/// Length of a graded module over the residue field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

/// `M = coker(φ: F_1 → F_0)` over a graded ring.
#[derive(Clone, Debug)]
pub struct ModulePresentation<F: Field> {
    ring: Arc<GradedRing<F>>,
    map: GradedMap<F>,
    gb: GroebnerBasis<F>,
}

impl<F: Field> ModulePresentation<F> {
    pub fn new(ring: Arc<GradedRing<F>>, map: GradedMap<F>) -> Result<Self> {
        let amb = ring.ambient(map.target.twists.clone());
        let mut gens = map.columns();
        gens.extend(ring.relations(&map.target.twists));
        let gb = buchberger(&amb, ModuleOrder::TermOverPosition(ring.order()), &gens, &GbOptions::default())?;
        Ok(ModulePresentation { ring, map, gb })
    }

    /// `R / (gens)` generated in degree 0.
    pub fn cyclic(ring: Arc<GradedRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut twists = Vec::new();
        let mut kept = Vec::new();
        for g in gens {
            let g = ring.reduce(&g);
            if g.is_zero() {
                continue;
            }
            twists.push(g.homogeneous_degree().ok_or(Error::Inhomogeneous)? as i64);
            kept.push(g);
        }
        let map = GradedMap::new(&ring, GradedFreeModule::new(twists), GradedFreeModule::new(vec![0]), vec![kept])?;
        Self::new(ring, map)
    }

    /// Parses the generators of a cyclic module.
    pub fn cyclic_from_strs(ring: Arc<GradedRing<F>>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Self::cyclic(ring, polys)
    }

    /// Builds a presentation from a matrix, inferring twists when absent.
    /// Target twists default to 0; source twists default to the column degrees.
    pub fn from_matrix(
        ring: Arc<GradedRing<F>>,
        entries: Vec<Vec<Polynomial<F>>>,
        target_twists: Option<Vec<i64>>,
        source_twists: Option<Vec<i64>>,
    ) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let target = target_twists.unwrap_or_else(|| vec![0; rows]);
        if target.len() != rows {
            return Err(Error::Semantic(format!("{} target twists for {rows} rows", target.len())));
        }
        let source = match source_twists {
            Some(s) => s,
            None => (0..cols)
                .map(|j| {
                    (0..rows)
                        .find_map(|i| {
                            let p = ring.reduce(&entries[i][j]);
                            (!p.is_zero()).then(|| p.homogeneous_degree().map(|d| d as i64 + target[i]))
                        })
                        .unwrap_or(Some(0))
                        .ok_or_else(|| Error::Semantic(format!("column {} is not homogeneous", j + 1)))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let map = GradedMap::new(&ring, GradedFreeModule::new(source), GradedFreeModule::new(target), entries)?;
        Self::new(ring, map)
    }

    pub fn ring(&self) -> &Arc<GradedRing<F>> {
        &self.ring
    }
    pub fn map(&self) -> &GradedMap<F> {
        &self.map
    }
    pub fn target_twists(&self) -> &[i64] {
        &self.map.target.twists
    }
    pub fn target_ambient(&self) -> Ambient<F> {
        self.ring.ambient(self.map.target.twists.clone())
    }
    /// Gröbner basis over the polynomial ring of `im φ + J·F_0`.
    pub fn relation_gb(&self) -> &GroebnerBasis<F> {
        &self.gb
    }
    /// Columns of `φ` followed by `J·F_0`.
    pub fn relations(&self) -> Vec<FreeVector<F>> {
        let mut v = self.map.columns();
        v.extend(self.ring.relations(&self.map.target.twists));
        v
    }

    pub fn contains(&self, v: &FreeVector<F>) -> Result<bool> {
        self.gb.contains(v)
    }

    pub fn hilbert_numerator(&self) -> LaurentPoly {
        module_numerator(&self.gb)
    }

    pub fn hilbert_function(&self, t: i64) -> u64 {
        hilbert_function_value(&self.hilbert_numerator(), self.ring.nvars(), t).max(0) as u64
    }

    /// Hilbert polynomial as a finite Laurent polynomial when `M` has finite length.
    pub fn finite_hilbert_series(&self) -> Option<LaurentPoly> {
        finite_hilbert_function(&self.hilbert_numerator(), self.ring.nvars())
    }

    /// Finite iff every component of the leading-term module contains a pure
    /// power of every variable (or the unit).
    pub fn length(&self) -> Length {
        let n = self.ring.nvars();
        let mut top = i64::MIN;
        let mut low = i64::MAX;
        for c in 0..self.map.target.rank() {
            let leads = self.gb.leads_in_component(c);
            let tw = self.map.target.twists[c];
            if leads.iter().any(|m| m.is_one()) {
                continue;
            }
            let mut bound = tw;
            for v in 0..n {
                let best = leads
                    .iter()
                    .filter_map(|m| m.pure_power().filter(|&(i, _)| i == v).map(|(_, e)| e))
                    .min();
                match best {
                    Some(e) => bound += e as i64 - 1,
                    None => return Length::Infinite,
                }
            }
            top = top.max(bound);
            low = low.min(tw);
        }
        if top == i64::MIN {
            return Length::Finite(0);
        }
        let num = self.hilbert_numerator();
        let total: i64 = (low..=top).map(|t| hilbert_function_value(&num, n, t)).sum();
        Length::Finite(total as u64)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.map.target.rank()).all(|c| self.gb.leads_in_component(c).iter().any(|m| m.is_one()))
    }

    /// Minimal number of generators, `dim_k M / m M`.
    pub fn minimal_generator_count(&self) -> usize {
        // M/mM = F_0 / (im φ + m F_0): generator e_c survives iff no relation has a unit there
        let amb = self.target_ambient();
        let mut gens = self.relations();
        let nv = self.ring.nvars();
        for c in 0..amb.rank() {
            for v in 0..nv {
                let mut e = amb.zero_vector();
                e.components[c] = self.ring.var(v);
                gens.push(e);
            }
        }
        let gb = buchberger(&amb, ModuleOrder::TermOverPosition(self.ring.order()), &gens, &GbOptions::default())
            .expect("homogeneous relations");
        (0..amb.rank()).filter(|&c| !gb.leads_in_component(c).iter().any(|m| m.is_one())).count()
    }

    pub fn is_cyclic(&self) -> bool {
        self.minimal_generator_count() <= 1
    }

    pub fn render(&self) -> String {
        format!("coker {}", self.map.render(&self.ring))
    }
}
