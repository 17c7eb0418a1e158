use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::FreeVector;

use super::ring::GradedRing;

/// `⊕ R(-twist_i)`; the rank-0 module is the zero object.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }
    pub fn zero() -> Self {
        GradedFreeModule { twists: Vec::new() }
    }
    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// A homogeneous map of graded free modules; column `j` is the image of
/// source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap<F: Field> {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    entries: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> GradedMap<F> {
    /// Validates shape and degrees: entry `(i, j)` must be zero or homogeneous
    /// of degree `twist_source(j) - twist_target(i)`.
    pub fn new(
        ring: &GradedRing<F>,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial<F>>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Semantic(format!(
                "matrix shape does not match {} x {}",
                target.rank(),
                source.rank()
            )));
        }
        let entries: Vec<Vec<Polynomial<F>>> =
            entries.into_iter().map(|row| row.iter().map(|p| ring.reduce(p)).collect()).collect();
        for (i, row) in entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let expected = source.twists[j] - target.twists[i];
                match p.homogeneous_degree() {
                    Some(d) if d as i64 == expected => {}
                    Some(d) => {
                        return Err(Error::Semantic(format!(
                            "entry ({},{}) has degree {d}, expected {expected}",
                            i + 1,
                            j + 1
                        )))
                    }
                    None => {
                        return Err(Error::Semantic(format!("entry ({},{}) is not homogeneous", i + 1, j + 1)))
                    }
                }
            }
        }
        Ok(GradedMap { source, target, entries })
    }

    pub(crate) fn from_parts_unchecked(
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial<F>>>,
    ) -> Self {
        GradedMap { source, target, entries }
    }

    pub fn zero(ring: &GradedRing<F>, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let entries = (0..target.rank()).map(|_| (0..source.rank()).map(|_| ring.zero()).collect()).collect();
        GradedMap { source, target, entries }
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }
    pub fn cols(&self) -> usize {
        self.source.rank()
    }
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i][j]
    }
    pub fn entries(&self) -> &[Vec<Polynomial<F>>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> FreeVector<F> {
        FreeVector::new(self.entries.iter().map(|row| row[j].clone()).collect())
    }

    pub fn columns(&self) -> Vec<FreeVector<F>> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &GradedRing<F>, other: &GradedMap<F>) -> GradedMap<F> {
        assert_eq!(self.source, other.target, "composable maps");
        let entries = (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        let mut acc = ring.zero();
                        for k in 0..self.cols() {
                            if self.entries[i][k].is_zero() || other.entries[k][j].is_zero() {
                                continue;
                            }
                            acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                        }
                        ring.reduce(&acc)
                    })
                    .collect()
            })
            .collect();
        GradedMap { source: other.source.clone(), target: self.target.clone(), entries }
    }

    pub fn scale(&self, c: &F::Elem) -> GradedMap<F> {
        let entries = self.entries.iter().map(|r| r.iter().map(|p| p.scale(c)).collect()).collect();
        GradedMap { source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn render(&self, ring: &GradedRing<F>) -> String {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| ring.render(p)).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}
