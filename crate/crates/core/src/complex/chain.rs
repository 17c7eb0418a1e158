use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};
use crate::graded::{GradedFreeModule, GradedMap, GradedRing};

/// A bounded homological complex of graded free modules
/// `F_end → … → F_start`, with `d_i : F_i → F_{i-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    ring: Arc<GradedRing<F>>,
    start: i64,
    modules: Vec<GradedFreeModule>,
    diffs: Vec<GradedMap<F>>,
}

impl<F: Field> ChainComplex<F> {
    /// `diffs[k]` maps `modules[k + 1]` to `modules[k]`. Checks `d ∘ d = 0` in the ring.
    pub fn new(
        ring: Arc<GradedRing<F>>,
        start: i64,
        modules: Vec<GradedFreeModule>,
        diffs: Vec<GradedMap<F>>,
    ) -> Result<Self> {
        let c = Self::from_parts(ring, start, modules, diffs)?;
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn from_parts(
        ring: Arc<GradedRing<F>>,
        start: i64,
        modules: Vec<GradedFreeModule>,
        diffs: Vec<GradedMap<F>>,
    ) -> Result<Self> {
        if modules.is_empty() {
            return Ok(ChainComplex { ring, start, modules, diffs: Vec::new() });
        }
        if diffs.len() + 1 != modules.len() {
            return Err(Error::Semantic(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.target != modules[k] || d.source != modules[k + 1] {
                return Err(Error::Semantic(format!("differential d_{} has the wrong shape", start + k as i64 + 1)));
            }
        }
        Ok(ChainComplex { ring, start, modules, diffs })
    }

    fn validate(&self) -> Result<()> {
        for k in 1..self.diffs.len() {
            if !self.diffs[k - 1].compose(&self.ring, &self.diffs[k]).is_zero() {
                return Err(Error::NotAComplex(self.start + k as i64 + 1));
            }
        }
        Ok(())
    }

    pub fn zero(ring: Arc<GradedRing<F>>) -> Self {
        ChainComplex { ring, start: 0, modules: Vec::new(), diffs: Vec::new() }
    }

    /// A single free module placed in homological degree `degree`.
    pub fn concentrated(ring: Arc<GradedRing<F>>, degree: i64, module: GradedFreeModule) -> Self {
        ChainComplex { ring, start: degree, modules: vec![module], diffs: Vec::new() }
    }

    /// `R(-twist) --1--> R(-twist)` in degrees `i` and `i - 1`.
    pub fn trivial(ring: Arc<GradedRing<F>>, i: i64, twist: i64) -> Self {
        let m = GradedFreeModule::new(vec![twist]);
        let d = GradedMap::from_parts_unchecked(m.clone(), m.clone(), vec![vec![ring.one()]]);
        ChainComplex { ring, start: i - 1, modules: vec![m.clone(), m], diffs: vec![d] }
    }

    pub fn ring(&self) -> &Arc<GradedRing<F>> {
        &self.ring
    }
    pub fn start(&self) -> i64 {
        self.start
    }
    /// Highest homological degree (equal to `start - 1` for the empty complex).
    pub fn end(&self) -> i64 {
        self.start + self.modules.len() as i64 - 1
    }
    pub fn len(&self) -> usize {
        self.modules.len()
    }
    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(|m| m.rank() == 0)
    }
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.start..=self.end()
    }

    pub fn module(&self, i: i64) -> GradedFreeModule {
        self.index(i).map(|k| self.modules[k].clone()).unwrap_or_default()
    }
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }
    pub fn rank(&self, i: i64) -> usize {
        self.index(i).map_or(0, |k| self.modules[k].rank())
    }
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `d_i : F_i → F_{i-1}`, when both ends lie in range.
    pub fn differential(&self, i: i64) -> Option<&GradedMap<F>> {
        let k = i - self.start - 1;
        (k >= 0).then(|| self.diffs.get(k as usize)).flatten()
    }
    pub fn differentials(&self) -> &[GradedMap<F>] {
        &self.diffs
    }

    fn index(&self, i: i64) -> Option<usize> {
        let k = i - self.start;
        (k >= 0 && (k as usize) < self.modules.len()).then_some(k as usize)
    }

    /// `F[k]` with `F[k]_n = F_{n-k}` and differential `(-1)^k d`.
    pub fn shift(&self, k: i64) -> Self {
        let diffs = if k % 2 == 0 {
            self.diffs.clone()
        } else {
            let m1 = self.ring.field().neg(&self.ring.field().one());
            self.diffs.iter().map(|d| d.scale(&m1)).collect()
        };
        ChainComplex { ring: self.ring.clone(), start: self.start + k, modules: self.modules.clone(), diffs }
    }

    /// Pads with zero modules so the range covers `[lo, hi]`.
    pub fn extended(&self, lo: i64, hi: i64) -> Self {
        let lo = lo.min(self.start);
        let hi = hi.max(self.end());
        let modules: Vec<GradedFreeModule> = (lo..=hi).map(|i| self.module(i)).collect();
        let diffs = (lo + 1..=hi)
            .map(|i| match self.differential(i) {
                Some(d) => d.clone(),
                None => GradedMap::zero(&self.ring, self.module(i), self.module(i - 1)),
            })
            .collect();
        ChainComplex { ring: self.ring.clone(), start: lo, modules, diffs }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.modules.is_empty() {
            return other.clone();
        }
        if other.modules.is_empty() {
            return self.clone();
        }
        let lo = self.start.min(other.start);
        let hi = self.end().max(other.end());
        let a = self.extended(lo, hi);
        let b = other.extended(lo, hi);
        let modules: Vec<GradedFreeModule> = a
            .modules
            .iter()
            .zip(&b.modules)
            .map(|(x, y)| GradedFreeModule::new(x.twists.iter().chain(&y.twists).copied().collect()))
            .collect();
        let diffs = a
            .diffs
            .iter()
            .zip(&b.diffs)
            .enumerate()
            .map(|(k, (da, db))| {
                let rows = modules[k].rank();
                let cols = modules[k + 1].rank();
                let mut e = vec![vec![self.ring.zero(); cols]; rows];
                for i in 0..da.rows() {
                    for j in 0..da.cols() {
                        e[i][j] = da.entry(i, j).clone();
                    }
                }
                for i in 0..db.rows() {
                    for j in 0..db.cols() {
                        e[da.rows() + i][da.cols() + j] = db.entry(i, j).clone();
                    }
                }
                GradedMap::from_parts_unchecked(modules[k + 1].clone(), modules[k].clone(), e)
            })
            .collect();
        ChainComplex { ring: self.ring.clone(), start: lo, modules, diffs }
    }

    /// Applies `f` to every differential entry; twists are rescaled by `twist`.
    pub(crate) fn map_entries(
        &self,
        twist: impl Fn(i64) -> i64,
        f: impl Fn(&Polynomial<F>) -> Polynomial<F>,
    ) -> Result<Self> {
        let modules: Vec<GradedFreeModule> =
            self.modules.iter().map(|m| GradedFreeModule::new(m.twists.iter().map(|&t| twist(t)).collect())).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let e = d.entries().iter().map(|r| r.iter().map(&f).collect()).collect();
                GradedMap::new(&self.ring, modules[k + 1].clone(), modules[k].clone(), e)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(self.ring.clone(), self.start, modules, diffs)
    }

    /// The same matrices over another presentation of the same polynomial ring,
    /// e.g. `F ⊗_R R/I` computed over `S/(J + I)`.
    pub fn base_change(&self, ring: Arc<GradedRing<F>>) -> Result<Self> {
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                let e = d.entries().iter().map(|r| r.iter().map(|p| ring.reduce(p)).collect()).collect();
                GradedMap::new(&ring, d.source.clone(), d.target.clone(), e)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(ring, self.start, self.modules.clone(), diffs)
    }

    /// No differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| d.entries().iter().all(|r| r.iter().all(|p| p.is_zero() || p.degree() != Some(0))))
    }

    /// Cancels unit entries of the differentials one at a time until the
    /// complex is minimal. The result is homotopy equivalent to the input.
    pub fn prune(&self) -> Self {
        let field = self.ring.field();
        let mut modules = self.modules.clone();
        let mut mats: Vec<Vec<Vec<Polynomial<F>>>> = self.diffs.iter().map(|d| d.entries().to_vec()).collect();
        'outer: loop {
            for k in 0..mats.len() {
                let hit = mats[k].iter().enumerate().find_map(|(r, row)| {
                    row.iter().position(|p| !p.is_zero() && p.degree() == Some(0)).map(|c| (r, c))
                });
                let Some((r, c)) = hit else { continue };
                let u_inv = field.inv(&mats[k][r][c].constant_coefficient()).expect("unit");
                let m = &mats[k];
                let rows = m.len();
                let cols = m[0].len();
                let mut next = Vec::with_capacity(rows - 1);
                for i in (0..rows).filter(|&i| i != r) {
                    let factor = m[i][c].scale(&u_inv);
                    let row: Vec<Polynomial<F>> = (0..cols)
                        .filter(|&j| j != c)
                        .map(|j| {
                            if factor.is_zero() || m[r][j].is_zero() {
                                m[i][j].clone()
                            } else {
                                self.ring.reduce(&(&m[i][j] - &(&factor * &m[r][j])))
                            }
                        })
                        .collect();
                    next.push(row);
                }
                mats[k] = next;
                if k + 1 < mats.len() {
                    mats[k + 1].remove(c);
                }
                if k > 0 {
                    for row in mats[k - 1].iter_mut() {
                        row.remove(r);
                    }
                }
                modules[k + 1].twists.remove(c);
                modules[k].twists.remove(r);
                continue 'outer;
            }
            break;
        }
        let diffs = mats
            .into_iter()
            .enumerate()
            .map(|(k, e)| GradedMap::from_parts_unchecked(modules[k + 1].clone(), modules[k].clone(), e))
            .collect();
        ChainComplex { ring: self.ring.clone(), start: self.start, modules, diffs }
    }

    /// Drops zero modules at both ends.
    pub fn trimmed(&self) -> Self {
        let Some(first) = self.modules.iter().position(|m| m.rank() > 0) else {
            return ChainComplex::zero(self.ring.clone());
        };
        let last = self.modules.iter().rposition(|m| m.rank() > 0).unwrap();
        ChainComplex {
            ring: self.ring.clone(),
            start: self.start + first as i64,
            modules: self.modules[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for i in self.degrees().rev() {
            let _ = writeln!(s, "F_{i} = {}", render_module(&self.module(i)));
            if let Some(d) = self.differential(i) {
                let _ = writeln!(s, "d_{i} = {}", d.render(&self.ring));
            }
        }
        s
    }
}

pub(crate) fn render_module(m: &GradedFreeModule) -> String {
    if m.rank() == 0 {
        return "0".into();
    }
    m.twists.iter().map(|t| if *t == 0 { "R".to_string() } else { format!("R(-{t})") }).collect::<Vec<_>>().join(" + ")
}
