use std::sync::Arc;

use crate::algebra::{Field, Polynomial};
use crate::complex::{homology_vanishes, tensor_module_homology, ChainComplex};
use crate::error::{Error, Result};

use super::free::{GradedFreeModule, GradedMap};
use super::presentation::ModulePresentation;
use super::resolution::minimal_free_resolution;
use super::ring::GradedRing;

/// Subsets of `{0..n}` of size `k`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The Koszul complex `K(y_1..y_c)`, with `F_k` spanned by the lex-ordered
/// `k`-subsets `S` and `d(e_S) = Σ_j (-1)^j y_{s_j} e_{S \ s_j}`.
pub fn koszul_complex<F: Field>(ring: &Arc<GradedRing<F>>, elements: &[Polynomial<F>]) -> Result<ChainComplex<F>> {
    let mut ys = Vec::with_capacity(elements.len());
    let mut degs = Vec::with_capacity(elements.len());
    for (i, y) in elements.iter().enumerate() {
        let y = ring.reduce(y);
        if y.is_zero() {
            return Err(Error::Semantic(format!("Koszul element {} is zero in the ring", i + 1)));
        }
        degs.push(y.homogeneous_degree().ok_or(Error::Inhomogeneous)? as i64);
        ys.push(y);
    }
    let c = ys.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=c).map(|k| subsets(c, k)).collect();
    let modules: Vec<GradedFreeModule> = bases
        .iter()
        .map(|b| GradedFreeModule::new(b.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect()))
        .collect();
    let field = ring.field();
    let mut diffs = Vec::with_capacity(c);
    for k in 1..=c {
        let rows = &bases[k - 1];
        let mut e = vec![vec![ring.zero(); bases[k].len()]; rows.len()];
        for (col, s) in bases[k].iter().enumerate() {
            for j in 0..s.len() {
                let mut face = s.clone();
                face.remove(j);
                let row = rows.binary_search(&face).expect("face is a subset");
                let y = &ys[s[j]];
                e[row][col] = if j % 2 == 0 { y.clone() } else { y.scale(&field.neg(&field.one())) };
            }
        }
        diffs.push(GradedMap::new(ring, modules[k].clone(), modules[k - 1].clone(), e)?);
    }
    ChainComplex::new(ring.clone(), 0, modules, diffs)
}

/// `y_1..y_c` is a regular sequence on `R` iff the Koszul homology vanishes
/// in positive degrees (graded ring, elements of positive degree).
pub fn is_regular_sequence<F: Field>(ring: &Arc<GradedRing<F>>, elements: &[Polynomial<F>]) -> Result<bool> {
    let k = koszul_complex(ring, elements)?;
    for i in 1..=elements.len() as i64 {
        if !homology_vanishes(&k, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `ℓ(Tor_1(M, M)) = β_1 · ℓ(M)` for a cyclic finite-length `M`.
pub fn tor1_self_test<F: Field>(m: &ModulePresentation<F>, cap: usize) -> Result<Tor1Report> {
    if !m.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let length = m.length().finite().ok_or(Error::NotFiniteLength)?;
    let res = minimal_free_resolution(m, cap)?;
    let tor = tensor_module_homology(&res.complex, m)?;
    let beta1 = res.betti.betti(1) as u64;
    Ok(Tor1Report { tor1_length: tor.get(1), beta1, module_length: length })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tor1Report {
    pub tor1_length: u64,
    pub beta1: u64,
    pub module_length: u64,
}

impl Tor1Report {
    pub fn holds(&self) -> bool {
        self.tor1_length == self.beta1 * self.module_length
    }
}
