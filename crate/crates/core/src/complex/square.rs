use std::collections::HashMap;

use crate::algebra::linalg::Echelon;
use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};
use crate::graded::{GradedFreeModule, GradedMap};

use super::chain::ChainComplex;
use super::homology::homology_lengths;

/// A basis element `e_a ⊗ f_b` of `F_i ⊗ F_j` inside `(F ⊗ F)_{i+j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    pub i: i64,
    pub a: usize,
    pub b: usize,
}

/// `T²F = F ⊗_R F` with the Koszul sign rule. Degree `n` is spanned by the
/// blocks `F_i ⊗ F_{n-i}` for increasing `i`, each in lexicographic `(a, b)` order.
#[derive(Clone, Debug)]
pub struct TensorSquare<F: Field> {
    pub complex: ChainComplex<F>,
    bases: Vec<Vec<TensorIndex>>,
    lookup: Vec<HashMap<TensorIndex, usize>>,
}

impl<F: Field> TensorSquare<F> {
    pub fn basis(&self, n: i64) -> &[TensorIndex] {
        let k = n - self.complex.start();
        if k < 0 || k as usize >= self.bases.len() {
            return &[];
        }
        &self.bases[k as usize]
    }

    pub fn position(&self, n: i64, idx: &TensorIndex) -> Option<usize> {
        let k = n - self.complex.start();
        if k < 0 {
            return None;
        }
        self.lookup.get(k as usize)?.get(idx).copied()
    }
}

pub fn tensor_square<F: Field>(f: &ChainComplex<F>) -> Result<TensorSquare<F>> {
    let ring = f.ring().clone();
    let field = ring.field();
    if f.is_empty() {
        let complex = ChainComplex::zero(ring);
        return Ok(TensorSquare { complex, bases: Vec::new(), lookup: Vec::new() });
    }
    let (s, e) = (f.start(), f.end());
    let mut bases = Vec::new();
    let mut lookup = Vec::new();
    let mut modules = Vec::new();
    for n in 2 * s..=2 * e {
        let mut basis = Vec::new();
        let mut tw = Vec::new();
        for i in s..=e {
            let j = n - i;
            if j < s || j > e {
                continue;
            }
            let (mi, mj) = (f.module(i), f.module(j));
            for a in 0..mi.rank() {
                for b in 0..mj.rank() {
                    basis.push(TensorIndex { i, a, b });
                    tw.push(mi.twists[a] + mj.twists[b]);
                }
            }
        }
        lookup.push(basis.iter().enumerate().map(|(k, x)| (*x, k)).collect::<HashMap<_, _>>());
        bases.push(basis);
        modules.push(GradedFreeModule::new(tw));
    }
    let minus = |p: &Polynomial<F>| p.scale(&field.neg(&field.one()));
    let mut diffs = Vec::new();
    for n in 2 * s + 1..=2 * e {
        let k = (n - 2 * s) as usize;
        let mut mat = vec![vec![ring.zero(); bases[k].len()]; bases[k - 1].len()];
        for (col, x) in bases[k].iter().enumerate() {
            let (i, j) = (x.i, n - x.i);
            if let Some(di) = f.differential(i) {
                for r in 0..di.rows() {
                    let p = di.entry(r, x.a);
                    if !p.is_zero() {
                        let row = lookup[k - 1][&TensorIndex { i: i - 1, a: r, b: x.b }];
                        mat[row][col] = &mat[row][col] + p;
                    }
                }
            }
            if let Some(dj) = f.differential(j) {
                for r in 0..dj.rows() {
                    let p = dj.entry(r, x.b);
                    if !p.is_zero() {
                        let row = lookup[k - 1][&TensorIndex { i, a: x.a, b: r }];
                        let term = if i.rem_euclid(2) == 0 { p.clone() } else { minus(p) };
                        mat[row][col] = &mat[row][col] + &term;
                    }
                }
            }
        }
        diffs.push(GradedMap::new(&ring, modules[k].clone(), modules[k - 1].clone(), mat)?);
    }
    let complex = ChainComplex::new(ring, 2 * s, modules, diffs)?;
    Ok(TensorSquare { complex, bases, lookup })
}

/// The swap `τ(e_a ⊗ f_b) = (-1)^{ij} f_b ⊗ e_a` on `T²F`, stored per degree as
/// a signed permutation of the basis.
#[derive(Clone, Debug)]
pub struct ComplexInvolution {
    start: i64,
    images: Vec<Vec<(usize, bool)>>,
}

impl ComplexInvolution {
    pub fn of<F: Field>(t: &TensorSquare<F>) -> Self {
        let start = t.complex.start();
        let images = t
            .bases
            .iter()
            .enumerate()
            .map(|(k, basis)| {
                let n = start + k as i64;
                basis
                    .iter()
                    .map(|x| {
                        let j = n - x.i;
                        let target = t.lookup[k][&TensorIndex { i: j, a: x.b, b: x.a }];
                        (target, (x.i * j).rem_euclid(2) == 1)
                    })
                    .collect()
            })
            .collect();
        ComplexInvolution { start, images }
    }

    /// Image of basis element `k` in degree `n`: `(index, negated)`.
    pub fn image(&self, n: i64, k: usize) -> (usize, bool) {
        self.images[(n - self.start) as usize][k]
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().all(|img| img.iter().enumerate().all(|(k, &(t, s))| img[t] == (k, s)))
    }

    /// `d ∘ τ = τ ∘ d` entrywise.
    pub fn commutes_with<F: Field>(&self, t: &TensorSquare<F>) -> bool {
        let field = t.complex.ring().field();
        let neg = |p: &Polynomial<F>, s: bool| if s { p.scale(&field.neg(&field.one())) } else { p.clone() };
        for n in t.complex.degrees() {
            let Some(d) = t.complex.differential(n) else { continue };
            let lo = &self.images[(n - 1 - self.start) as usize];
            let hi = &self.images[(n - self.start) as usize];
            for col in 0..d.cols() {
                let (tc, sc) = hi[col];
                for row in 0..d.rows() {
                    // (τ d e_col) at τ(row) against (d τ e_col) at τ(row)
                    let (tr, sr) = lo[row];
                    let lhs = neg(d.entry(row, col), sr);
                    let rhs = neg(d.entry(tr, tc), sc);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// One basis vector of `S²F` or `Λ²F`: `e_x ± e_{τ x}` with canonical position `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitElement {
    pub canonical: usize,
    pub partner: Option<(usize, bool)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Sym,
    Wedge,
}

/// `T²F = S²F ⊕ Λ²F`, the ±1 eigencomplexes of `τ`.
#[derive(Clone, Debug)]
pub struct AdamsSquares<F: Field> {
    pub tensor: TensorSquare<F>,
    pub tau: ComplexInvolution,
    pub sym: ChainComplex<F>,
    pub wedge: ChainComplex<F>,
    sym_basis: Vec<Vec<SplitElement>>,
    wedge_basis: Vec<Vec<SplitElement>>,
}

impl<F: Field> AdamsSquares<F> {
    pub fn new(f: &ChainComplex<F>) -> Result<Self> {
        if !f.ring().field().two_invertible() {
            return Err(Error::CharacteristicTwo);
        }
        let tensor = tensor_square(f)?;
        let tau = ComplexInvolution::of(&tensor);
        let sym_basis = split_basis(&tensor, &tau, Part::Sym);
        let wedge_basis = split_basis(&tensor, &tau, Part::Wedge);
        let sym = restrict(&tensor, &sym_basis)?;
        let wedge = restrict(&tensor, &wedge_basis)?;
        Ok(AdamsSquares { tensor, tau, sym, wedge, sym_basis, wedge_basis })
    }

    pub fn sym_basis(&self, n: i64) -> &[SplitElement] {
        &self.sym_basis[(n - self.tensor.complex.start()) as usize]
    }
    pub fn wedge_basis(&self, n: i64) -> &[SplitElement] {
        &self.wedge_basis[(n - self.tensor.complex.start()) as usize]
    }

    /// `[ι_S | ι_Λ]` is invertible over the base field in every degree.
    pub fn inclusion_is_isomorphism(&self) -> bool {
        let field = self.tensor.complex.ring().field();
        self.sym_basis.iter().zip(&self.wedge_basis).all(|(s, w)| {
            let dim = s.len() + w.len();
            let mut ech = Echelon::new(field, dim);
            for el in s.iter().chain(w) {
                let mut v = vec![field.zero(); dim];
                v[el.canonical] = field.one();
                if let Some((p, neg)) = el.partner {
                    v[p] = if neg { field.neg(&field.one()) } else { field.one() };
                }
                ech.insert(v);
            }
            ech.rank() == dim
        })
    }

    /// `χ(S²F) - χ(Λ²F)`.
    pub fn psi2_euler(&self) -> Result<i64> {
        Ok(homology_lengths(&self.sym)?.euler() - homology_lengths(&self.wedge)?.euler())
    }
}

fn split_basis<F: Field>(t: &TensorSquare<F>, tau: &ComplexInvolution, part: Part) -> Vec<Vec<SplitElement>> {
    let start = t.complex.start();
    t.bases
        .iter()
        .enumerate()
        .map(|(k, basis)| {
            let n = start + k as i64;
            let mut out = Vec::new();
            for (pos, x) in basis.iter().enumerate() {
                let j = n - x.i;
                if x.i > j || (x.i == j && x.a > x.b) {
                    continue;
                }
                let (img, neg) = tau.image(n, pos);
                if img == pos {
                    // e_a ⊗ e_a: fixed by τ up to the sign (-1)^i
                    let fixed = !neg;
                    if fixed == (part == Part::Sym) {
                        out.push(SplitElement { canonical: pos, partner: None });
                    }
                    continue;
                }
                let partner_neg = match part {
                    Part::Sym => neg,
                    Part::Wedge => !neg,
                };
                out.push(SplitElement { canonical: pos, partner: Some((img, partner_neg)) });
            }
            out
        })
        .collect()
}

fn restrict<F: Field>(t: &TensorSquare<F>, basis: &[Vec<SplitElement>]) -> Result<ChainComplex<F>> {
    let ring = t.complex.ring().clone();
    let start = t.complex.start();
    let modules: Vec<GradedFreeModule> = basis
        .iter()
        .enumerate()
        .map(|(k, els)| {
            let tw = &t.complex.modules()[k].twists;
            GradedFreeModule::new(els.iter().map(|e| tw[e.canonical]).collect())
        })
        .collect();
    let mut diffs = Vec::new();
    for k in 1..basis.len() {
        let n = start + k as i64;
        let d = t.complex.differential(n).expect("in range");
        let rows = &basis[k - 1];
        let mut mat = vec![vec![ring.zero(); basis[k].len()]; rows.len()];
        for (col, el) in basis[k].iter().enumerate() {
            let image: Vec<Polynomial<F>> = (0..d.rows())
                .map(|r| {
                    let mut p = d.entry(r, el.canonical).clone();
                    if let Some((q, neg)) = el.partner {
                        let e = d.entry(r, q);
                        p = if neg { &p - e } else { &p + e };
                    }
                    p
                })
                .collect();
            let mut rebuilt = vec![ring.zero(); d.rows()];
            for (row, target) in rows.iter().enumerate() {
                let c = image[target.canonical].clone();
                if c.is_zero() {
                    continue;
                }
                rebuilt[target.canonical] = &rebuilt[target.canonical] + &c;
                if let Some((q, neg)) = target.partner {
                    rebuilt[q] = if neg { &rebuilt[q] - &c } else { &rebuilt[q] + &c };
                }
                mat[row][col] = c;
            }
            if rebuilt != image {
                return Err(Error::Semantic(format!("differential leaves the eigencomplex in degree {n}")));
            }
        }
        diffs.push(GradedMap::new(&ring, modules[k].clone(), modules[k - 1].clone(), mat)?);
    }
    ChainComplex::new(ring, start, modules, diffs)
}

pub fn sym2<F: Field>(f: &ChainComplex<F>) -> Result<ChainComplex<F>> {
    Ok(AdamsSquares::new(f)?.sym)
}

pub fn wedge2<F: Field>(f: &ChainComplex<F>) -> Result<ChainComplex<F>> {
    Ok(AdamsSquares::new(f)?.wedge)
}

/// `χ(ψ²F) = χ(S²F) - χ(Λ²F)`.
pub fn psi2_euler<F: Field>(f: &ChainComplex<F>) -> Result<i64> {
    AdamsSquares::new(f)?.psi2_euler()
}
