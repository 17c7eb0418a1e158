use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::linalg::{rank, Echelon};
use crate::algebra::{monomials_of_degree, Field, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::graded::GradedRing;

use super::chain::ChainComplex;
use super::homology::HomologyLengths;

/// `R_t = S_t / J_t` by dense linear algebra on monomial multiples of the
/// defining equations (no Gröbner basis involved).
struct Slice<F: Field> {
    index: HashMap<Monomial, usize>,
    ideal: Echelon<F>,
    quotient: Vec<usize>,
    monomials: Vec<Monomial>,
}

impl<F: Field> Slice<F> {
    fn new(ring: &GradedRing<F>, t: i64) -> Self {
        let field = ring.field();
        let n = ring.nvars();
        let monomials = if t < 0 { Vec::new() } else { monomials_of_degree(n, t as u32) };
        let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let mut ideal = Echelon::new(field, monomials.len());
        for g in ring.ideal_generators() {
            let dg = g.homogeneous_degree().expect("homogeneous") as i64;
            if dg > t {
                continue;
            }
            for m in monomials_of_degree(n, (t - dg) as u32) {
                let mut row = vec![field.zero(); monomials.len()];
                for (mono, c) in g.terms() {
                    row[index[&mono.mul(&m)]] = c.clone();
                }
                ideal.insert(row);
            }
        }
        let pivots = ideal.pivots().to_vec();
        let quotient = (0..monomials.len()).filter(|k| !pivots.contains(k)).collect();
        Slice { index, ideal, quotient, monomials }
    }

    fn dim(&self) -> usize {
        self.quotient.len()
    }

    /// Coordinates of a degree-`t` polynomial in the quotient basis.
    fn coordinates(&self, field: F, p: &Polynomial<F>, out: &mut [F::Elem]) {
        let mut v = vec![field.zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = c.clone();
        }
        self.ideal.reduce(&mut v);
        for (k, &q) in self.quotient.iter().enumerate() {
            out[k] = field.add(&out[k], &v[q]);
        }
    }
}

/// Homology lengths by summing `dim_k H_i(F)_t` over `t ≤ degree_bound`.
/// Fails with [`Error::DegreeBoundInsufficient`] if homology survives at the bound.
pub fn homology_lengths_bruteforce<F: Field>(c: &ChainComplex<F>, degree_bound: i64) -> Result<HomologyLengths> {
    let ring = c.ring();
    let field = ring.field();
    let low = c.modules().iter().flat_map(|m| m.twists.iter().copied()).min().unwrap_or(0);
    let slices: HashMap<i64, Slice<F>> =
        (0..=degree_bound - low).into_par_iter().map(|s| (s, Slice::new(ring, s))).collect();
    let slice = |s: i64| slices.get(&s);

    let dim_at = |i: i64, t: i64| -> usize {
        c.module(i).twists.iter().map(|tw| slice(t - tw).map_or(0, |s| s.dim())).sum()
    };
    // rank of d_i restricted to degree t
    let rank_at = |i: i64, t: i64| -> usize {
        let Some(d) = c.differential(i) else { return 0 };
        let src = &d.source.twists;
        let tgt = &d.target.twists;
        let offsets: Vec<usize> = tgt
            .iter()
            .scan(0, |acc, tw| {
                let o = *acc;
                *acc += slice(t - tw).map_or(0, |s| s.dim());
                Some(o)
            })
            .collect();
        let width: usize = tgt.iter().map(|tw| slice(t - tw).map_or(0, |s| s.dim())).sum();
        let mut rows = Vec::new();
        for (a, tw) in src.iter().enumerate() {
            let Some(sa) = slice(t - tw) else { continue };
            for &q in &sa.quotient {
                let m = &sa.monomials[q];
                let mut row = vec![field.zero(); width];
                for (r, tr) in tgt.iter().enumerate() {
                    let e = d.entry(r, a);
                    if e.is_zero() {
                        continue;
                    }
                    let Some(sr) = slice(t - tr) else { continue };
                    let img = e.mul_term(m, &field.one());
                    let w = sr.dim();
                    sr.coordinates(field, &img, &mut row[offsets[r]..offsets[r] + w]);
                }
                rows.push(row);
            }
        }
        rank(field, width, &rows)
    };

    let per_degree: Vec<(i64, Vec<usize>)> = (low..=degree_bound)
        .into_par_iter()
        .map(|t| {
            let h = c
                .degrees()
                .map(|i| dim_at(i, t) - rank_at(i, t) - rank_at(i + 1, t))
                .collect();
            (t, h)
        })
        .collect();
    let mut lengths = vec![0u64; c.len()];
    for (t, h) in &per_degree {
        for (k, &v) in h.iter().enumerate() {
            if *t == degree_bound && v != 0 {
                return Err(Error::DegreeBoundInsufficient);
            }
            lengths[k] += v as u64;
        }
    }
    Ok(HomologyLengths { start: c.start(), lengths })
}

/// A degree bound for [`homology_lengths_bruteforce`] from the Gröbner
/// computation of the homology Hilbert series.
pub fn suggested_degree_bound<F: Field>(c: &ChainComplex<F>) -> Result<i64> {
    let n = c.ring().nvars();
    let mut top = c.modules().iter().flat_map(|m| m.twists.iter().copied()).max().unwrap_or(0);
    for (_, num) in super::homology::homology_hilbert_numerators(c)? {
        let h = crate::groebner::finite_hilbert_function(&num, n).ok_or(Error::NotFiniteLength)?;
        if let Some(d) = h.top_degree() {
            top = top.max(d);
        }
    }
    Ok(top + 1)
}
