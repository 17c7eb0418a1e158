#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use totalbetti::algebra::{monomials_of_degree, Field, Monomial, MonomialOrder, Polynomial, PrimeField};
use totalbetti::complex::ChainComplex;
use totalbetti::graded::{minimal_free_resolution, GradedRing, Length, ModulePresentation};

pub fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn ring(p: u64, vars: &[&str], rels: &[&str]) -> Arc<GradedRing<PrimeField>> {
    GradedRing::quotient(fp(p), vars, rels).unwrap()
}

pub fn cyclic(r: &Arc<GradedRing<PrimeField>>, gens: &[&str]) -> ModulePresentation<PrimeField> {
    ModulePresentation::cyclic_from_strs(r.clone(), gens).unwrap()
}

pub fn resolve(m: &ModulePresentation<PrimeField>) -> ChainComplex<PrimeField> {
    minimal_free_resolution(m, 8).unwrap().complex
}

/// Full reduction of `f` by `basis` using only the division algorithm.
pub fn naive_reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let field = f.field();
    let mut rem = Polynomial::zero(field, f.nvars(), f.order());
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term().cloned() {
        match basis.iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(&m).unwrap();
                let k = field.div(&c, lc).unwrap();
                p = p.try_sub(&g.mul_term(&q, &k)).unwrap();
            }
            None => {
                let t = Polynomial::monomial(field, f.order(), m.clone(), c.clone());
                rem = rem.try_add(&t).unwrap();
                p = p.try_sub(&t).unwrap();
            }
        }
    }
    rem
}

fn s_poly<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let field = a.field();
    let (ma, ca) = a.leading_term().unwrap();
    let (mb, cb) = b.leading_term().unwrap();
    let l = ma.lcm(mb);
    let sa = a.mul_term(&ma.quotient_of(&l).unwrap(), &field.inv(ca).unwrap());
    let sb = b.mul_term(&mb.quotient_of(&l).unwrap(), &field.inv(cb).unwrap());
    sa.try_sub(&sb).unwrap()
}

/// Unoptimized Buchberger: close under S-polynomials, then reduce.
pub fn naive_groebner<F: Field>(gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut g: Vec<Polynomial<F>> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = naive_reduce(&s_poly(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let n = g.len();
            pairs.extend((0..n).map(|k| (k, n)));
            g.push(r);
        }
    }
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lp = p.leading_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial().unwrap();
            j != k && lq.divides(lp) && (lq != lp || j < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<_> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q.clone()).collect();
            let r = naive_reduce(&minimal[k], &others);
            let lc = r.leading_term().unwrap().1.clone();
            r.scale(&r.field().inv(&lc).unwrap())
        })
        .collect();
    reduced.sort_by(|a, b| {
        let o = a.order();
        o.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    reduced
}

/// `dim_k (S/I)_t` by linear algebra on all monomial multiples of the generators.
pub fn dense_hilbert<F: Field>(field: F, nvars: usize, gens: &[Polynomial<F>], t: u32) -> usize {
    use totalbetti::algebra::linalg::rank;
    let basis = monomials_of_degree(nvars, t);
    let index = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
    let mut rows = Vec::new();
    for g in gens {
        let Some(d) = g.homogeneous_degree() else { continue };
        if d > t {
            continue;
        }
        for m in monomials_of_degree(nvars, t - d) {
            let mut row = vec![field.zero(); basis.len()];
            for (mono, c) in g.terms() {
                row[index(&mono.mul(&m))] = c.clone();
            }
            rows.push(row);
        }
    }
    basis.len() - rank(field, basis.len(), &rows)
}

pub fn random_form(
    rng: &mut ChaCha8Rng,
    field: PrimeField,
    nvars: usize,
    degree: u32,
) -> Polynomial<PrimeField> {
    let p = field.modulus();
    let terms: Vec<(Monomial, u64)> = monomials_of_degree(nvars, degree)
        .into_iter()
        .filter_map(|m| {
            let c = rng.gen_range(0..p);
            (c != 0).then_some((m, c))
        })
        .collect();
    Polynomial::from_terms(field, nvars, MonomialOrder::DegRevLex, terms)
}

/// A finite-length cyclic module over a polynomial ring in one or two
/// variables whose resolution has ranks at most three.
pub fn random_finite_module(rng: &mut ChaCha8Rng) -> ModulePresentation<PrimeField> {
    let p = *[3u64, 5, 7, 101].choose(rng).unwrap();
    let field = fp(p);
    loop {
        let nvars = rng.gen_range(1..=2usize);
        let names: Vec<&str> = ["x", "y"][..nvars].to_vec();
        let r = GradedRing::polynomial_ring(field, &names).unwrap();
        let ngens = rng.gen_range(nvars..=3.min(nvars + 1));
        let gens: Vec<_> = (0..ngens)
            .map(|_| {
                let deg = rng.gen_range(1..=3);
                random_form(rng, field, nvars, deg)
            })
            .collect();
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        let m = ModulePresentation::cyclic(r, gens).unwrap();
        if m.is_zero() || m.length() == Length::Infinite {
            continue;
        }
        let res = minimal_free_resolution(&m, 6).unwrap();
        if res.complex.ranks().iter().all(|&r| r <= 3) {
            return m;
        }
    }
}
