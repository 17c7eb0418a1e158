//! Hilbert series of monomial submodules, via numerators `N(t)` with
//! `HS = N(t) / (1 - t)^n`.

use super::buchberger::GroebnerBasis;
use crate::algebra::{Field, Monomial};

/// Finite Laurent polynomial `Σ coeffs[k] · t^(low + k)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn top_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coefficient(&self, t: i64) -> i64 {
        if t < self.low {
            return 0;
        }
        self.coeffs.get((t - self.low) as usize).copied().unwrap_or(0)
    }

    /// `(degree, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (self.low + k as i64, c))
    }

    pub fn value_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.top_degree().unwrap().max(other.top_degree().unwrap());
        let coeffs = (low..=high).map(|t| self.coefficient(t) + other.coefficient(t)).collect();
        LaurentPoly::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + other.low, coeffs)
    }

    /// Exact quotient by `(1 - t)`, when it exists.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.value_at_one() != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0;
        for c in &self.coeffs {
            acc += c;
            q.push(acc);
        }
        Some(LaurentPoly::new(self.low, q))
    }
}

fn one_minus_t_pow(d: u32) -> LaurentPoly {
    let mut c = vec![0i64; d as usize + 1];
    c[0] += 1;
    c[d as usize] -= 1;
    LaurentPoly::new(0, c)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S / (gens)` for a monomial ideal.
pub fn monomial_ideal_numerator(gens: &[Monomial], nvars: usize) -> LaurentPoly {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::new(0, vec![1]);
    }
    if gens.iter().any(|g| g.is_one()) {
        return LaurentPoly::zero();
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let (v, &most) = counts.iter().enumerate().max_by_key(|(i, &c)| (c, std::cmp::Reverse(*i))).unwrap();
    if most <= 1 {
        // pairwise coprime generators
        return gens.iter().fold(LaurentPoly::new(0, vec![1]), |acc, g| acc.mul(&one_minus_t_pow(g.degree())));
    }
    let e = gens.iter().map(|g| g.exponents()[v]).filter(|&x| x > 0).min().unwrap();
    let mut pexp = vec![0u32; nvars];
    pexp[v] = e;
    let pivot = Monomial::from_exponents(&pexp);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[v] = ex[v].saturating_sub(e);
            Monomial::from_exponents(&ex)
        })
        .collect();
    let a = numerator_rec(minimalize(plus), nvars);
    let b = numerator_rec(minimalize(colon), nvars);
    a.add(&b.shift(e as i64))
}

/// Numerator of the Hilbert series of `ambient / ⟨gb⟩`.
pub fn module_numerator<F: Field>(gb: &GroebnerBasis<F>) -> LaurentPoly {
    let amb = gb.ambient();
    (0..amb.rank()).fold(LaurentPoly::zero(), |acc, c| {
        acc.add(&monomial_ideal_numerator(&gb.leads_in_component(c), amb.nvars).shift(amb.twists[c]))
    })
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Coefficient of `t^deg` in `numerator / (1 - t)^nvars`.
pub fn hilbert_function_value(numerator: &LaurentPoly, nvars: usize, deg: i64) -> i64 {
    let n = nvars as i64;
    numerator
        .terms()
        .map(|(k, a)| {
            let s = deg - k;
            if s < 0 {
                0
            } else if n == 0 {
                if s == 0 { a } else { 0 }
            } else {
                a * binomial(s + n - 1, n - 1)
            }
        })
        .sum()
}

/// The Hilbert function as a finite polynomial, if the module has finite length.
pub fn finite_hilbert_function(numerator: &LaurentPoly, nvars: usize) -> Option<LaurentPoly> {
    let mut q = numerator.clone();
    for _ in 0..nvars {
        q = q.div_one_minus_t()?;
    }
    Some(q)
}
