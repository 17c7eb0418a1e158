//! Sparse distributed multivariate polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A polynomial over `F` in a fixed number of variables.
///
/// Terms are stored strictly descending under `order` and never carry a zero
/// coefficient, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize, order: MonomialOrder) -> Self {
        Polynomial { field, nvars, order, terms: Vec::new() }
    }

    pub fn constant(field: F, nvars: usize, order: MonomialOrder, c: F::Elem) -> Self {
        Self::monomial(field, order, Monomial::one(nvars), c)
    }

    pub fn one(field: F, nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(field, nvars, order, field.one())
    }

    pub fn var(field: F, nvars: usize, order: MonomialOrder, i: usize) -> Self {
        Self::monomial(field, order, Monomial::var(nvars, i), field.one())
    }

    pub fn monomial(field: F, order: MonomialOrder, m: Monomial, c: F::Elem) -> Self {
        let nvars = m.nvars();
        let terms = if field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { field, nvars, order, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(
        field: F,
        nvars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { field, nvars, order, terms }
    }

    /// Trusts the caller that `terms` are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(
        field: F,
        nvars: usize,
        order: MonomialOrder,
        terms: Vec<(Monomial, F::Elem)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { field, nvars, order, terms }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree of the highest-degree term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common degree of all terms, for nonzero homogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coefficient(&self) -> F::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.order != other.order {
            return Ok(Self::from_terms(
                self.field,
                self.nvars,
                self.order,
                self.terms.iter().chain(other.terms.iter()).cloned(),
            ));
        }
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        let f = self.field;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = f.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial { field: f, nvars: self.nvars, order, terms })
    }

    // sorted merge of two same-order polynomials
    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let oc = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            match self.order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((other.terms[j].0.clone(), oc(&other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&self.terms[i].1, &oc(&other.terms[j].1));
                    if !f.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), oc(c))));
        Polynomial { field: f, nvars: self.nvars, order: self.order, terms: out }
    }

    pub fn neg_ref(&self) -> Self {
        let f = self.field;
        Polynomial {
            field: f,
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars, self.order);
        }
        Polynomial {
            field: f,
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    /// `c · m · self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars, self.order);
        }
        Polynomial {
            field: f,
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.field, self.nvars, self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { field: self.field, nvars: self.nvars, order, terms }
    }

    /// Substitutes every monomial by its `k`-th power and every coefficient by
    /// its `k`-th power. In characteristic `p` with `k = p^e` this is `f^k`.
    pub fn frobenius_map(&self, k: u32) -> Self {
        let f = self.field;
        Polynomial {
            field: f,
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.pow(k), f.pow(c, k as u64))).collect(),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = self.field;
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mut coeff = f.render(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.render(names);
            if m.is_one() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    fn ring(p: u64) -> (PrimeField, impl Fn(usize) -> Polynomial<PrimeField>) {
        let f = PrimeField::new(p).unwrap();
        (f, move |i| Polynomial::var(f, 2, MonomialOrder::DegRevLex, i))
    }

    #[test]
    fn difference_of_squares() {
        let (_, v) = ring(101);
        let (x, y) = (v(0), v(1));
        let prod = &(&x + &y) * &(&x - &y);
        assert_eq!(prod, &(&x * &x) - &(&y * &y));
        assert_eq!(prod.homogeneous_degree(), Some(2));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let (_, v) = ring(101);
        let f = &v(0) + &v(1);
        assert!((&f + &(-&f)).terms().is_empty());
    }

    #[test]
    fn binomial_square_mod_three() {
        let (f, v) = ring(3);
        let s = &v(0) + &v(1);
        let sq = &s * &s;
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(sq.render(&names), "x^2 - x*y + y^2");
        assert_eq!(sq.coefficient(&Monomial::from_exponents(&[1, 1])), f.elem(2));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let f = PrimeField::new(7).unwrap();
        let a = Polynomial::var(f, 2, MonomialOrder::DegRevLex, 0);
        let b = Polynomial::var(f, 3, MonomialOrder::DegRevLex, 0);
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch { left: 2, right: 3 }));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn frobenius_map_is_pth_power() {
        let (_, v) = ring(3);
        let g = &v(0) - &v(1);
        assert_eq!(g.frobenius_map(3), g.pow(3));
        assert_eq!(g.frobenius_map(9), g.pow(9));
    }
}
