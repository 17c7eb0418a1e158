use std::cmp::Ordering;

use super::order::ModuleOrder;
use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// A graded free module `⊕ S(-twist_i)` over a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub order: MonomialOrder,
    pub twists: Vec<i64>,
}

impl<F: Field> Ambient<F> {
    pub fn new(field: F, nvars: usize, order: MonomialOrder, twists: Vec<i64>) -> Self {
        Ambient { field, nvars, order, twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn zero_vector(&self) -> FreeVector<F> {
        FreeVector {
            components: (0..self.rank())
                .map(|_| Polynomial::zero(self.field, self.nvars, self.order))
                .collect(),
        }
    }

    /// `c·m·e_i`.
    pub fn basis_term(&self, i: usize, m: Monomial, c: F::Elem) -> FreeVector<F> {
        let mut v = self.zero_vector();
        v.components[i] = Polynomial::monomial(self.field, self.order, m, c);
        v
    }

    pub fn basis_vector(&self, i: usize) -> FreeVector<F> {
        self.basis_term(i, Monomial::one(self.nvars), self.field.one())
    }

    /// Degree of a homogeneous vector (`None` for zero), or an error.
    pub fn degree_of(&self, v: &FreeVector<F>) -> Result<Option<i64>> {
        if v.rank() != self.rank() {
            return Err(Error::AmbientMismatch(format!(
                "vector of rank {} in module of rank {}",
                v.rank(),
                self.rank()
            )));
        }
        let mut deg = None;
        for (c, p) in v.components.iter().enumerate() {
            if p.nvars() != self.nvars {
                return Err(Error::VariableMismatch { left: p.nvars(), right: self.nvars });
            }
            for (m, _) in p.terms() {
                let d = m.degree() as i64 + self.twists[c];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err(Error::Inhomogeneous),
                    _ => {}
                }
            }
        }
        Ok(deg)
    }
}

/// An element of a free module, one polynomial per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVector<F: Field> {
    pub components: Vec<Polynomial<F>>,
}

impl<F: Field> FreeVector<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Self {
        FreeVector { components }
    }

    pub fn from_polynomial(p: Polynomial<F>) -> Self {
        FreeVector { components: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn component(&self, i: usize) -> &Polynomial<F> {
        &self.components[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        FreeVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Polynomial<F>) -> Self {
        FreeVector { components: self.components.iter().map(|a| a * p).collect() }
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.components.iter().map(|p| p.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term<E> {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: E,
}

pub(crate) fn to_terms<F: Field>(v: &FreeVector<F>, order: &ModuleOrder) -> Vec<Term<F::Elem>> {
    let mut terms: Vec<Term<F::Elem>> = v
        .components
        .iter()
        .enumerate()
        .flat_map(|(comp, p)| {
            p.terms().iter().map(move |(m, c)| Term { comp, mono: m.clone(), coeff: c.clone() })
        })
        .collect();
    terms.sort_by(|a, b| order.cmp(b.comp, &b.mono, a.comp, &a.mono));
    terms
}

pub(crate) fn from_terms<F: Field>(ambient: &Ambient<F>, terms: &[Term<F::Elem>]) -> FreeVector<F> {
    let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); ambient.rank()];
    for t in terms {
        buckets[t.comp].push((t.mono.clone(), t.coeff.clone()));
    }
    let order = ambient.order;
    FreeVector {
        components: buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by(|x, y| order.cmp(&y.0, &x.0));
                Polynomial::from_sorted_terms(ambient.field, ambient.nvars, order, b)
            })
            .collect(),
    }
}

/// `a - c·m·g`, all sorted descending under `order`.
pub(crate) fn sub_mul<F: Field>(
    field: F,
    order: &ModuleOrder,
    a: &[Term<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    g: &[Term<F::Elem>],
) -> Vec<Term<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|t| Term {
        comp: t.comp,
        mono: t.mono.mul(m),
        coeff: field.neg(&field.mul(&t.coeff, c)),
    });
    let mut next_g = gi.next();
    while let Some(tg) = next_g.take() {
        if i >= a.len() {
            out.push(tg);
            out.extend(gi.by_ref());
            break;
        }
        let ta = &a[i];
        match order.cmp(ta.comp, &ta.mono, tg.comp, &tg.mono) {
            Ordering::Greater => {
                out.push(ta.clone());
                i += 1;
                next_g = Some(tg);
            }
            Ordering::Less => {
                out.push(tg);
                next_g = gi.next();
            }
            Ordering::Equal => {
                let s = field.add(&ta.coeff, &tg.coeff);
                if !field.is_zero(&s) {
                    out.push(Term { comp: ta.comp, mono: ta.mono.clone(), coeff: s });
                }
                i += 1;
                next_g = gi.next();
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out
}
