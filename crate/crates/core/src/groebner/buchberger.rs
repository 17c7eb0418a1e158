//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Pairs are processed by increasing degree (normal strategy). The chain
//! criterion is always active; the coprime-leads criterion only for ideals,
//! where it is valid.

use std::collections::{BTreeSet, HashSet};

use super::order::ModuleOrder;
use super::vector::{from_terms, sub_mul, to_terms, Ambient, FreeVector, Term};
use crate::algebra::{Field, Monomial};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbOptions {
    /// Pairs above this degree are not processed; the result is then only a
    /// truncated basis.
    pub degree_cap: Option<i64>,
}

/// A Gröbner basis of a submodule of `ambient`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ambient: Ambient<F>,
    order: ModuleOrder,
    elems: Vec<Vec<Term<F::Elem>>>,
    reduced: bool,
    complete: bool,
}

pub(crate) fn twisted_degree<E>(twists: &[i64], terms: &[Term<E>]) -> i64 {
    let t = &terms[0];
    t.mono.degree() as i64 + twists[t.comp]
}

fn find_divisor<E>(basis: &[Vec<Term<E>>], comp: usize, mono: &Monomial) -> Option<usize> {
    basis.iter().position(|g| g[0].comp == comp && g[0].mono.divides(mono))
}

/// Full normal form of `v` with respect to `basis` (leads need not be minimal).
pub(crate) fn reduce_full<F: Field>(
    field: F,
    order: &ModuleOrder,
    basis: &[Vec<Term<F::Elem>>],
    mut rest: Vec<Term<F::Elem>>,
) -> Vec<Term<F::Elem>> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let lead = &rest[start];
        match find_divisor(basis, lead.comp, &lead.mono) {
            Some(k) => {
                let g = &basis[k];
                let q = g[0].mono.quotient_of(&lead.mono).expect("divisor");
                let c = field.div(&lead.coeff, &g[0].coeff).expect("nonzero lead");
                rest = sub_mul(field, order, &rest[start..], &c, &q, g);
                start = 0;
            }
            None => {
                out.push(rest[start].clone());
                start += 1;
            }
        }
    }
    out
}

/// Normal form together with the quotients `(basis index, monomial, coefficient)`.
pub(crate) fn reduce_with_cofactors<F: Field>(
    field: F,
    order: &ModuleOrder,
    basis: &[Vec<Term<F::Elem>>],
    mut rest: Vec<Term<F::Elem>>,
) -> (Vec<Term<F::Elem>>, Vec<(usize, Monomial, F::Elem)>) {
    let mut out = Vec::new();
    let mut quotients = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let lead = &rest[start];
        match find_divisor(basis, lead.comp, &lead.mono) {
            Some(k) => {
                let g = &basis[k];
                let q = g[0].mono.quotient_of(&lead.mono).expect("divisor");
                let c = field.div(&lead.coeff, &g[0].coeff).expect("nonzero lead");
                rest = sub_mul(field, order, &rest[start..], &c, &q, g);
                quotients.push((k, q, c));
                start = 0;
            }
            None => {
                out.push(rest[start].clone());
                start += 1;
            }
        }
    }
    (out, quotients)
}

fn make_monic<F: Field>(field: F, v: &mut [Term<F::Elem>]) {
    let inv = field.inv(&v[0].coeff).expect("nonzero lead");
    for t in v.iter_mut() {
        t.coeff = field.mul(&t.coeff, &inv);
    }
}

pub(crate) fn s_vector<F: Field>(
    field: F,
    order: &ModuleOrder,
    a: &[Term<F::Elem>],
    b: &[Term<F::Elem>],
) -> Vec<Term<F::Elem>> {
    let lcm = a[0].mono.lcm(&b[0].mono);
    let ma = a[0].mono.quotient_of(&lcm).expect("lcm");
    let mb = b[0].mono.quotient_of(&lcm).expect("lcm");
    let ca = field.inv(&a[0].coeff).expect("nonzero lead");
    let cb = field.inv(&b[0].coeff).expect("nonzero lead");
    let scaled_a = sub_mul(field, order, &[], &field.neg(&ca), &ma, a);
    sub_mul(field, order, &scaled_a, &cb, &mb, b)
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger<F: Field>(
    ambient: &Ambient<F>,
    order: ModuleOrder,
    gens: &[FreeVector<F>],
    opts: &GbOptions,
) -> Result<GroebnerBasis<F>> {
    let field = ambient.field;
    let twists = &ambient.twists;
    let ideal_case = ambient.rank() == 1;

    let mut inputs: Vec<(i64, Vec<Term<F::Elem>>)> = Vec::new();
    for g in gens {
        let Some(d) = ambient.degree_of(g)? else { continue };
        if g.components.iter().any(|p| p.field() != field) {
            return Err(Error::FieldMismatch);
        }
        inputs.push((d, to_terms(g, &order)));
    }

    // (degree, kind, a, b); kind 0 = input a, kind 1 = pair (a, b)
    let mut queue: BTreeSet<(i64, u8, usize, usize)> = BTreeSet::new();
    for (k, (d, _)) in inputs.iter().enumerate() {
        queue.insert((*d, 0, k, 0));
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut basis: Vec<Vec<Term<F::Elem>>> = Vec::new();
    let mut complete = true;

    while let Some(&item) = queue.iter().next() {
        let (deg, kind, a, b) = item;
        if opts.degree_cap.is_some_and(|cap| deg > cap) {
            complete = false;
            break;
        }
        queue.remove(&item);
        let candidate = if kind == 0 {
            std::mem::take(&mut inputs[a].1)
        } else {
            pending.remove(&(a, b));
            let lead_a = &basis[a][0];
            let lead_b = &basis[b][0];
            let lcm = lead_a.mono.lcm(&lead_b.mono);
            let comp = lead_a.comp;
            let chain = (0..basis.len()).any(|k| {
                k != a
                    && k != b
                    && basis[k][0].comp == comp
                    && basis[k][0].mono.divides(&lcm)
                    && !pending.contains(&(a.min(k), a.max(k)))
                    && !pending.contains(&(b.min(k), b.max(k)))
            });
            if chain {
                continue;
            }
            s_vector(field, &order, &basis[a], &basis[b])
        };
        let mut h = reduce_full(field, &order, &basis, candidate);
        if h.is_empty() {
            continue;
        }
        make_monic(field, &mut h);
        let k = basis.len();
        for (l, g) in basis.iter().enumerate() {
            if g[0].comp != h[0].comp {
                continue;
            }
            if ideal_case && g[0].mono.is_coprime(&h[0].mono) {
                continue;
            }
            let lcm = g[0].mono.lcm(&h[0].mono);
            let d = lcm.degree() as i64 + twists[h[0].comp];
            queue.insert((d, 1, l, k));
            pending.insert((l, k));
        }
        basis.push(h);
    }

    let elems = interreduce(field, &order, basis);
    Ok(GroebnerBasis { ambient: ambient.clone(), order, elems, reduced: true, complete })
}

fn interreduce<F: Field>(
    field: F,
    order: &ModuleOrder,
    mut basis: Vec<Vec<Term<F::Elem>>>,
) -> Vec<Vec<Term<F::Elem>>> {
    // ascending leads: any divisor of a lead comes before it
    basis.sort_by(|x, y| order.cmp(x[0].comp, &x[0].mono, y[0].comp, &y[0].mono));
    let mut kept: Vec<Vec<Term<F::Elem>>> = Vec::new();
    for g in basis {
        if find_divisor(&kept, g[0].comp, &g[0].mono).is_none() {
            kept.push(g);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for (i, g) in kept.iter().enumerate() {
        let others: Vec<Vec<Term<F::Elem>>> =
            kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let mut v = vec![g[0].clone()];
        v.extend(reduce_full(field, order, &others, g[1..].to_vec()));
        out.push(v);
    }
    out.sort_by(|x, y| order.cmp(y[0].comp, &y[0].mono, x[0].comp, &x[0].mono));
    out
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_parts(
        ambient: Ambient<F>,
        order: ModuleOrder,
        elems: Vec<Vec<Term<F::Elem>>>,
        complete: bool,
    ) -> Self {
        GroebnerBasis { ambient, order, elems, reduced: true, complete }
    }

    pub fn ambient(&self) -> &Ambient<F> {
        &self.ambient
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// False when a degree cap stopped the computation early.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub(crate) fn elems(&self) -> &[Vec<Term<F::Elem>>] {
        &self.elems
    }

    pub fn generators(&self) -> Vec<FreeVector<F>> {
        self.elems.iter().map(|e| from_terms(&self.ambient, e)).collect()
    }

    pub fn generator(&self, i: usize) -> FreeVector<F> {
        from_terms(&self.ambient, &self.elems[i])
    }

    pub fn degree(&self, i: usize) -> i64 {
        twisted_degree(&self.ambient.twists, &self.elems[i])
    }

    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().map(|e| (e[0].comp, e[0].mono.clone())).collect()
    }

    /// Leading monomials lying in component `c`.
    pub fn leads_in_component(&self, c: usize) -> Vec<Monomial> {
        self.elems.iter().filter(|e| e[0].comp == c).map(|e| e[0].mono.clone()).collect()
    }

    fn check_ambient(&self, v: &FreeVector<F>) -> Result<()> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "vector of rank {} against basis of rank {}",
                v.rank(),
                self.ambient.rank()
            )));
        }
        for p in &v.components {
            if p.nvars() != self.ambient.nvars {
                return Err(Error::VariableMismatch { left: p.nvars(), right: self.ambient.nvars });
            }
            if p.field() != self.ambient.field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    /// The unique remainder of `v`: no term is divisible by a leading term.
    pub fn normal_form(&self, v: &FreeVector<F>) -> Result<FreeVector<F>> {
        self.check_ambient(v)?;
        let r = reduce_full(self.ambient.field, &self.order, &self.elems, to_terms(v, &self.order));
        Ok(from_terms(&self.ambient, &r))
    }

    pub fn contains(&self, v: &FreeVector<F>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Re-checks that every S-pair reduces to zero.
    pub fn audit_s_pairs(&self) -> bool {
        let f = self.ambient.field;
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                if self.elems[i][0].comp != self.elems[j][0].comp {
                    continue;
                }
                let s = s_vector(f, &self.order, &self.elems[i], &self.elems[j]);
                if !reduce_full(f, &self.order, &self.elems, s).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
