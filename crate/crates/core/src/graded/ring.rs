use std::sync::Arc;

use crate::algebra::{parse_polynomial, Field, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ambient, FreeVector, GbOptions, GroebnerBasis, ModuleOrder};

/// A standard-graded ring `k[x_1..x_n] / J` with `J` homogeneous.
///
/// Elements are represented by their normal forms modulo a reduced Gröbner
/// basis of `J`.
#[derive(Clone, Debug)]
pub struct GradedRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
    ideal: Vec<Polynomial<F>>,
    ideal_gb: GroebnerBasis<F>,
    dimension: usize,
    complete_intersection: bool,
}

impl<F: Field> GradedRing<F> {
    pub fn polynomial_ring(field: F, names: &[&str]) -> Result<Arc<Self>> {
        Self::new(field, names.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    /// Parses the defining equations from text.
    pub fn quotient(field: F, names: &[&str], relations: &[&str]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r, field, &names, MonomialOrder::DegRevLex))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, names, rels)
    }

    pub fn new(field: F, names: Vec<String>, ideal: Vec<Polynomial<F>>) -> Result<Arc<Self>> {
        let order = MonomialOrder::DegRevLex;
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Semantic(format!("duplicate variable '{n}'")));
            }
        }
        let nvars = names.len();
        let mut gens = Vec::new();
        for g in &ideal {
            if g.nvars() != nvars {
                return Err(Error::VariableMismatch { left: g.nvars(), right: nvars });
            }
            if g.is_zero() {
                continue;
            }
            match g.homogeneous_degree() {
                None => return Err(Error::Inhomogeneous),
                Some(0) => return Err(Error::Semantic("quotient by the unit ideal".into())),
                Some(_) => {}
            }
            gens.push(g.with_order(order));
        }
        let amb = Ambient::new(field, nvars, order, vec![0]);
        let vecs: Vec<_> = gens.iter().cloned().map(FreeVector::from_polynomial).collect();
        let ideal_gb = buchberger(&amb, ModuleOrder::TermOverPosition(order), &vecs, &GbOptions::default())?;
        let dimension = staircase_dimension(&ideal_gb.leads_in_component(0), nvars);
        // homogeneous ideals of S: a regular sequence iff codimension = number of generators
        let complete_intersection = nvars - dimension == gens.len();
        Ok(Arc::new(GradedRing { field, names, order, ideal: gens, ideal_gb, dimension, complete_intersection }))
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn nvars(&self) -> usize {
        self.names.len()
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
    /// Krull dimension.
    pub fn dimension(&self) -> usize {
        self.dimension
    }
    pub fn is_complete_intersection(&self) -> bool {
        self.complete_intersection
    }
    pub fn is_quotient(&self) -> bool {
        !self.ideal.is_empty()
    }
    /// The defining equations as supplied (nonzero ones).
    pub fn ideal_generators(&self) -> &[Polynomial<F>] {
        &self.ideal
    }
    pub fn ideal_gb(&self) -> &GroebnerBasis<F> {
        &self.ideal_gb
    }

    /// The polynomial ring this ring is a quotient of.
    pub fn ambient_ring(&self) -> Arc<Self> {
        let names = self.names.clone();
        Self::new(self.field, names, Vec::new()).expect("polynomial ring")
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.field, self.nvars(), self.order)
    }
    pub fn one(&self) -> Polynomial<F> {
        self.reduce(&Polynomial::one(self.field, self.nvars(), self.order))
    }
    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.reduce(&Polynomial::constant(self.field, self.nvars(), self.order, c))
    }
    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.reduce(&Polynomial::var(self.field, self.nvars(), self.order, i))
    }
    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        self.reduce(&Polynomial::monomial(self.field, self.order, m, self.field.one()))
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        Ok(self.reduce(&parse_polynomial(text, self.field, &self.names, self.order)?))
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let f = if f.order() == self.order { f.clone() } else { f.with_order(self.order) };
        if self.ideal_gb.is_empty() {
            return f;
        }
        self.ideal_gb
            .normal_form(&FreeVector::from_polynomial(f))
            .expect("same ambient")
            .components
            .pop()
            .expect("rank one")
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a + b
    }
    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a - b
    }
    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.reduce(&(a * b))
    }

    /// Two elements are equal in the quotient iff their representatives coincide.
    pub fn equal(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    pub fn ambient(&self, twists: Vec<i64>) -> Ambient<F> {
        Ambient::new(self.field, self.nvars(), self.order, twists)
    }

    /// `J · e_k` for every basis vector of `⊕ S(-twists)`.
    pub fn relations(&self, twists: &[i64]) -> Vec<FreeVector<F>> {
        let amb = self.ambient(twists.to_vec());
        let gens: Vec<Polynomial<F>> =
            self.ideal_gb.generators().into_iter().map(|mut v| v.components.remove(0)).collect();
        let mut out = Vec::with_capacity(gens.len() * twists.len());
        for k in 0..twists.len() {
            for g in &gens {
                let mut v = amb.zero_vector();
                v.components[k] = g.clone();
                out.push(v);
            }
        }
        out
    }

    /// Reduces every component modulo the defining ideal.
    pub fn reduce_vector(&self, v: &FreeVector<F>) -> FreeVector<F> {
        FreeVector::new(v.components.iter().map(|p| self.reduce(p)).collect())
    }

    pub fn render(&self, p: &Polynomial<F>) -> String {
        p.render(&self.names)
    }

    pub fn describe(&self) -> String {
        let base = match self.characteristic() {
            0 => format!("QQ[{}]", self.names.join(",")),
            p => format!("F({p})[{}]", self.names.join(",")),
        };
        if self.ideal.is_empty() {
            base
        } else {
            let rels: Vec<String> = self.ideal.iter().map(|g| self.render(g)).collect();
            format!("{base}/({})", rels.join(", "))
        }
    }
}

/// Krull dimension of `S / J` from the leading monomials of a Gröbner basis of `J`:
/// the largest set of variables supporting no leading monomial.
fn staircase_dimension(leads: &[Monomial], nvars: usize) -> usize {
    if leads.iter().any(|m| m.is_one()) {
        return 0;
    }
    let supports: Vec<u64> = leads
        .iter()
        .map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |s, (i, _)| s | 1 << i))
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}
