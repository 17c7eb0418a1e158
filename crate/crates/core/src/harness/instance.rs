use std::sync::Arc;

use crate::algebra::parse::parse_polynomial_at;
use crate::algebra::{Field, Polynomial, PrimeField, Rationals};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::graded::{koszul_complex, GradedRing, ModulePresentation};

use super::syntax::{parse_document, CheckDecl, CheckKind, ComplexSource, Document, FieldSpec, Spanned};

#[derive(Clone, Debug)]
pub struct NamedModule<F: Field> {
    pub name: String,
    pub presentation: ModulePresentation<F>,
}

#[derive(Clone, Debug)]
pub enum ComplexDef<F: Field> {
    Koszul { elements: Vec<Polynomial<F>>, complex: ChainComplex<F> },
    Resolve { module: String },
}

#[derive(Clone, Debug)]
pub struct NamedComplex<F: Field> {
    pub name: String,
    pub def: ComplexDef<F>,
}

/// A ring, the modules and complexes declared over it, and the checks to run.
#[derive(Clone, Debug)]
pub struct ProblemInstance<F: Field> {
    pub ring_name: String,
    pub ring: Arc<GradedRing<F>>,
    pub modules: Vec<NamedModule<F>>,
    pub complexes: Vec<NamedComplex<F>>,
    pub checks: Vec<CheckDecl>,
}

#[derive(Clone, Debug)]
pub enum AnyInstance {
    Prime(ProblemInstance<PrimeField>),
    Rational(ProblemInstance<Rationals>),
}

/// What a check name refers to.
pub enum Target<'a, F: Field> {
    Module(&'a NamedModule<F>),
    Complex(&'a NamedComplex<F>),
}

impl<F: Field> ProblemInstance<F> {
    pub fn module(&self, name: &str) -> Option<&NamedModule<F>> {
        self.modules.iter().find(|m| m.name == name)
    }

    pub fn complex(&self, name: &str) -> Option<&NamedComplex<F>> {
        self.complexes.iter().find(|c| c.name == name)
    }

    pub fn target(&self, name: &str) -> Option<Target<'_, F>> {
        self.module(name).map(Target::Module).or_else(|| self.complex(name).map(Target::Complex))
    }

    /// The module a target is built from, if any.
    pub fn module_of(&self, name: &str) -> Option<&ModulePresentation<F>> {
        match self.target(name)? {
            Target::Module(m) => Some(&m.presentation),
            Target::Complex(NamedComplex { def: ComplexDef::Resolve { module }, .. }) => {
                self.module(module).map(|m| &m.presentation)
            }
            Target::Complex(_) => None,
        }
    }
}

pub fn parse_instance(text: &str) -> Result<AnyInstance> {
    let doc = parse_document(text)?;
    match doc.ring.field {
        FieldSpec::Prime(p) => {
            let field = PrimeField::new(p)
                .map_err(|_| Error::Semantic(format!("line {}: {p} is not a prime", doc.ring.line)))?;
            Ok(AnyInstance::Prime(elaborate(field, doc)?))
        }
        FieldSpec::Rationals => Ok(AnyInstance::Rational(elaborate(Rationals, doc)?)),
    }
}

fn at(line: usize, e: Error) -> Error {
    match e {
        Error::Syntax { .. } => e,
        other => Error::Semantic(format!("line {line}: {other}")),
    }
}

fn poly<F: Field>(field: F, names: &[String], s: &Spanned) -> Result<Polynomial<F>> {
    parse_polynomial_at(&s.text, field, names, crate::algebra::MonomialOrder::DegRevLex, s.line, s.col - 1)
}

fn elaborate<F: Field>(field: F, doc: Document) -> Result<ProblemInstance<F>> {
    let names = doc.ring.vars.clone();
    let rels = doc.ring.quotient.iter().map(|s| poly(field, &names, s)).collect::<Result<Vec<_>>>()?;
    let ring = GradedRing::new(field, names.clone(), rels).map_err(|e| at(doc.ring.line, e))?;

    let mut seen: Vec<&str> = vec![doc.ring.name.as_str()];
    let fresh = |seen: &[&str], name: &str, line: usize| -> Result<()> {
        if seen.contains(&name) {
            return Err(Error::Semantic(format!("line {line}: name '{name}' is already defined")));
        }
        Ok(())
    };

    let mut modules = Vec::new();
    for m in &doc.modules {
        fresh(&seen, &m.name, m.line)?;
        let width = m.rows.first().map_or(0, |r| r.len());
        if m.rows.iter().any(|r| r.len() != width) {
            return Err(Error::Semantic(format!("line {}: rows of module '{}' have different lengths", m.line, m.name)));
        }
        let entries = m
            .rows
            .iter()
            .map(|r| r.iter().map(|s| poly(field, &names, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let presentation =
            ModulePresentation::from_matrix(ring.clone(), entries, m.target_twists.clone(), m.source_twists.clone())
                .map_err(|e| match e {
                    Error::Semantic(msg) => Error::Semantic(format!("line {}: module '{}': {msg}", m.line, m.name)),
                    other => at(m.line, other),
                })?;
        modules.push(NamedModule { name: m.name.clone(), presentation });
        seen.push(&m.name);
    }

    let mut complexes = Vec::new();
    for c in &doc.complexes {
        fresh(&seen, &c.name, c.line)?;
        let def = match &c.source {
            ComplexSource::Koszul(items) => {
                let elements = items.iter().map(|s| poly(field, &names, s)).collect::<Result<Vec<_>>>()?;
                let complex = koszul_complex(&ring, &elements).map_err(|e| at(c.line, e))?;
                ComplexDef::Koszul { elements, complex }
            }
            ComplexSource::Resolve(m) => {
                if !modules.iter().any(|x: &NamedModule<F>| &x.name == m) {
                    return Err(Error::Semantic(format!("line {}: unknown module '{m}'", c.line)));
                }
                ComplexDef::Resolve { module: m.clone() }
            }
        };
        complexes.push(NamedComplex { name: c.name.clone(), def });
        seen.push(&c.name);
    }

    let mut checks = doc.checks.clone();
    if checks.is_empty() {
        for m in &doc.modules {
            for kind in [CheckKind::Beh, CheckKind::Binomial, CheckKind::Equality] {
                checks.push(CheckDecl { kind, target: m.name.clone(), emax: None, cap: None, line: m.line });
            }
        }
    }
    let inst = ProblemInstance { ring_name: doc.ring.name.clone(), ring, modules, complexes, checks };
    for ch in &inst.checks {
        if inst.target(&ch.target).is_none() {
            return Err(Error::Semantic(format!("line {}: unknown target '{}'", ch.line, ch.target)));
        }
        if let Some(m) = inst.module_of(&ch.target) {
            if m.is_zero() {
                return Err(Error::Semantic(format!("line {}: module for '{}' is zero", ch.line, ch.target)));
            }
        }
    }
    Ok(inst)
}
