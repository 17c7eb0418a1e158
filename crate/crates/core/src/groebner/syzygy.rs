//! Syzygies: Schreyer's construction for Gröbner bases, and preimages of
//! submodules under a map of free modules by block elimination.

use super::buchberger::{buchberger, reduce_with_cofactors, s_vector, GbOptions, GroebnerBasis};
use super::order::ModuleOrder;
use super::vector::{Ambient, FreeVector, Term};
use crate::algebra::{Field, Monomial, Polynomial};
use crate::error::{Error, Result};

/// The first syzygy module of a Gröbner basis, generated by a Gröbner basis
/// of itself under the Schreyer order.
#[derive(Clone, Debug)]
pub struct SyzygyModule<F: Field> {
    /// One generator per basis element, twisted by its degree.
    pub ambient: Ambient<F>,
    pub order: ModuleOrder,
    pub generators: Vec<FreeVector<F>>,
}

/// Schreyer syzygies of `gb`, keeping only those whose Schreyer-leading term
/// is not divisible by another one's.
pub fn syzygies<F: Field>(gb: &GroebnerBasis<F>) -> Result<SyzygyModule<F>> {
    let field = gb.ambient().field;
    let elems = gb.elems();
    let amb = Ambient::new(
        field,
        gb.ambient().nvars,
        gb.ambient().order,
        (0..gb.len()).map(|i| gb.degree(i)).collect(),
    );
    let order = ModuleOrder::schreyer(gb.order().clone(), gb.leading_terms());

    let mut candidates: Vec<((usize, Monomial), Vec<Term<F::Elem>>)> = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if elems[i][0].comp != elems[j][0].comp {
                continue;
            }
            let lcm = elems[i][0].mono.lcm(&elems[j][0].mono);
            let mi = elems[i][0].mono.quotient_of(&lcm).expect("lcm");
            let mj = elems[j][0].mono.quotient_of(&lcm).expect("lcm");
            let ci = field.inv(&elems[i][0].coeff)?;
            let cj = field.inv(&elems[j][0].coeff)?;
            let s = s_vector(field, gb.order(), &elems[i], &elems[j]);
            let (rem, quotients) = reduce_with_cofactors(field, gb.order(), elems, s);
            if !rem.is_empty() {
                return Err(Error::Semantic("input is not a Gröbner basis".into()));
            }
            let mut terms = vec![
                Term { comp: i, mono: mi.clone(), coeff: ci },
                Term { comp: j, mono: mj, coeff: field.neg(&cj) },
            ];
            terms.extend(quotients.into_iter().map(|(l, m, c)| Term { comp: l, mono: m, coeff: field.neg(&c) }));
            candidates.push(((i, mi), terms));
        }
    }

    let mut kept: Vec<usize> = Vec::new();
    for (k, ((ci, mi), _)) in candidates.iter().enumerate() {
        let dominated = candidates.iter().enumerate().any(|(l, ((cl, ml), _))| {
            l != k && cl == ci && ml.divides(mi) && (ml != mi || l < k)
        });
        if !dominated {
            kept.push(k);
        }
    }
    let generators = kept
        .into_iter()
        .map(|k| {
            let terms = &candidates[k].1;
            // combine repeated terms through polynomial construction
            let mut comps: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); amb.rank()];
            for t in terms {
                comps[t.comp].push((t.mono.clone(), t.coeff.clone()));
            }
            FreeVector::new(
                comps.into_iter().map(|c| Polynomial::from_terms(field, amb.nvars, amb.order, c)).collect(),
            )
        })
        .collect();
    Ok(SyzygyModule { ambient: amb, order, generators })
}

/// `Σ v_a · columns[a]`.
pub fn apply_columns<F: Field>(
    target: &Ambient<F>,
    columns: &[FreeVector<F>],
    v: &FreeVector<F>,
) -> FreeVector<F> {
    let mut acc = target.zero_vector();
    for (col, coeff) in columns.iter().zip(&v.components) {
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&col.scale_poly(coeff));
    }
    acc
}

/// Reduced Gröbner basis (term-over-position) of
/// `{ v ∈ ⊕ S(-source_twists) : Σ v_a·columns[a] ∈ ⟨relations⟩ }`.
pub fn preimage<F: Field>(
    target: &Ambient<F>,
    columns: &[FreeVector<F>],
    source_twists: &[i64],
    relations: &[FreeVector<F>],
) -> Result<GroebnerBasis<F>> {
    if columns.len() != source_twists.len() {
        return Err(Error::AmbientMismatch("column count differs from source rank".into()));
    }
    let r = target.rank();
    let base = target.order;
    let mut twists = target.twists.clone();
    twists.extend_from_slice(source_twists);
    let aug = Ambient::new(target.field, target.nvars, base, twists);
    let zero = Polynomial::zero(target.field, target.nvars, base);
    let one = Polynomial::one(target.field, target.nvars, base);

    let mut gens = Vec::with_capacity(columns.len() + relations.len());
    for (a, col) in columns.iter().enumerate() {
        if col.rank() != r {
            return Err(Error::AmbientMismatch("column rank differs from target rank".into()));
        }
        let mut comps = col.components.clone();
        comps.extend((0..source_twists.len()).map(|b| if a == b { one.clone() } else { zero.clone() }));
        gens.push(FreeVector::new(comps));
    }
    for rel in relations {
        if rel.rank() != r {
            return Err(Error::AmbientMismatch("relation rank differs from target rank".into()));
        }
        let mut comps = rel.components.clone();
        comps.extend((0..source_twists.len()).map(|_| zero.clone()));
        gens.push(FreeVector::new(comps));
    }
    let gb = buchberger(&aug, ModuleOrder::Elimination { base, split: r }, &gens, &GbOptions::default())?;
    let source = Ambient::new(target.field, target.nvars, base, source_twists.to_vec());
    let elems: Vec<Vec<Term<F::Elem>>> = gb
        .elems()
        .iter()
        .filter(|e| e[0].comp >= r)
        .map(|e| e.iter().map(|t| Term { comp: t.comp - r, mono: t.mono.clone(), coeff: t.coeff.clone() }).collect())
        .collect();
    Ok(GroebnerBasis::from_parts(source, ModuleOrder::TermOverPosition(base), elems, true))
}

/// Generators of the syzygies of an arbitrary list of homogeneous vectors.
pub fn syzygies_of<F: Field>(
    target: &Ambient<F>,
    columns: &[FreeVector<F>],
) -> Result<GroebnerBasis<F>> {
    let twists: Vec<i64> = columns
        .iter()
        .map(|c| target.degree_of(c).map(|d| d.unwrap_or(0)))
        .collect::<Result<_>>()?;
    preimage(target, columns, &twists, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, MonomialOrder, PrimeField};

    fn setup(gens: &[&str]) -> (GroebnerBasis<PrimeField>, Vec<String>) {
        let f = PrimeField::new(101).unwrap();
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let amb = Ambient::new(f, 2, MonomialOrder::DegRevLex, vec![0]);
        let gens: Vec<_> = gens
            .iter()
            .map(|g| FreeVector::from_polynomial(parse_polynomial(g, f, &names, MonomialOrder::DegRevLex).unwrap()))
            .collect();
        let gb = buchberger(&amb, ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex), &gens, &GbOptions::default())
            .unwrap();
        (gb, names)
    }

    #[test]
    fn koszul_relation() {
        let (gb, names) = setup(&["x", "y"]);
        let syz = syzygies(&gb).unwrap();
        assert_eq!(syz.generators.len(), 1);
        assert_eq!(syz.generators[0].render(&names), "(y, -x)");
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let (gb, _) = setup(&["x"]);
        assert!(syzygies(&gb).unwrap().generators.is_empty());
    }

    #[test]
    fn square_of_maximal_ideal() {
        let (gb, names) = setup(&["x^2", "x*y", "y^2"]);
        let syz = syzygies(&gb).unwrap();
        let r: Vec<String> = syz.generators.iter().map(|g| g.render(&names)).collect();
        assert_eq!(r, vec!["(y, -x, 0)", "(0, y, -x)"]);
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let f = PrimeField::new(101).unwrap();
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let amb = Ambient::new(f, 2, MonomialOrder::DegRevLex, vec![0]);
        let col = |s: &str| FreeVector::from_polynomial(parse_polynomial(s, f, &names, MonomialOrder::DegRevLex).unwrap());
        let ker = syzygies_of(&amb, &[col("x"), col("y")]).unwrap();
        assert_eq!(ker.len(), 1);
        // monic in its leading term x·e_1
        assert_eq!(ker.generator(0).render(&names), "(-y, x)");
    }
}
