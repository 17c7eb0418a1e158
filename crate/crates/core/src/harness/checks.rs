use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::Field;
use crate::complex::{
    homology_lengths, homology_lengths_bruteforce, suggested_degree_bound, tensor_module_homology, AdamsSquares,
    ChainComplex, HomologyLengths,
};
use crate::error::Error;
use crate::frobenius::{dutta_squares, frobenius_minimality_audit, DuttaSequence};
use crate::graded::{
    default_cap, is_regular_sequence, minimal_free_resolution, GradedRing, Length, ModulePresentation, Resolution,
};
use crate::groebner::FreeVector;

use super::instance::{AnyInstance, ComplexDef, ProblemInstance, Target};
use super::report::{CheckRecord, VerificationReport, Verdict};
use super::syntax::{CheckDecl, CheckKind};

pub const DEFAULT_EMAX: u32 = 3;

/// Overrides applied to every check; `None` defers to the instance file.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub emax: Option<u32>,
    pub cap: Option<usize>,
    pub oracle: bool,
}

struct Outcome {
    verdict: Verdict,
    reason: Option<String>,
    data: Map<String, Value>,
}

impl Outcome {
    fn inapplicable(reason: impl Into<String>, data: Map<String, Value>) -> Self {
        Outcome { verdict: Verdict::Inapplicable, reason: Some(reason.into()), data }
    }

    fn decide(failures: Vec<String>, data: Map<String, Value>) -> Self {
        if failures.is_empty() {
            Outcome { verdict: Verdict::Holds, reason: None, data }
        } else {
            Outcome { verdict: Verdict::Fails, reason: Some(failures.join("; ")), data }
        }
    }

    fn error(e: Error, data: Map<String, Value>) -> Self {
        Outcome { verdict: Verdict::Fails, reason: Some(e.to_string()), data }
    }
}

fn lengths_json(h: &HomologyLengths) -> Value {
    json!({ "start": h.start, "lengths": h.lengths })
}

fn sequence_json(s: &DuttaSequence) -> Value {
    json!({ "euler": s.euler, "normalized": s.rendered_terms() })
}

pub fn run(inst: &AnyInstance, opts: &RunOptions) -> VerificationReport {
    match inst {
        AnyInstance::Prime(i) => run_instance(i, opts),
        AnyInstance::Rational(i) => run_instance(i, opts),
    }
}

pub fn run_instance<F: Field>(inst: &ProblemInstance<F>, opts: &RunOptions) -> VerificationReport {
    let mut runner = Runner { inst, opts, resolutions: HashMap::new() };
    let checks = inst.checks.iter().map(|decl| runner.check(decl)).collect();
    VerificationReport {
        ring: inst.ring_name.clone(),
        presentation: inst.ring.describe(),
        characteristic: inst.ring.characteristic(),
        dimension: inst.ring.dimension(),
        complete_intersection: inst.ring.is_complete_intersection(),
        checks,
    }
}

struct ModuleCtx<'a, F: Field> {
    module: &'a ModulePresentation<F>,
    length: u64,
    res: Resolution<F>,
}

struct Runner<'a, F: Field> {
    inst: &'a ProblemInstance<F>,
    opts: &'a RunOptions,
    resolutions: HashMap<(String, usize), Result<Resolution<F>, Error>>,
}

impl<'a, F: Field> Runner<'a, F> {
    fn ring(&self) -> &Arc<GradedRing<F>> {
        &self.inst.ring
    }

    fn cap(&self, decl: &CheckDecl) -> usize {
        self.opts.cap.or(decl.cap).unwrap_or_else(|| default_cap(self.ring()))
    }

    fn emax(&self, decl: &CheckDecl) -> u32 {
        self.opts.emax.or(decl.emax).unwrap_or(DEFAULT_EMAX)
    }

    fn dimension(&self) -> usize {
        self.ring().dimension()
    }

    fn check(&mut self, decl: &CheckDecl) -> CheckRecord {
        let out = match decl.kind {
            CheckKind::Beh => self.beh(decl),
            CheckKind::Binomial => self.binomial(decl),
            CheckKind::Equality => self.equality(decl),
            CheckKind::Psi2 => self.psi2(decl),
            CheckKind::Dutta => self.dutta(decl),
        };
        CheckRecord {
            check: decl.kind.name().to_string(),
            target: decl.target.clone(),
            verdict: out.verdict,
            reason: out.reason,
            data: out.data,
        }
    }

    fn module_name(&self, target: &str) -> Option<String> {
        match self.inst.target(target)? {
            Target::Module(m) => Some(m.name.clone()),
            Target::Complex(c) => match &c.def {
                ComplexDef::Resolve { module } => Some(module.clone()),
                ComplexDef::Koszul { .. } => None,
            },
        }
    }

    fn resolution(&mut self, module: &str, cap: usize) -> Result<Resolution<F>, Error> {
        let key = (module.to_string(), cap);
        if !self.resolutions.contains_key(&key) {
            let m = &self.inst.module(module).expect("declared module").presentation;
            let res = minimal_free_resolution(m, cap);
            self.resolutions.insert(key.clone(), res);
        }
        self.resolutions[&key].clone()
    }

    fn inputs(&self, decl: &CheckDecl, data: &mut Map<String, Value>) {
        let mut inputs = Map::new();
        if let Some(name) = self.module_name(&decl.target) {
            let m = &self.inst.module(&name).expect("declared module").presentation;
            inputs.insert("module".into(), json!(m.render()));
            inputs.insert("cap".into(), json!(self.cap(decl)));
        } else if let Some(Target::Complex(c)) = self.inst.target(&decl.target) {
            if let ComplexDef::Koszul { elements, .. } = &c.def {
                let els: Vec<String> = elements.iter().map(|e| self.ring().render(e)).collect();
                inputs.insert("koszul".into(), json!(els));
            }
        }
        if decl.kind == CheckKind::Dutta {
            inputs.insert("emax".into(), json!(self.emax(decl)));
        }
        data.insert("inputs".into(), Value::Object(inputs));
    }

    fn module_ctx(&mut self, decl: &CheckDecl, data: &mut Map<String, Value>) -> Result<ModuleCtx<'a, F>, Outcome> {
        let inst = self.inst;
        let Some(name) = self.module_name(&decl.target) else {
            return Err(Outcome::inapplicable(
                format!("check needs a module; '{}' is a Koszul complex", decl.target),
                data.clone(),
            ));
        };
        let module = &inst.module(&name).expect("declared module").presentation;
        let length = match module.length() {
            Length::Finite(n) => n,
            Length::Infinite => return Err(Outcome::inapplicable("module has infinite length", data.clone())),
        };
        let res = match self.resolution(&name, self.cap(decl)) {
            Ok(r) => r,
            Err(e @ Error::ProjectiveDimensionExceedsCap { .. }) => {
                return Err(Outcome::inapplicable(e.to_string(), data.clone()))
            }
            Err(e) => return Err(Outcome::error(e, data.clone())),
        };
        data.insert("d".into(), json!(self.dimension()));
        data.insert("length".into(), json!(length));
        data.insert("betti".into(), json!(res.betti.totals()));
        Ok(ModuleCtx { module, length, res })
    }

    /// The complex a check is about: a resolution or a declared Koszul complex.
    fn complex(&mut self, decl: &CheckDecl, data: &mut Map<String, Value>) -> Result<(ChainComplex<F>, bool), Outcome> {
        if let Some(Target::Complex(c)) = self.inst.target(&decl.target) {
            if let ComplexDef::Koszul { complex, .. } = &c.def {
                return Ok((complex.clone(), false));
            }
        }
        let name = self.module_name(&decl.target).expect("module target");
        match self.resolution(&name, self.cap(decl)) {
            Ok(r) => {
                data.insert("betti".into(), json!(r.betti.totals()));
                Ok((r.complex, true))
            }
            Err(e @ Error::ProjectiveDimensionExceedsCap { .. }) => Err(Outcome::inapplicable(e.to_string(), data.clone())),
            Err(e) => Err(Outcome::error(e, data.clone())),
        }
    }

    fn oracle(&self, complexes: &[(&str, &ChainComplex<F>)], data: &mut Map<String, Value>, failures: &mut Vec<String>) {
        if !self.opts.oracle {
            return;
        }
        let mut out = Map::new();
        for (label, c) in complexes {
            let entry = (|| -> Result<Value, Error> {
                let gb = homology_lengths(c)?;
                let bound = suggested_degree_bound(c)?;
                let bf = homology_lengths_bruteforce(c, bound)?;
                if gb != bf {
                    failures.push(format!("oracle disagrees on {label}"));
                }
                Ok(json!({ "groebner": gb.lengths, "bruteforce": bf.lengths, "degree_bound": bound, "agree": gb == bf }))
            })();
            let v = entry.unwrap_or_else(|e| {
                failures.push(format!("oracle on {label}: {e}"));
                json!({ "error": e.to_string() })
            });
            out.insert(label.to_string(), v);
        }
        data.insert("oracle".into(), Value::Object(out));
    }

    /// `F ⊗ R/I` for cyclic `M = R/I`, as a complex over `S/(J + I)`.
    fn tensor_with_cyclic(&self, f: &ChainComplex<F>, m: &ModulePresentation<F>) -> Option<ChainComplex<F>> {
        if m.target_twists().len() != 1 {
            return None;
        }
        let ring = self.ring();
        let mut gens = ring.ideal_generators().to_vec();
        gens.extend(m.map().columns().into_iter().map(|c| c.components[0].clone()).filter(|p| !p.is_zero()));
        let quotient = GradedRing::new(ring.field(), ring.names().to_vec(), gens).ok()?;
        f.base_change(quotient).ok()
    }

    fn beh(&mut self, decl: &CheckDecl) -> Outcome {
        let mut data = Map::new();
        self.inputs(decl, &mut data);
        let ctx = match self.module_ctx(decl, &mut data) {
            Ok(c) => c,
            Err(o) => return o,
        };
        let d = self.dimension();
        let betti = ctx.res.betti.totals().to_vec();
        let total: u64 = betti.iter().map(|&b| b as u64).sum();
        let bound = 1u64 << d;
        data.insert("betti_table".into(), json!(ctx.res.betti.to_string()));
        data.insert("total".into(), json!(total));
        data.insert("bound".into(), json!(bound));
        let mut failures = Vec::new();
        if total < bound {
            failures.push(format!("total Betti number {total} < 2^{d} = {bound}"));
        }
        if !self.ring().field().two_invertible() {
            data.insert("chain".into(), Value::Null);
            data.insert("chain_note".into(), json!(Error::CharacteristicTwo.to_string()));
            return Outcome::decide(failures, data);
        }
        let f = &ctx.res.complex;
        let chain = (|| -> Result<(AdamsSquares<F>, [HomologyLengths; 4]), Error> {
            let sq = AdamsSquares::new(f)?;
            let t = homology_lengths(&sq.tensor.complex)?;
            let s = homology_lengths(&sq.sym)?;
            let l = homology_lengths(&sq.wedge)?;
            let fm = tensor_module_homology(f, ctx.module)?;
            Ok((sq, [t, s, l, fm]))
        })();
        let (sq, [t, s, l, fm]) = match chain {
            Ok(x) => x,
            Err(e) => return Outcome::error(e, data),
        };
        let lower = bound * ctx.length;
        let adams: u64 = s.iter().filter(|(i, _)| i.rem_euclid(2) == 0).map(|(_, x)| x).sum::<u64>()
            + l.iter().filter(|(i, _)| i.rem_euclid(2) == 1).map(|(_, x)| x).sum::<u64>();
        let tensor = t.total();
        let upper = ctx.length * total;
        let tor = fm.total();
        let mut homology = Map::new();
        homology.insert("T2F".into(), lengths_json(&t));
        homology.insert("S2F".into(), lengths_json(&s));
        homology.insert("L2F".into(), lengths_json(&l));
        homology.insert("FxM".into(), lengths_json(&fm));
        data.insert("homology".into(), Value::Object(homology));
        let ineq = [lower <= adams, adams <= tensor, tensor <= upper];
        data.insert(
            "chain".into(),
            json!({
                "two_d_length": lower,
                "even_s2_plus_odd_l2": adams,
                "tensor_square": tensor,
                "length_times_total": upper,
                "holds": ineq,
            }),
        );
        data.insert("tor_total".into(), json!(tor));
        data.insert("tor_equality".into(), json!(tor == upper));
        for (k, ok) in ineq.iter().enumerate() {
            if !ok {
                failures.push(format!("inequality {} of the chain fails", k + 1));
            }
        }
        if tor > upper {
            failures.push(format!("sum of lengths of H(F⊗M) is {tor} > {upper}"));
        }
        if tor != tensor {
            failures.push(format!("H(F⊗M) total {tor} differs from H(T²F) total {tensor}"));
        }
        if !rederive_chain(&data, ctx.length, d) {
            failures.push("recorded chain does not re-derive from its components".into());
        }
        let fxm = self.tensor_with_cyclic(f, ctx.module);
        let mut list: Vec<(&str, &ChainComplex<F>)> =
            vec![("F", f), ("T2F", &sq.tensor.complex), ("S2F", &sq.sym), ("L2F", &sq.wedge)];
        if let Some(c) = &fxm {
            list.push(("FxM", c));
        }
        self.oracle(&list, &mut data, &mut failures);
        Outcome::decide(failures, data)
    }

    fn binomial(&mut self, decl: &CheckDecl) -> Outcome {
        let mut data = Map::new();
        self.inputs(decl, &mut data);
        let ctx = match self.module_ctx(decl, &mut data) {
            Ok(c) => c,
            Err(o) => return o,
        };
        let d = self.dimension();
        let binomials: Vec<u64> = (0..=d).map(|i| binomial(d as u64, i as u64)).collect();
        data.insert("binomials".into(), json!(binomials));
        let failures = (0..=d)
            .filter(|&i| (ctx.res.betti.betti(i as i64) as u64) < binomials[i])
            .map(|i| format!("beta_{i} = {} < C({d},{i}) = {}", ctx.res.betti.betti(i as i64), binomials[i]))
            .collect();
        Outcome::decide(failures, data)
    }

    fn equality(&mut self, decl: &CheckDecl) -> Outcome {
        let mut data = Map::new();
        self.inputs(decl, &mut data);
        let ctx = match self.module_ctx(decl, &mut data) {
            Ok(c) => c,
            Err(o) => return o,
        };
        let ring = self.ring().clone();
        let d = self.dimension();
        let total: u64 = ctx.res.betti.sum() as u64;
        let bound = 1u64 << d;
        data.insert("total".into(), json!(total));
        data.insert("bound".into(), json!(bound));
        if total != bound {
            return Outcome::inapplicable(format!("total Betti number {total} > 2^{d} = {bound} (strict inequality)"), data);
        }
        let f = &ctx.res.complex;
        let m = ctx.module;
        // (a) F ⊗ M has zero differential
        let amb = m.target_ambient();
        let mut trivial = true;
        'outer: for dmap in f.differentials() {
            for row in dmap.entries() {
                for p in row {
                    if p.is_zero() {
                        continue;
                    }
                    for c in 0..amb.rank() {
                        let mut v: FreeVector<F> = amb.zero_vector();
                        v.components[c] = p.clone();
                        if !m.contains(&v).unwrap_or(false) {
                            trivial = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        // (b) cyclic
        let cyclic = ctx.res.betti.betti(0) == 1;
        // (c) the entries of d_1 form a regular sequence of length d
        let seq: Vec<_> = f
            .differential(1)
            .map(|d1| if d1.rows() == 1 { d1.entries()[0].clone() } else { Vec::new() })
            .unwrap_or_default();
        let rendered: Vec<String> = seq.iter().map(|p| ring.render(p)).collect();
        let regular = cyclic && seq.len() == d && is_regular_sequence(&ring, &seq).unwrap_or(false);
        // (d) same length as R/(sequence)
        let quotient_length = if cyclic {
            ModulePresentation::cyclic(ring.clone(), seq.clone()).ok().and_then(|q| q.length().finite())
        } else {
            None
        };
        let same_length = quotient_length == Some(ctx.length);
        data.insert(
            "steps".into(),
            json!({
                "trivial_tensor_differential": trivial,
                "cyclic": cyclic,
                "regular_sequence": regular,
                "same_length": same_length,
            }),
        );
        data.insert("witness".into(), json!(rendered));
        data.insert("witness_quotient_length".into(), json!(quotient_length));
        let mut failures = Vec::new();
        for (ok, what) in [
            (trivial, "F⊗M has a nonzero differential"),
            (cyclic, "M is not cyclic"),
            (regular, "entries of d_1 are not a regular sequence of length d"),
            (same_length, "R/(sequence) has a different length"),
        ] {
            if !ok {
                failures.push(what.to_string());
            }
        }
        Outcome::decide(failures, data)
    }

    fn psi2(&mut self, decl: &CheckDecl) -> Outcome {
        let mut data = Map::new();
        self.inputs(decl, &mut data);
        if !self.ring().field().two_invertible() {
            return Outcome::inapplicable(Error::CharacteristicTwo.to_string(), data);
        }
        let (f, _) = match self.complex(decl, &mut data) {
            Ok(x) => x,
            Err(o) => return o,
        };
        let d = self.dimension();
        let hf = match homology_lengths(&f) {
            Ok(h) => h,
            Err(e @ Error::NotFiniteLength) => return Outcome::inapplicable(e.to_string(), data),
            Err(e) => return Outcome::error(e, data),
        };
        let computed = (|| -> Result<_, Error> {
            let sq = AdamsSquares::new(&f)?;
            let t = homology_lengths(&sq.tensor.complex)?;
            let s = homology_lengths(&sq.sym)?;
            let l = homology_lengths(&sq.wedge)?;
            Ok((sq, t, s, l))
        })();
        let (sq, t, s, l) = match computed {
            Ok(x) => x,
            Err(e @ Error::NotFiniteLength) => return Outcome::inapplicable(e.to_string(), data),
            Err(e) => return Outcome::error(e, data),
        };
        let chi = hf.euler();
        let psi2 = s.euler() - l.euler();
        let scaled = (1i64 << d) * chi;
        data.insert("d".into(), json!(d));
        data.insert("chi".into(), json!(chi));
        data.insert("chi_s2".into(), json!(s.euler()));
        data.insert("chi_l2".into(), json!(l.euler()));
        data.insert("chi_psi2".into(), json!(psi2));
        data.insert("two_d_chi".into(), json!(scaled));
        let ranks_add = (0..sq.tensor.complex.len())
            .all(|k| sq.sym.ranks()[k] + sq.wedge.ranks()[k] == sq.tensor.complex.ranks()[k]);
        let lengths_add = t.lengths.iter().zip(s.lengths.iter().zip(&l.lengths)).all(|(a, (b, c))| *a == b + c);
        data.insert(
            "ranks".into(),
            json!({ "T2F": sq.tensor.complex.ranks(), "S2F": sq.sym.ranks(), "L2F": sq.wedge.ranks() }),
        );
        data.insert(
            "homology".into(),
            json!({ "F": lengths_json(&hf), "T2F": lengths_json(&t), "S2F": lengths_json(&s), "L2F": lengths_json(&l) }),
        );
        let audits = [
            ("tau_involution", sq.tau.is_involution()),
            ("tau_chain_map", sq.tau.commutes_with(&sq.tensor)),
            ("splitting_isomorphism", sq.inclusion_is_isomorphism()),
            ("rank_additivity", ranks_add),
            ("length_additivity", lengths_add),
        ];
        data.insert("audits".into(), Value::Object(audits.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()));
        data.insert("note".into(), json!("certifies the identity for this complex only, not for the ring"));
        let mut failures: Vec<String> =
            audits.iter().filter(|(_, ok)| !ok).map(|(k, _)| format!("audit {k} failed")).collect();
        if psi2 != scaled {
            failures.push(format!("chi(psi2 F) = {psi2} but 2^{d} chi(F) = {scaled}"));
        }
        self.oracle(&[("F", &f), ("S2F", &sq.sym), ("L2F", &sq.wedge)], &mut data, &mut failures);
        Outcome::decide(failures, data)
    }

    fn dutta(&mut self, decl: &CheckDecl) -> Outcome {
        let mut data = Map::new();
        self.inputs(decl, &mut data);
        let p = self.ring().characteristic();
        if p == 0 {
            return Outcome::inapplicable(Error::CharacteristicZero.to_string(), data);
        }
        if p == 2 {
            return Outcome::inapplicable(Error::CharacteristicTwo.to_string(), data);
        }
        let (f, minimal_resolution) = match self.complex(decl, &mut data) {
            Ok(x) => x,
            Err(o) => return o,
        };
        if let Err(e) = homology_lengths(&f) {
            return match e {
                Error::NotFiniteLength => Outcome::inapplicable(e.to_string(), data),
                other => Outcome::error(other, data),
            };
        }
        let emax = self.emax(decl);
        let ds = match dutta_squares(&f, emax) {
            Ok(x) => x,
            Err(e) => return Outcome::error(e, data),
        };
        let d = self.dimension();
        let ci = self.ring().is_complete_intersection();
        data.insert("p".into(), json!(p));
        data.insert("d".into(), json!(d));
        data.insert("scale".into(), json!((0..=emax).map(|e| num_bigint::BigUint::from(p).pow(d as u32 * e).to_string()).collect::<Vec<_>>()));
        data.insert("F".into(), sequence_json(&ds.base));
        data.insert("S2F".into(), sequence_json(&ds.sym));
        data.insert("L2F".into(), sequence_json(&ds.wedge));
        let psi2: Vec<String> = ds.psi2_terms().iter().map(crate::frobenius::render_rational).collect();
        let scaled: Vec<String> = ds.scaled_base_terms().iter().map(crate::frobenius::render_rational).collect();
        data.insert("psi2".into(), json!(psi2));
        data.insert("two_d_F".into(), json!(scaled));
        let identity = ds.identity_holds();
        data.insert("identity".into(), json!(identity));
        data.insert("constant".into(), json!(ds.base.is_constant()));
        data.insert("positive".into(), json!(ds.base.is_positive()));
        data.insert("splitting_commutes".into(), json!(ds.splitting_commutes));
        let mut failures = Vec::new();
        if !ds.base.is_positive() {
            failures.push("a normalized Euler characteristic is not positive".into());
        }
        if ci && identity.iter().any(|ok| !ok) {
            failures.push("psi2 identity fails at some e".into());
        }
        if !ci {
            data.insert("identity_note".into(), json!("ring is not a complete intersection; identity recorded, not asserted"));
        }
        if ds.splitting_commutes.iter().any(|ok| !ok) {
            failures.push("Frobenius does not commute with the S2/L2 splitting".into());
        }
        if minimal_resolution {
            let audit: Vec<bool> =
                (0..=emax).map(|e| frobenius_minimality_audit(&f, e).unwrap_or(false)).collect();
            if audit.iter().any(|ok| !ok) {
                failures.push("Frobenius twist of the resolution is not a minimal resolution".into());
            }
            data.insert("minimality".into(), json!(audit));
        }
        Outcome::decide(failures, data)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Recomputes every side of the recorded inequality chain from the
/// recorded homology tables.
fn rederive_chain(data: &Map<String, Value>, length: u64, d: usize) -> bool {
    let sum = |label: &str, parity: Option<i64>| -> Option<u64> {
        let h = data.get("homology")?.get(label)?;
        let start = h.get("start")?.as_i64()?;
        let mut acc = 0;
        for (k, v) in h.get("lengths")?.as_array()?.iter().enumerate() {
            let i = start + k as i64;
            if parity.is_none_or(|p| i.rem_euclid(2) == p) {
                acc += v.as_u64()?;
            }
        }
        Some(acc)
    };
    let Some(chain) = data.get("chain") else { return false };
    let total: Option<u64> = data.get("betti").and_then(|b| b.as_array()).map(|b| b.iter().filter_map(|x| x.as_u64()).sum());
    let (Some(adams_s), Some(adams_l), Some(t), Some(total)) =
        (sum("S2F", Some(0)), sum("L2F", Some(1)), sum("T2F", None), total)
    else {
        return false;
    };
    let lower = (1u64 << d) * length;
    let upper = length * total;
    let get = |k: &str| chain.get(k).and_then(|v| v.as_u64());
    get("two_d_length") == Some(lower)
        && get("even_s2_plus_odd_l2") == Some(adams_s + adams_l)
        && get("tensor_square") == Some(t)
        && get("length_times_total") == Some(upper)
        && chain.get("holds") == Some(&json!([lower <= adams_s + adams_l, adams_s + adams_l <= t, t <= upper]))
}
