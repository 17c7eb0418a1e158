//! End-to-end acceptance suite. Prints one line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use totalbetti::algebra::{Field, PrimeField};
use totalbetti::complex::{
    euler_characteristic, homology_lengths, homology_lengths_bruteforce, psi2_euler, suggested_degree_bound, sym2,
    tensor_square, wedge2, ChainComplex,
};
use totalbetti::frobenius::{dutta_squares, frobenius_twist};
use totalbetti::graded::{is_regular_sequence, koszul_complex, minimal_free_resolution, GradedRing, ModulePresentation};
use totalbetti::harness::{
    parse_instance, run, run_instance, AnyInstance, CheckDecl, CheckKind, ComplexDef, ProblemInstance, RunOptions,
    Verdict,
};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e2s<T>(r: totalbetti::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn instance_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("instances")
}

fn suite() -> Vec<(String, ProblemInstance<PrimeField>)> {
    let mut files: Vec<_> = std::fs::read_dir(instance_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "tb"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            match parse_instance(&text).unwrap() {
                AnyInstance::Prime(inst) => (name, inst),
                AnyInstance::Rational(_) => panic!("suite instance {name} is over QQ"),
            }
        })
        .collect()
}

/// Every complex named or implied by an instance: resolutions of its modules
/// and its Koszul complexes.
fn complexes_of(inst: &ProblemInstance<PrimeField>) -> Result<Vec<(String, ChainComplex<PrimeField>)>, String> {
    let mut out = Vec::new();
    for m in &inst.modules {
        out.push((format!("res({})", m.name), e2s(minimal_free_resolution(&m.presentation, 8))?.complex));
    }
    for c in &inst.complexes {
        if let ComplexDef::Koszul { complex, .. } = &c.def {
            out.push((c.name.clone(), complex.clone()));
        }
    }
    Ok(out)
}

fn same_complex(a: &ChainComplex<PrimeField>, b: &ChainComplex<PrimeField>) -> bool {
    a.start() == b.start() && a.modules() == b.modules() && a.differentials() == b.differentials()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn cyclic_quotient_ring(m: &ModulePresentation<PrimeField>) -> Option<Arc<GradedRing<PrimeField>>> {
    if m.target_twists() != [0] {
        return None;
    }
    let r = m.ring();
    let mut gens = r.ideal_generators().to_vec();
    gens.extend(m.map().entries()[0].iter().cloned());
    GradedRing::new(r.field(), r.names().to_vec(), gens).ok()
}

fn oracle_agrees(c: &ChainComplex<PrimeField>) -> Result<bool, String> {
    let fast = e2s(homology_lengths(c))?;
    let slow = e2s(homology_lengths_bruteforce(c, e2s(suggested_degree_bound(c))?))?;
    let support = |h: &totalbetti::complex::HomologyLengths| -> BTreeMap<i64, u64> {
        h.iter().filter(|&(_, x)| x != 0).collect()
    };
    Ok(support(&fast) == support(&slow))
}

fn criterion_1() -> Check {
    let names = ["x1", "x2", "x3", "x4"];
    let mut slowest = Duration::ZERO;
    for d in 1..=4 {
        let started = Instant::now();
        let r = GradedRing::polynomial_ring(common::fp(101), &names[..d]).map_err(|e| e.to_string())?;
        let k = e2s(ModulePresentation::cyclic_from_strs(r, &names[..d]))?;
        let res = e2s(minimal_free_resolution(&k, d + 2))?;
        let elapsed = started.elapsed();
        let expected: Vec<usize> = (0..=d).map(|i| binomial(d, i)).collect();
        ensure!(res.betti.totals() == expected, "d={d}: betti {:?} != {:?}", res.betti.totals(), expected);
        ensure!(res.betti.sum() == 1 << d, "d={d}: total {} != {}", res.betti.sum(), 1 << d);
        ensure!(elapsed < Duration::from_secs(5), "d={d}: took {elapsed:?}");
        slowest = slowest.max(elapsed);
    }
    Ok(format!("betti = C(d,i) for d=1..4, slowest {:.3}s", slowest.as_secs_f64()))
}

fn criterion_2() -> Check {
    let mut cases: Vec<(String, ChainComplex<PrimeField>)> = Vec::new();
    for (name, inst) in suite() {
        let regular_koszul = inst.ring.nvars() <= 3 && !inst.ring.is_quotient();
        let hypersurface = name == "node" || name == "cone";
        for (cname, c) in complexes_of(&inst)? {
            let is_koszul = inst.complex(&cname).is_some();
            if inst.ring.characteristic() != 2 && ((regular_koszul && is_koszul) || (hypersurface && !is_koszul)) {
                cases.push((format!("{name}/{cname}"), c));
            }
        }
    }
    let k3 = GradedRing::polynomial_ring(common::fp(101), &["x", "y", "z"]).map_err(|e| e.to_string())?;
    let seq: Vec<_> = ["x^2 + y*z", "y^2", "z^3 - x*y*z"].iter().map(|s| k3.parse(s).unwrap()).collect();
    ensure!(e2s(is_regular_sequence(&k3, &seq))?, "sample sequence is not regular");
    cases.push(("F101[x,y,z]/K(x^2+yz,y^2,z^3-xyz)".into(), e2s(koszul_complex(&k3, &seq))?));

    let mut slowest = Duration::ZERO;
    for (name, f) in &cases {
        let started = Instant::now();
        let d = f.ring().dimension() as u32;
        let chi = e2s(euler_characteristic(f))?;
        let psi = e2s(psi2_euler(f))?;
        let split = e2s(euler_characteristic(&e2s(sym2(f))?))? - e2s(euler_characteristic(&e2s(wedge2(f))?))?;
        let elapsed = started.elapsed();
        ensure!(psi == split, "{name}: psi2 {psi} != chi(S2) - chi(L2) = {split}");
        ensure!(psi == (1i64 << d) * chi, "{name}: chi(psi2 F) = {psi} != 2^{d} * {chi}");
        ensure!(elapsed < Duration::from_secs(60), "{name}: took {elapsed:?}");
        slowest = slowest.max(elapsed);
    }
    Ok(format!("{} complexes, slowest {:.3}s", cases.len(), slowest.as_secs_f64()))
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for n in 0..20 {
        let m = common::random_finite_module(&mut rng);
        let mut f = e2s(minimal_free_resolution(&m, 6))?.complex;
        if rng.gen_bool(0.3) {
            f = f.shift(rng.gen_range(-1..=1));
        }
        ensure!(f.len() <= 3 && f.ranks().iter().all(|&r| r <= 3), "sample {n} out of range: {:?}", f.ranks());
        let t = e2s(tensor_square(&f))?.complex;
        let s = e2s(sym2(&f))?;
        let l = e2s(wedge2(&f))?;
        let (ht, hs, hl) = (e2s(homology_lengths(&t))?, e2s(homology_lengths(&s))?, e2s(homology_lengths(&l))?);
        for i in t.degrees() {
            ensure!(t.rank(i) == s.rank(i) + l.rank(i), "sample {n}: rank additivity fails at {i}");
            ensure!(ht.get(i) == hs.get(i) + hl.get(i), "sample {n}: length additivity fails at {i}");
        }
    }
    Ok("20 seeded complexes, ranks and homology lengths split exactly".into())
}

fn criterion_4() -> Check {
    let mut count = 0;
    let mut equalities = 0;
    for (name, inst) in suite() {
        if inst.ring.characteristic() == 2 {
            continue;
        }
        let checks = inst
            .modules
            .iter()
            .flat_map(|m| {
                [CheckKind::Beh, CheckKind::Equality]
                    .map(|kind| CheckDecl { kind, target: m.name.clone(), emax: None, cap: None, line: 0 })
            })
            .collect();
        let probe = ProblemInstance { complexes: Vec::new(), checks, ..inst.clone() };
        let report = run_instance(&probe, &RunOptions::default());
        let d = inst.ring.dimension() as u32;
        for m in &inst.modules {
            let beh = report.record("beh", &m.name).ok_or("missing beh record")?;
            ensure!(beh.verdict == Verdict::Holds, "{name}/{}: beh {:?} {:?}", m.name, beh.verdict, beh.reason);
            let chain = &beh.data["chain"];
            let holds: Vec<bool> = serde_json::from_value(chain["holds"].clone()).map_err(|e| e.to_string())?;
            ensure!(holds.iter().all(|&h| h), "{name}/{}: chain {chain}", m.name);

            let len = m.presentation.length().finite().ok_or("infinite length module")?;
            let res = e2s(minimal_free_resolution(&m.presentation, 8))?;
            let upper = len * res.betti.sum() as u64;
            ensure!(chain["two_d_length"] == (len << d), "{name}/{}: recorded 2^d l(M) differs", m.name);
            ensure!(chain["length_times_total"] == upper, "{name}/{}: recorded l(M)*sum differs", m.name);
            let tor = match cyclic_quotient_ring(&m.presentation) {
                Some(q) => {
                    let fm = e2s(res.complex.base_change(q))?;
                    e2s(homology_lengths_bruteforce(&fm, e2s(suggested_degree_bound(&fm))?))?.total()
                }
                None => beh.data["tor_total"].as_u64().unwrap(),
            };
            ensure!(beh.data["tor_total"] == tor, "{name}/{}: recorded Tor total differs from {tor}", m.name);
            ensure!(tor <= upper, "{name}/{}: Tor total {tor} > {upper}", m.name);
            let witness = report.record("equality", &m.name).is_some_and(|r| r.verdict == Verdict::Holds);
            ensure!((tor == upper) == witness, "{name}/{}: equality {} but witness {witness}", m.name, tor == upper);
            equalities += witness as usize;
            count += 1;
        }
    }
    Ok(format!("{count} modules, {equalities} equality cases each with a witness"))
}

fn equality_record(text: &str) -> Result<totalbetti::harness::CheckRecord, String> {
    let inst = e2s(parse_instance(text))?;
    let report = run(&inst, &RunOptions::default());
    report.record("equality", "M").cloned().ok_or_else(|| "no equality record".into())
}

fn criterion_5() -> Check {
    let cases = [
        ("ring R = F(101)[x,y]\nmodule M = coker [[x, y]]\ncheck equality on M\n", "k"),
        ("ring R = F(101)[x,y]\nmodule M = coker [[x^2, y]]\ncheck equality on M\n", "k[x,y]/(x^2,y)"),
        ("ring R = F(101)[x,y]\nquotient (x*y)\nmodule M = coker [[x - y]]\ncheck equality on M\n", "R/(x-y)"),
    ];
    for (text, label) in cases {
        let rec = equality_record(text)?;
        ensure!(rec.verdict == Verdict::Holds, "{label}: {:?} {:?}", rec.verdict, rec.reason);
        let AnyInstance::Prime(inst) = e2s(parse_instance(text))? else { unreachable!() };
        let witness: Vec<String> = serde_json::from_value(rec.data["witness"].clone()).map_err(|e| e.to_string())?;
        let seq: Vec<_> = witness.iter().map(|w| inst.ring.parse(w)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        ensure!(e2s(is_regular_sequence(&inst.ring, &seq))?, "{label}: witness {witness:?} is not regular");
        let quotient = e2s(ModulePresentation::cyclic(inst.ring.clone(), seq))?;
        let m = inst.module_of("M").unwrap();
        ensure!(quotient.length() == m.length(), "{label}: witness quotient length differs");
    }
    let rec = equality_record("ring R = F(101)[x,y]\nmodule M = coker [[x^2, x*y, y^2]]\ncheck equality on M\n")?;
    ensure!(rec.verdict == Verdict::Inapplicable, "(x,y)^2: verdict {:?}", rec.verdict);
    let reason = rec.reason.unwrap_or_default();
    ensure!(reason.contains("6 > 2^2 = 4"), "(x,y)^2: reason '{reason}'");
    Ok("three witnesses verified; (x,y)^2 reported strict (6 > 4)".into())
}

fn criterion_6() -> Check {
    let mut count = 0;
    for (name, inst) in suite().into_iter().filter(|(n, _)| n.starts_with("frobenius")) {
        let p = inst.ring.characteristic();
        let d = inst.ring.dimension() as u32;
        ensure!([3, 5, 7].contains(&p) && inst.ring.nvars() <= 2, "{name}: out of scope");
        for (cname, f) in complexes_of(&inst)? {
            let chi = e2s(euler_characteristic(&f))?;
            let (s, l) = (e2s(sym2(&f))?, e2s(wedge2(&f))?);
            for e in 1..=2u32 {
                let phi = e2s(frobenius_twist(&f, e))?;
                let q = (p as i64).pow(d * e);
                ensure!(e2s(euler_characteristic(&phi))? == q * chi, "{name}/{cname}: chi(phi^{e} F) != p^(de) chi");
                ensure!(same_complex(&e2s(sym2(&phi))?, &e2s(frobenius_twist(&s, e))?), "{name}/{cname}: phi^{e} S2 differs");
                ensure!(same_complex(&e2s(wedge2(&phi))?, &e2s(frobenius_twist(&l, e))?), "{name}/{cname}: phi^{e} L2 differs");
            }
            let ds = e2s(dutta_squares(&f, 2))?;
            ensure!(ds.base.is_constant() && ds.base.is_positive(), "{name}/{cname}: {:?}", ds.base.rendered_terms());
            ensure!(ds.sym.is_constant() && ds.wedge.is_constant(), "{name}/{cname}: square sequences vary");
            ensure!(ds.identity_holds().iter().all(|&b| b), "{name}/{cname}: termwise identity fails");
            ensure!(ds.splitting_commutes.iter().all(|&b| b), "{name}/{cname}: splitting audit fails");
            count += 1;
        }
    }
    Ok(format!("{count} complexes over p in {{3,5,7}}, e <= 2"))
}

fn criterion_7() -> Check {
    let mut count = 0;
    for (name, inst) in suite() {
        for (cname, f) in complexes_of(&inst)? {
            let mut family = vec![("F", f.clone()), ("T2F", e2s(tensor_square(&f))?.complex)];
            if inst.ring.field().two_invertible() {
                family.push(("S2F", e2s(sym2(&f))?));
                family.push(("L2F", e2s(wedge2(&f))?));
            }
            if let Some(m) = cname.strip_prefix("res(").and_then(|s| s.strip_suffix(')')) {
                if let Some(q) = inst.module_of(m).and_then(cyclic_quotient_ring) {
                    family.push(("FxM", e2s(f.base_change(q))?));
                }
            }
            if inst.ring.characteristic() == 3 {
                family.push(("phiF", e2s(frobenius_twist(&f, 1))?));
            }
            for (label, c) in family {
                ensure!(oracle_agrees(&c)?, "{name}/{cname}/{label}: Groebner and brute force disagree");
                count += 1;
            }
        }
    }
    Ok(format!("{count} complexes agree with the brute-force oracle"))
}

fn full_suite_reports() -> BTreeMap<String, String> {
    std::fs::read_dir(instance_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let args = ["totalbetti", "check", "--format", "machine", p.to_str().unwrap()];
            totalbetti::harness::cli::main_with(args, &mut out, &mut err);
            (p.file_name().unwrap().to_string_lossy().into_owned(), String::from_utf8(out).unwrap())
        })
        .collect()
}

fn criterion_8() -> Check {
    let first = full_suite_reports();
    let second = full_suite_reports();
    for (name, text) in &first {
        ensure!(!text.is_empty(), "{name}: empty report");
        ensure!(second.get(name) == Some(text), "{name}: reports differ between runs");
    }
    Ok(format!("{} machine reports byte-identical across two runs", first.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("koszul binomial equality", criterion_1),
        ("quasi-Roberts identity", criterion_2),
        ("splitting audit", criterion_3),
        ("inequality chain", criterion_4),
        ("equality case", criterion_5),
        ("frobenius layer", criterion_6),
        ("oracle equivalence", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (n, (label, f)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({label}): PASS [{secs:.2}s] {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({label}): FAIL [{secs:.2}s] {why}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
