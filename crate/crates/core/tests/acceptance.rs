use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use semireg::buchberger::{buchberger, dehomogenize_gb, reduce_basis, EngineOptions};
use semireg::f5::{f5_gb, macaulay_bound, macaulay_gb};
use semireg::koszul::{
    check_crypto_semiregular, check_d_regular, check_pardue_semiregular, dimension_accounting,
    first_fall_consistency, homology_dimension, FallConsistency, RegularityMethod,
};
use semireg::polyring::parse_polynomial;
use semireg::series::hf_from_staircase;
use semireg::verify::{
    random_affine_sequence, verify_bounds, verify_deg_d_structure, verify_hf_recursion,
    verify_lm_coincidence, verify_quadratic_dreg_table, worked_example, BoundVerdict, InstanceSpec,
    VerifyContext,
};
use semireg::{FieldSpec, Monomial, PolySequence, RingCtx};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shapes() -> Vec<(usize, Vec<u32>)> {
    vec![
        (2, vec![2, 2]),
        (2, vec![2, 2, 2]),
        (2, vec![3, 3]),
        (2, vec![2, 3]),
        (2, vec![3, 3, 3]),
        (3, vec![2, 2, 2]),
        (3, vec![2, 2, 2, 2]),
        (3, vec![2, 2, 2, 2, 2]),
        (3, vec![2, 2, 3]),
        (3, vec![3, 3, 3, 3]),
        (3, vec![2, 2, 2, 2, 2, 2, 2]),
        (4, vec![2, 2, 2, 2]),
        (4, vec![2, 2, 2, 2, 2]),
        (4, vec![2, 2, 2, 2, 2, 2]),
        (4, vec![2, 2, 2, 2, 2, 2, 2]),
        (4, vec![2, 2, 2, 3]),
        (4, vec![3, 3, 3, 3, 3]),
        (4, vec![3, 3, 3, 3, 3, 3, 3]),
    ]
}

struct Instance {
    spec: InstanceSpec,
    ctx: VerifyContext,
}

fn instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = 1000;
    for p in [73, 65521] {
        for (n, degrees) in shapes() {
            seed += 1;
            let spec = InstanceSpec {
                p,
                n,
                m: degrees.len(),
                degrees,
                seed,
                require_semiregular: true,
            };
            let f = random_affine_sequence(&spec).unwrap();
            let ctx = VerifyContext::new(&f).unwrap();
            out.push(Instance { spec, ctx });
        }
    }
    out
}

fn label(i: &Instance) -> String {
    format!(
        "p={} n={} degrees={:?} seed={}",
        i.spec.p, i.spec.n, i.spec.degrees, i.spec.seed
    )
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ex = worked_example().map_err(|e| e.to_string())?;
    let f = ex.system().map_err(|e| e.to_string())?;
    let opts = EngineOptions::default();
    let n = 3;
    let m = |e: &[u32]| Monomial::new(e);

    let g_top = buchberger(&f.top().unwrap(), &opts).unwrap();
    let mut lms = g_top.lms();
    lms.sort();
    let mut want = vec![
        m(&[0, 0, 3]),
        m(&[0, 1, 2]),
        m(&[2, 0, 0]),
        m(&[1, 1, 0]),
        m(&[0, 2, 0]),
        m(&[1, 0, 1]),
    ];
    want.sort();
    ensure(lms == want, || format!("LM(G_top) = {lms:?}"))?;
    let hs: Vec<u64> = (0..5).map(|d| hf_from_staircase(&lms, n, d)).collect();
    ensure(hs == [1, 3, 2, 0, 0], || format!("HS_top = {hs:?}"))?;
    let (crypto, d) = check_crypto_semiregular(&f.top().unwrap()).unwrap();
    ensure(crypto && d == 3, || format!("D = {d}"))?;

    let g_hom = buchberger(&f.homogenize().unwrap(), &opts).unwrap();
    let mut hom_lms = g_hom.lms();
    hom_lms.sort();
    let mut want: Vec<Monomial> = [
        [1, 0, 0, 3],
        [0, 1, 0, 3],
        [0, 0, 1, 3],
        [0, 1, 2, 0],
        [0, 0, 3, 0],
        [0, 1, 1, 1],
        [0, 0, 2, 1],
        [2, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 2, 0, 0],
        [1, 0, 1, 0],
    ]
    .iter()
    .map(|e| m(e))
    .collect();
    want.sort();
    ensure(hom_lms == want, || format!("LM(G_hom) = {hom_lms:?}"))?;
    let hf: Vec<u64> = (0..6)
        .map(|d| hf_from_staircase(&hom_lms, n + 1, d))
        .collect();
    ensure(hf[..3] == [1, 4, 6], || format!("HF_hom prefix = {hf:?}"))?;
    ensure(hf[3] == 4 && hf[4] == 1, || {
        format!("HF_hom(3), HF_hom(4) = {}, {}", hf[3], hf[4])
    })?;

    let g = buchberger(&f, &opts).unwrap();
    let ring = f.ring();
    let vars: Vec<_> = ["x3", "x2", "x1"]
        .iter()
        .map(|s| parse_polynomial(ring, s).unwrap())
        .collect();
    ensure(g.elements == vars, || format!("G = {:?}", g.elements))?;
    let dehom = dehomogenize_gb(&g_hom);
    ensure(dehom.elements == vars, || {
        "dehomogenized G_hom differs".into()
    })?;
    let inter = reduce_basis(
        &g_hom
            .elements
            .iter()
            .map(|p| p.dehomogenize())
            .collect::<Vec<_>>(),
    );
    ensure(inter == vars, || "inter-reduction differs".into())?;

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{elapsed:.2?}"))
}

fn criterion_2(all: &[Instance], setup: Duration) -> Outcome {
    ensure(all.len() >= 30, || format!("only {} instances", all.len()))?;
    let start = Instant::now();
    for i in all {
        let r = verify_hf_recursion(&i.ctx).unwrap();
        ensure(r.pass, || format!("{}: {:?}", label(i), r))?;
        ensure(r.triples.len() == i.ctx.d as usize, || {
            format!("{}: wrong degree range", label(i))
        })?;
    }
    let elapsed = setup + start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} instances, {elapsed:.2?} including generation and bases",
        all.len()
    ))
}

fn criterion_3(all: &[Instance]) -> Outcome {
    for i in all {
        let r = verify_lm_coincidence(&i.ctx).unwrap();
        ensure(r.pass, || format!("{}: {:?}", label(i), r))?;
    }
    Ok(format!("{} instances", all.len()))
}

fn criterion_4(all: &[Instance]) -> Outcome {
    for i in all {
        let r = verify_deg_d_structure(&i.ctx).unwrap();
        ensure(r.pass, || format!("{}: {:?}", label(i), r))?;
    }
    Ok(format!("{} instances", all.len()))
}

fn criterion_5(all: &[Instance]) -> Outcome {
    let mut not_applicable = 0;
    for i in all {
        let r = verify_bounds(&i.ctx).unwrap();
        let fails: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.verdict == BoundVerdict::Fail)
            .collect();
        ensure(fails.is_empty(), || format!("{}: {:?}", label(i), fails))?;
        not_applicable += r
            .checks
            .iter()
            .filter(|c| c.verdict == BoundVerdict::NotApplicable)
            .count();
    }
    let table = verify_quadratic_dreg_table(2..=10).unwrap();
    for row in &table {
        ensure(row.ok, || format!("quadratic table row {row:?}"))?;
    }
    Ok(format!(
        "{} instances, {not_applicable} not-applicable seeded checks, quadratic table n=2..10",
        all.len()
    ))
}

fn criterion_6(all: &[Instance]) -> Outcome {
    let opts = EngineOptions::default();
    let mut runs = 0;
    for i in all {
        for f in [&i.ctx.f, &i.ctx.f_top, &i.ctx.f_h] {
            let a = buchberger(f, &opts).unwrap();
            let b = f5_gb(f, &opts).unwrap();
            let dmax = macaulay_bound(&f.degrees(), f.ring().arity()) + 2 * i.ctx.d;
            let (c, _) = macaulay_gb(f, dmax).map_err(|e| format!("{}: {e}", label(i)))?;
            ensure(a.elements == b.elements, || {
                format!("{}: buchberger != f5", label(i))
            })?;
            ensure(a.elements == c.elements, || {
                format!("{}: buchberger != macaulay", label(i))
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} systems (F, F^top, F^h per instance)"))
}

fn three_way(f: &PolySequence, d: u32) -> Result<bool, String> {
    let v: Vec<bool> = [
        RegularityMethod::Direct,
        RegularityMethod::Series,
        RegularityMethod::Homology,
    ]
    .into_iter()
    .map(|m| check_d_regular(f, d, m).unwrap())
    .collect();
    ensure(v[0] == v[1] && v[1] == v[2], || {
        format!("methods disagree at d={d}: {v:?}")
    })?;
    Ok(v[0])
}

fn criterion_7(all: &[Instance]) -> Outcome {
    let ring = RingCtx::affine(FieldSpec::new(73).unwrap(), 2);
    let neg = PolySequence::new(vec![
        parse_polynomial(&ring, "x1^2").unwrap(),
        parse_polynomial(&ring, "x1^2").unwrap(),
    ])
    .unwrap();
    let verdicts: Vec<bool> = (0..=5)
        .map(|d| three_way(&neg, d))
        .collect::<Result<_, _>>()?;
    ensure(verdicts == [true, true, true, false, false, false], || {
        format!("(x1^2, x1^2): {verdicts:?}")
    })?;
    let mut checks = verdicts.len();
    for i in all {
        for d in 0..=i.ctx.d + 1 {
            let regular = three_way(&i.ctx.f_top, d).map_err(|e| format!("{}: {e}", label(i)))?;
            ensure(regular || d > i.ctx.d, || {
                format!("{}: certified but not {d}-regular", label(i))
            })?;
            checks += 1;
        }
    }
    Ok(format!(
        "{checks} (system, d) pairs, negative detected from d=3"
    ))
}

fn criterion_8(all: &[Instance]) -> Outcome {
    let opts = EngineOptions::default();
    let mut systems = 0;
    let ex = worked_example().unwrap().system().unwrap();
    let mut inputs: Vec<(PolySequence, u32, String)> = vec![
        (ex.top().unwrap(), 3, "example F^top".into()),
        (ex.homogenize().unwrap(), 3, "example F^h".into()),
    ];
    for i in all {
        inputs.push((
            i.ctx.f_top.clone(),
            i.ctx.d,
            format!("F^top of {}", label(i)),
        ));
        inputs.push((i.ctx.f_h.clone(), i.ctx.d, format!("F^h of {}", label(i))));
    }
    for (f, d, name) in &inputs {
        let g = f5_gb(f, &opts).unwrap();
        let z = g.log.zero_reductions_below(*d);
        ensure(z == 0, || {
            format!("{name}: {z} zero reductions below D={d}")
        })?;
        systems += 1;
    }
    Ok(format!("{systems} homogeneous systems"))
}

fn criterion_9(all: &[Instance]) -> Outcome {
    for i in all.iter().filter(|i| i.spec.n <= 3) {
        let f = &i.ctx.f_top;
        let m = f.len();
        for d in 0..=i.ctx.d + 2 {
            let h = homology_dimension(f, m, d).unwrap();
            ensure(h == 0, || {
                format!("{}: H_{m} in degree {d} is {h}", label(i))
            })?;
        }
    }
    let mut identities = 0;
    let mut pardue = 0;
    for seed in 0..20u64 {
        let n = 2 + (seed % 2) as usize;
        let m = n + (seed % 3) as usize;
        let degrees: Vec<u32> = (0..m)
            .map(|k| 2 + ((seed as usize + k) % 2) as u32)
            .collect();
        let spec = InstanceSpec {
            p: 31,
            n,
            m,
            degrees,
            seed: 7000 + seed,
            require_semiregular: false,
        };
        let f = random_affine_sequence(&spec).unwrap().top().unwrap();
        for i in 1..=m {
            for t in 0..=6 {
                let acc = dimension_accounting(&f, i, t).unwrap();
                ensure(acc.holds(), || format!("seed {seed}: {acc:?}"))?;
                identities += 1;
            }
        }
        let crypto = check_crypto_semiregular(&f).map(|r| r.0).unwrap_or(false);
        match check_pardue_semiregular(&f) {
            Ok(true) => {
                pardue += 1;
                ensure(crypto, || {
                    format!("seed {seed}: Pardue but not cryptographic semi-regular")
                })?;
            }
            Ok(false) => {}
            Err(e) => return Err(format!("seed {seed}: {e}")),
        }
    }
    Ok(format!(
        "{identities} accounting identities, {pardue} Pardue sequences"
    ))
}

fn criterion_10() -> Outcome {
    let (mut equal, mut inconclusive) = (0, 0);
    for q in [2u32, 3, 5] {
        for n in 1..=3usize {
            for m in 1..=n + 1 {
                for seed in 0..3u64 {
                    let degrees: Vec<u32> =
                        (0..m).map(|k| 1 + ((k as u64 + seed) % 2) as u32).collect();
                    let spec = InstanceSpec {
                        p: q,
                        n,
                        m,
                        degrees,
                        seed: 100 * q as u64 + seed,
                        require_semiregular: false,
                    };
                    let f = random_affine_sequence(&spec).unwrap().top().unwrap();
                    match first_fall_consistency(&f, q).unwrap() {
                        FallConsistency::Equal { .. } => equal += 1,
                        FallConsistency::Inconclusive { .. } => inconclusive += 1,
                        c @ FallConsistency::Contradiction { .. } => {
                            return Err(format!("q={q} n={n} m={m} seed={seed}: {c:?}"))
                        }
                    }
                }
            }
        }
    }
    ensure(equal > 0, || {
        "no instance where q exceeds both values".into()
    })?;
    Ok(format!("{equal} equal, {inconclusive} inconclusive"))
}

fn run(results: &mut Vec<(usize, Outcome)>, k: usize, f: impl FnOnce() -> Outcome) {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let line = match &outcome {
        Ok(info) => format!("criterion {k:>2}: PASS ({info})"),
        Err(why) => format!("criterion {k:>2}: FAIL ({why})"),
    };
    // straight to the handle so the line survives libtest output capture
    let _ = writeln!(std::io::stderr(), "{line}");
    results.push((k, outcome));
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    run(&mut results, 1, criterion_1);
    let setup = Instant::now();
    let all = catch_unwind(instances);
    let setup = setup.elapsed();
    match &all {
        Ok(all) => {
            run(&mut results, 2, || criterion_2(all, setup));
            run(&mut results, 3, || criterion_3(all));
            run(&mut results, 4, || criterion_4(all));
            run(&mut results, 5, || criterion_5(all));
            run(&mut results, 6, || criterion_6(all));
            run(&mut results, 7, || criterion_7(all));
            run(&mut results, 8, || criterion_8(all));
            run(&mut results, 9, || criterion_9(all));
        }
        Err(_) => {
            for k in 2..=9 {
                run(&mut results, k, || Err("instance generation failed".into()));
            }
        }
    }
    run(&mut results, 10, criterion_10);
    let failed: Vec<usize> = results
        .iter()
        .filter(|(_, o)| o.is_err())
        .map(|(k, _)| *k)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
