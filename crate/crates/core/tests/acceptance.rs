//! The acceptance suite: one PASS/FAIL line per criterion, run without the
//! test harness so the lines always reach the output.
//!
//! Every criterion is split into named parts. The run exits non-zero unless
//! every part passes except the row half of the level-raising recursion, which
//! is false (smallest counterexample at su(2), level 2) and is reported as FAIL.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex;
use rayon::prelude::*;

use wznw_fusion::combinatorics::{p, FusionContext, Partition};
use wznw_fusion::fusion::{
    dominant_representative, fuse_bethe, reduce_bethe, s_matrix, FusionEngine, FusionMethod,
    MAX_SMATRIX_RANK,
};
use wznw_fusion::identities::{
    check_level_recursion, fuse_column_closed_form, fuse_row_recursion, StripKind,
};
use wznw_fusion::plactic::{
    functional_equation_residual, generator, nc_poly, nc_poly_finite, GeneratorKind, Operator,
    PolyKind,
};
use wznw_fusion::spectrum::{norm_residual, s_matrix_from_bethe, BetheSpectrum};
use wznw_fusion::symfunc::{lr_coefficient, lr_expand, SchurExpansion};
use wznw_fusion::vertex::{
    count_paths, fusion_degree, hook_content_sum, partition_function, Backend,
};
use wznw_fusion::PartitionFunction;

type Part = (&'static str, Result<String, String>);
type Criterion = (&'static str, fn() -> Vec<Part>);

const ROW_RAISING: &str = "row level raising";

fn ctx(n: usize, k: usize) -> FusionContext {
    FusionContext::new(n, k).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, start: Instant) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn golden() -> Vec<Part> {
    let start = Instant::now();
    let c = ctx(3, 4);
    let engine = FusionEngine::new(&c);
    let expected = "{0: 1, 2,1: 2, 3: 1, 3,3: 1, 4,2: 1}";
    let mut parts: Vec<Part> = FusionMethod::ALL
        .iter()
        .map(|m| {
            let r = engine
                .fuse(*m, &p(&[3, 1]), &p(&[3, 2]))
                .map_err(|e| e.to_string())
                .and_then(|e| {
                    ensure(e.to_string() == expected, || format!("{m} gives {e}"))?;
                    Ok(e.to_string())
                });
            (m.name(), r)
        })
        .collect();
    parts.push(("under one second", timed(Duration::from_secs(1), start)));
    parts
}

fn kac_walton_detail() -> Vec<Part> {
    let (l, m) = (p(&[3, 1]), p(&[3, 2]));
    let c = ctx(3, 4);
    let mut plus = BTreeMap::new();
    let mut minus = BTreeMap::new();
    for (rho, coeff) in lr_expand(&l, &m).iter() {
        if rho.len() > 3 {
            continue;
        }
        let r = dominant_representative(rho, &c).unwrap();
        if !r.is_zero() && r.shape == p(&[4, 2]) {
            let side = if r.sign > 0 { &mut plus } else { &mut minus };
            side.insert(rho.clone(), coeff.clone());
        }
    }
    let expected_plus = BTreeMap::from([(p(&[5, 3, 1]), BigInt::from(2))]);
    let expected_minus = BTreeMap::from([(p(&[6, 3]), BigInt::from(1))]);
    vec![
        ("c^(4,2) = 2", {
            let c42 = lr_coefficient(&l, &m, &p(&[5, 3, 1]));
            ensure(plus == expected_plus, || format!("positive terms {plus:?}"))
                .map(|_| format!("via (5,3,1), c = {c42}"))
        }),
        ("c^(6,3) = 1", {
            ensure(minus == expected_minus, || {
                format!("negative terms {minus:?}")
            })
            .map(|_| "reflected".into())
        }),
    ]
}

fn bethe_detail() -> Vec<Part> {
    let c = ctx(3, 4);
    let (l, m) = (p(&[3, 1]), p(&[3, 2]));
    let lit = lr_coefficient(&l, &m, &p(&[4, 3, 1, 1]));
    // the transposed products whose reduction lands on (4,2)
    let mut sources = Vec::new();
    for (rho_t, coeff) in lr_expand(&l.transpose(), &m.transpose()).iter() {
        if rho_t.len() > 4 {
            continue;
        }
        let r = reduce_bethe(rho_t, &c).unwrap();
        if !r.is_zero() && r.shape.transpose() == p(&[4, 2]) {
            sources.push((rho_t.clone(), coeff.clone(), r.sign));
        }
    }
    vec![
        (
            "c = 1",
            ensure(lit == BigInt::from(1), || format!("c = {lit}")).map(|_| "c = 1".into()),
        ),
        ("single source", {
            let ok = sources == vec![(p(&[4, 2, 2, 1]), BigInt::from(1), 1)];
            ensure(ok, || format!("sources {sources:?}")).map(|_| "ρᵗ = (4,2,2,1)".into())
        }),
    ]
}

fn cross_method() -> Vec<Part> {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut pairs = 0usize;
    let mut failure = None;
    'outer: for n in 2..=4 {
        for k in 1..=4 {
            let c = ctx(n, k);
            let engine = FusionEngine::new(&c);
            let verlinde = engine.verlinde().unwrap();
            let results: Vec<Result<f64, String>> = c
                .partitions()
                .par_iter()
                .flat_map_iter(|l| c.partitions().iter().map(move |m| (l, m)))
                .map(|(l, m)| {
                    let bethe = fuse_bethe(l, m, &c).map_err(|e| e.to_string())?;
                    for method in [FusionMethod::KacWalton, FusionMethod::Plactic] {
                        let e = engine.fuse(method, l, m).map_err(|e| e.to_string())?;
                        ensure(e == bethe, || format!("{method} {l} * {m} at n={n}, k={k}"))?;
                    }
                    let (e, res) = verlinde
                        .fuse_with_residual(l, m)
                        .map_err(|e| e.to_string())?;
                    ensure(e == bethe, || format!("verlinde {l} * {m} at n={n}, k={k}"))?;
                    Ok(res)
                })
                .collect();
            for r in results {
                match r {
                    Ok(res) => {
                        worst = worst.max(res);
                        pairs += 1;
                    }
                    Err(e) => {
                        failure = Some(e);
                        break 'outer;
                    }
                }
            }
        }
    }
    vec![
        (
            "four methods agree",
            failure.map_or(Ok(format!("{pairs} pairs")), Err),
        ),
        (
            "verlinde residual",
            ensure(worst < 1e-6, || format!("{worst:e}")).map(|_| format!("{worst:.1e}")),
        ),
        ("under 120 s", timed(Duration::from_secs(120), start)),
    ]
}

fn lr_golden() -> Vec<Part> {
    let expected: SchurExpansion = [
        (vec![6, 3], 1),
        (vec![6, 2, 1], 1),
        (vec![5, 4], 1),
        (vec![5, 3, 1], 2),
        (vec![5, 2, 2], 1),
        (vec![4, 4, 1], 1),
        (vec![4, 3, 2], 2),
        (vec![3, 3, 3], 1),
        (vec![5, 2, 1, 1], 1),
        (vec![4, 3, 1, 1], 1),
        (vec![4, 2, 2, 1], 1),
        (vec![3, 3, 2, 1], 1),
    ]
    .into_iter()
    .map(|(s, c)| (Partition::new(s).unwrap(), BigInt::from(c)))
    .collect();
    let got = lr_expand(&p(&[3, 1]), &p(&[3, 2]));
    let total: BigInt = got.iter().map(|(_, c)| c.clone()).sum();
    vec![(
        "14-term multiset",
        ensure(got == expected && total == BigInt::from(14), || {
            format!("{got}")
        })
        .map(|_| format!("{total} terms")),
    )]
}

fn s_matrix_suite() -> Vec<Part> {
    let mut worst = 0.0f64;
    let mut failure = None;
    for n in 2..=8 {
        for k in 0..=9 - n {
            let c = ctx(n, k);
            // beyond the Weyl-sum guard the Bethe-assembled matrix stands in
            let s = if n <= MAX_SMATRIX_RANK {
                s_matrix::<f64>(&c)
            } else {
                s_matrix_from_bethe::<f64>(&c)
            };
            match s {
                Ok(s) => worst = worst.max(s.unitarity_residual()).max(s.symmetry_residual()),
                Err(e) => failure = Some(format!("n={n}, k={k}: {e}")),
            }
        }
    }
    let c = ctx(3, 1);
    let s = s_matrix::<f64>(&c).unwrap();
    let mut level_one = 0.0f64;
    for (a, la) in c.partitions().iter().enumerate() {
        for (b, lb) in c.partitions().iter().enumerate() {
            let phase = std::f64::consts::TAU * (la.weight() * lb.weight()) as f64 / 3.0;
            let want = Complex::from_polar(1.0 / 3f64.sqrt(), phase);
            level_one = level_one.max((s.get(a, b) - want).norm());
        }
    }
    vec![
        (
            "unitary and symmetric for n+k <= 9",
            match failure {
                Some(e) => Err(e),
                None => {
                    ensure(worst < 1e-9, || format!("{worst:e}")).map(|_| format!("{worst:.1e}"))
                }
            },
        ),
        (
            "n=3, k=1 closed form",
            ensure(level_one < 1e-10, || format!("{level_one:e}"))
                .map(|_| format!("{level_one:.1e}")),
        ),
    ]
}

fn spectral_suite() -> Vec<Part> {
    let mut worst = [0.0f64; 4];
    let mut failure = None;
    for n in 2..=4 {
        for k in 0..=3 {
            let c = ctx(n, k);
            let mut run = || -> wznw_fusion::Result<()> {
                let sp = BetheSpectrum::<f64>::new(&c)?;
                for sigma in c.partitions() {
                    worst[0] = worst[0].max(sp.roots(sigma)?.residual(&c));
                    for r in 0..n + k {
                        for kind in [PolyKind::Complete, PolyKind::Elementary] {
                            worst[1] = worst[1].max(sp.eigen_residual(sigma, r, kind)?);
                        }
                    }
                    worst[3] = worst[3]
                        .max(sp.method_residual(sigma)?)
                        .max(norm_residual(&sp, sigma)?);
                }
                worst[2] = worst[2].max(sp.idempotency_residual()?);
                Ok(())
            };
            if let Err(e) = run() {
                failure = Some(format!("n={n}, k={k}: {e}"));
            }
        }
    }
    let check = |name, w: f64, tol: f64| -> Part {
        let r = match &failure {
            Some(e) => Err(e.clone()),
            None => ensure(w < tol, || format!("{w:e}")).map(|_| format!("{w:.1e}")),
        };
        (name, r)
    };
    vec![
        check("Bethe equations", worst[0], 1e-9),
        check("eigenvalue equations", worst[1], 1e-8),
        check("idempotents", worst[2], 1e-8),
        check("two vector constructions", worst[3], 1e-8),
    ]
}

fn operator_suite() -> Vec<Part> {
    let mut out: BTreeMap<&'static str, Option<String>> = [
        "e_n = z",
        "h_r(A') vanishes",
        "commutators",
        "functional equation",
        "strip recursions",
    ]
    .into_iter()
    .map(|n| (n, None))
    .collect();
    let mut fail = |name: &'static str, msg: String| {
        out.entry(name).and_modify(|e| {
            e.get_or_insert(msg);
        });
    };
    for n in 2..=4 {
        for k in 0..=3 {
            let c = ctx(n, k);
            let top = n + k - 1;
            let e: Vec<Operator<BigInt>> = (0..=top)
                .map(|r| nc_poly(PolyKind::Elementary, r, &c))
                .collect();
            let h: Vec<Operator<BigInt>> = (0..=top)
                .map(|r| nc_poly(PolyKind::Complete, r, &c))
                .collect();
            let at = format!("n={n}, k={k}");
            if nc_poly::<BigInt>(PolyKind::Elementary, n, &c) != Operator::identity(&c).shift_z(1) {
                fail("e_n = z", at.clone());
            }
            for r in k + 1..=top {
                if !nc_poly_finite::<BigInt>(PolyKind::Complete, r, &c).is_zero() {
                    fail("h_r(A') vanishes", format!("r={r} at {at}"));
                }
            }
            for r in 0..=top {
                for s in 0..=top {
                    for (x, y) in [(&h[r], &h[s]), (&e[r], &e[s]), (&e[r], &h[s])] {
                        if !x.commutator(y).unwrap().is_zero() {
                            fail("commutators", format!("r={r}, s={s} at {at}"));
                        }
                    }
                }
            }
            let res = functional_equation_residual(&c, top).unwrap();
            if res != BigInt::from(0) {
                fail("functional equation", format!("residual {res} at {at}"));
            }
            if let Err(msg) = strip_recursions(&c) {
                fail("strip recursions", format!("{msg} at {at}"));
            }
        }
    }
    out.into_iter()
        .map(|(name, f)| (name, f.map_or(Ok("exact".into()), Err)))
        .collect()
}

/// `e_r(A) = e_r(A') + z φ_n e_{r−1}(A') φ_1*` and `h_r(A) = h_r(A') + z φ_1* h_{r−1}(A) φ_n`.
fn strip_recursions(c: &FusionContext) -> Result<(), String> {
    let (n, k) = (c.n(), c.k());
    let up = c.with_level(k + 1);
    let phi_star = generator::<BigInt>(GeneratorKind::PhiStar, 1, c).unwrap();
    let phi_n = generator::<BigInt>(GeneratorKind::Phi, n, &up).unwrap();
    for r in 1..=n {
        let inner = nc_poly_finite::<BigInt>(PolyKind::Elementary, r - 1, &up);
        let rhs = nc_poly_finite::<BigInt>(PolyKind::Elementary, r, c)
            .add(
                &phi_n
                    .compose(&inner.compose(&phi_star).unwrap())
                    .unwrap()
                    .shift_z(1),
            )
            .unwrap();
        ensure(nc_poly::<BigInt>(PolyKind::Elementary, r, c) == rhs, || {
            format!("elementary r={r}")
        })?;
    }
    if k >= 1 {
        let down = c.with_level(k - 1);
        let phi_n = generator::<BigInt>(GeneratorKind::Phi, n, c).unwrap();
        let phi_star = generator::<BigInt>(GeneratorKind::PhiStar, 1, &down).unwrap();
        for r in 1..=n + k {
            let inner = nc_poly::<BigInt>(PolyKind::Complete, r - 1, &down);
            let rhs = nc_poly_finite::<BigInt>(PolyKind::Complete, r, c)
                .add(
                    &phi_star
                        .compose(&inner.compose(&phi_n).unwrap())
                        .unwrap()
                        .shift_z(1),
                )
                .unwrap();
            ensure(nc_poly::<BigInt>(PolyKind::Complete, r, c) == rhs, || {
                format!("complete r={r}")
            })?;
        }
    }
    Ok(())
}

fn vertex_suite() -> Vec<Part> {
    let start = Instant::now();
    let mut fails: [Option<String>; 3] = Default::default();
    let mut cases = 0usize;
    for k in 0..=2 {
        let c = ctx(3, k);
        for mu_hat in c.basis() {
            for nu_hat in c.basis() {
                cases += 1;
                let at = format!("{mu_hat} -> {nu_hat} at k={k}");
                let direct: PartitionFunction =
                    partition_function(mu_hat, nu_hat, &c, Backend::Direct).unwrap();
                let op: PartitionFunction =
                    partition_function(mu_hat, nu_hat, &c, Backend::Operator).unwrap();
                if direct != op {
                    fails[0].get_or_insert(at.clone());
                }
                let mu = c.weight_to_partition(mu_hat).unwrap();
                let nu = c.weight_to_partition(nu_hat).unwrap();
                let expansion = direct.schur_expand().unwrap();
                for lambda in c.partitions() {
                    let want = fuse_bethe(lambda, &mu, &c).unwrap().coeff(&nu);
                    let got = fusion_degree(lambda, &mu, &nu, 3)
                        .and_then(|d| expansion.get(&d))
                        .map_or(BigInt::from(0), |e| e.coeff(lambda));
                    if got != want {
                        fails[1].get_or_insert(format!("{lambda} in {at}"));
                    }
                }
                let spurious = expansion.iter().any(|(d, e)| {
                    e.iter()
                        .any(|(l, _)| fusion_degree(l, &mu, &nu, 3) != Some(*d))
                });
                if spurious {
                    fails[1].get_or_insert(format!("wrong degree in {at}"));
                }
                // every degree is covered once the counts add up to Z(1)
                let mut total = BigInt::from(0);
                for d in 0..=k + 1 {
                    let brute = count_paths(mu_hat, nu_hat, d, &c).unwrap();
                    let hc = hook_content_sum(&mu, &nu, d, &c, |l| {
                        fuse_bethe(l, &mu, &c).map(|e| e.coeff(&nu))
                    })
                    .unwrap();
                    if brute != hc {
                        fails[2].get_or_insert(format!("d={d} in {at}"));
                    }
                    total += brute;
                }
                if total != direct.at_ones() {
                    fails[2].get_or_insert(format!("degrees missing in {at}"));
                }
            }
        }
    }
    let [a, b, c] = fails;
    let ok = |f: Option<String>| f.map_or(Ok(format!("{cases} pairs")), Err);
    vec![
        ("direct equals operator", ok(a)),
        ("schur expansion gives fusion", ok(b)),
        ("path count", ok(c)),
        ("under 60 s", timed(Duration::from_secs(60), start)),
    ]
}

fn recursion_suite() -> Vec<Part> {
    let mut column_fail = None;
    let mut row_fail = None;
    let mut row_bad = 0usize;
    let mut closed_fail = None;
    let mut row_rec_fail = None;
    for n in 2..=4 {
        for k in 0..=3 {
            let c = ctx(n, k);
            let basis = c.basis();
            // column half over every (1^r) at this level, row half over 0 <= r <= k
            let cases: Vec<(StripKind, usize)> = (0..n)
                .filter(|&r| c.contains_partition(&Partition::column(r)))
                .map(|r| (StripKind::Column, r))
                .chain((0..=k).map(|r| (StripKind::Row, r)))
                .collect();
            let bad: Vec<(StripKind, String)> = cases
                .par_iter()
                .flat_map_iter(|&(kind, r)| basis.iter().map(move |mu| (kind, r, mu)))
                .flat_map_iter(|(kind, r, mu)| {
                    let c = &c;
                    basis.iter().flat_map(move |nu| {
                        (1..=n).filter_map(move |i| {
                            let ok = check_level_recursion(r, kind, mu, nu, i, c).unwrap();
                            (!ok).then(|| {
                                (kind, format!("r={r}, i={i}, {mu} -> {nu} at n={n}, k={k}"))
                            })
                        })
                    })
                })
                .collect();
            for (kind, msg) in bad {
                match kind {
                    StripKind::Column => {
                        column_fail.get_or_insert(msg);
                    }
                    StripKind::Row => {
                        row_bad += 1;
                        row_fail.get_or_insert(msg);
                    }
                }
            }
            for r in 0..n {
                if !c.contains_partition(&Partition::column(r)) {
                    continue;
                }
                for mu in basis {
                    let e = fuse_bethe(
                        &Partition::column(r),
                        &c.weight_to_partition(mu).unwrap(),
                        &c,
                    )
                    .unwrap();
                    for nu in basis {
                        let want = e.coeff(&c.weight_to_partition(nu).unwrap());
                        if BigInt::from(fuse_column_closed_form(r, mu, nu, &c).unwrap()) != want {
                            closed_fail
                                .get_or_insert(format!("r={r}, {mu} -> {nu} at n={n}, k={k}"));
                        }
                    }
                }
            }
            for r in 0..=k {
                for mu in basis {
                    let e = fuse_bethe(&Partition::row(r), &c.weight_to_partition(mu).unwrap(), &c)
                        .unwrap();
                    if fuse_row_recursion(r, mu, &c).unwrap() != e {
                        row_rec_fail.get_or_insert(format!("r={r}, {mu} at n={n}, k={k}"));
                    }
                }
            }
        }
    }
    let exact = |f: Option<String>| f.map_or(Ok("exhaustive".to_string()), Err);
    vec![
        ("column level raising", exact(column_fail)),
        (
            ROW_RAISING,
            row_fail.map_or(Ok("exhaustive".into()), |m| {
                Err(format!("{row_bad} counterexamples, first {m}"))
            }),
        ),
        ("column closed form", exact(closed_fail)),
        ("row recursion", exact(row_rec_fail)),
        ("column worked example", column_example()),
        ("row worked example", row_example()),
    ]
}

fn column_example() -> Result<String, String> {
    let c = ctx(5, 2);
    let mu = c.partition_to_weight(&p(&[2, 2, 1])).unwrap();
    let nu = c.partition_to_weight(&p(&[1, 1, 1])).unwrap();
    let lower = fuse_bethe(&p(&[1, 1, 1]), &p(&[2, 2, 1]), &c)
        .unwrap()
        .coeff(&p(&[1, 1, 1]));
    let upper = fuse_bethe(&p(&[1, 1, 1]), &p(&[3, 2, 1]), &ctx(5, 3))
        .unwrap()
        .coeff(&p(&[2, 1, 1]));
    let holds = check_level_recursion(3, StripKind::Column, &mu, &nu, 1, &c).unwrap();
    ensure(
        holds && lower == BigInt::from(1) && upper == BigInt::from(1),
        || format!("level 2 gives {lower}, level 3 gives {upper}"),
    )?;
    Ok("N = 1 at levels 2 and 3".into())
}

fn row_example() -> Result<String, String> {
    let c = ctx(5, 4);
    let mu = c.partition_to_weight(&p(&[2, 2, 1])).unwrap();
    let e = fuse_row_recursion(3, &mu, &c).unwrap();
    let want = "{3,2,2,1: 1, 4,2,1,1: 1, 4,2,2: 1}";
    ensure(e.to_string() == want, || format!("{e}"))?;
    let bethe = fuse_bethe(&p(&[3]), &p(&[2, 2, 1]), &c).unwrap();
    ensure(bethe == e, || format!("bethe gives {bethe}"))?;
    Ok(e.to_string())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("golden product under all four methods", golden),
        (
            "kac-walton decomposition of the (4,2) coefficient",
            kac_walton_detail,
        ),
        (
            "bethe-route decomposition of the (4,2) coefficient",
            bethe_detail,
        ),
        ("cross-method agreement, n <= 4, k <= 4", cross_method),
        ("littlewood-richardson golden data", lr_golden),
        (
            "S-matrix unitarity and level-one closed form",
            s_matrix_suite,
        ),
        ("spectral suite, n <= 4, k <= 3", spectral_suite),
        ("operator identities, n <= 4, k <= 3", operator_suite),
        ("vertex model equivalence, n = 3, k <= 2", vertex_suite),
        (
            "recursions, n <= 4, k <= 3, and rank-five examples",
            recursion_suite,
        ),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let parts = run();
        let passed = parts.iter().all(|(_, r)| r.is_ok());
        println!(
            "criterion {:>2}: {} {title}",
            i + 1,
            if passed { "PASS" } else { "FAIL" }
        );
        for (name, r) in &parts {
            match r {
                Ok(detail) => println!("    ok    {name}: {detail}"),
                Err(why) => println!("    FAIL  {name}: {why}"),
            }
            if r.is_err() && !(i == 9 && *name == ROW_RAISING) {
                unexpected.push(format!("criterion {}: {name}", i + 1));
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
