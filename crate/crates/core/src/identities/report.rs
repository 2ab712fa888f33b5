use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::combinatorics::{p, AffineWeight, FusionContext, Partition};
use crate::fusion::{
    fuse_bethe, s_matrix, FusionEngine, FusionExpansion, FusionMethod, MAX_SMATRIX_RANK,
};
use crate::identities::{fuse_column_closed_form, fuse_row_recursion, StripKind};
use crate::plactic::{
    functional_equation_residual, generator, nc_poly, nc_poly_finite, GeneratorKind, Operator,
    PolyKind,
};
use crate::spectrum::{norm_residual, shift_identity_holds, BetheSpectrum};
use crate::tolerance::Tolerances;
use crate::vertex::{
    count_paths, fusion_degree, hook_content_sum, partition_function, Backend, SymbolicPoly,
};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Reported but not counted towards the verdict.
    pub informational: bool,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: true,
            cases: 0,
            worst_residual: None,
            counterexample: None,
            skipped: None,
            informational: false,
        }
    }

    fn skipped(name: &str, why: &str) -> Self {
        Self {
            skipped: Some(why.to_string()),
            ..Self::new(name)
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    fn residual(&mut self, value: f64, tolerance: f64, describe: impl FnOnce() -> String) {
        self.worst_residual = Some(self.worst_residual.map_or(value, |w| w.max(value)));
        self.case(value < tolerance, describe);
    }

    fn error(&mut self, e: impl std::fmt::Display) {
        self.case(false, || format!("error: {e}"));
    }
}

/// All checks for one `(n, k)`.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub k: usize,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    /// True when no executed check failed.
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks
            .iter()
            .filter(|c| !c.passed && !c.informational)
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = Value::Bool(self.passed());
        v
    }

    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let _ = writeln!(out, "n = {}, k = {}", self.n, self.k);
        let _ = writeln!(
            out,
            "{:<width$}  {:<6}  {:>7}  {:>10}  note",
            "check", "status", "cases", "residual"
        );
        for c in &self.checks {
            let status = match (&c.skipped, c.informational, c.passed) {
                (Some(_), _, _) => "SKIP",
                (None, true, _) => "INFO",
                (None, false, true) => "PASS",
                (None, false, false) => "FAIL",
            };
            let residual = c
                .worst_residual
                .map_or("-".to_string(), |r| format!("{r:.2e}"));
            let note = c
                .skipped
                .clone()
                .or_else(|| c.counterexample.clone())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{:<width$}  {:<6}  {:>7}  {:>10}  {note}",
                c.name, status, c.cases, residual
            );
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Which families of checks run and with what tolerances.
#[derive(Clone, Debug)]
pub struct ValidationOptions {
    pub tolerances: Tolerances,
    /// Largest basis dimension for which the lattice enumeration checks run.
    pub max_vertex_dim: usize,
    /// Largest basis dimension for the quadratic idempotency sweep.
    pub max_idempotent_dim: usize,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            max_vertex_dim: 20,
            max_idempotent_dim: 40,
        }
    }
}

/// Runs every check for `ctx` with default options.
pub fn cross_validate(ctx: &FusionContext) -> ValidationReport {
    cross_validate_with(ctx, &ValidationOptions::default())
}

pub fn cross_validate_with(ctx: &FusionContext, opts: &ValidationOptions) -> ValidationReport {
    let mut checks = Vec::new();
    checks.push(fusion_agreement(ctx, opts));
    if (ctx.n(), ctx.k()) == (3, 4) {
        checks.push(golden_product(ctx));
    }
    checks.extend(operator_checks(ctx));
    checks.extend(spectral_checks(ctx, opts));
    checks.extend(vertex_checks(ctx, opts));
    checks.extend(recursion_checks(ctx));
    ValidationReport {
        n: ctx.n(),
        k: ctx.k(),
        checks,
    }
}

fn fusion_agreement(ctx: &FusionContext, opts: &ValidationOptions) -> CheckResult {
    let mut check = CheckResult::new("fusion: all methods agree");
    let engine = FusionEngine::with_rounding(ctx, opts.tolerances.verlinde_rounding);
    let verlinde = if ctx.n() <= MAX_SMATRIX_RANK {
        match engine.verlinde() {
            Ok(v) => Some(v),
            Err(e) => {
                check.error(e);
                None
            }
        }
    } else {
        None
    };
    let parts = ctx.partitions();
    let rows: Vec<Vec<(bool, f64, String)>> = parts
        .par_iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| {
                    let describe = |what: &str| format!("{lambda} * {mu}: {what}");
                    let bethe = match fuse_bethe(lambda, mu, ctx) {
                        Ok(b) => b,
                        Err(e) => return (false, 0.0, describe(&e.to_string())),
                    };
                    for m in [FusionMethod::KacWalton, FusionMethod::Plactic] {
                        match engine.fuse(m, lambda, mu) {
                            Ok(e) if e == bethe => {}
                            Ok(e) => {
                                return (
                                    false,
                                    0.0,
                                    describe(&format!("{m} gives {e}, bethe gives {bethe}")),
                                )
                            }
                            Err(e) => return (false, 0.0, describe(&e.to_string())),
                        }
                    }
                    match verlinde.map(|v| v.fuse_with_residual(lambda, mu)) {
                        None => (true, 0.0, String::new()),
                        Some(Ok((e, res))) if e == bethe => (true, res, String::new()),
                        Some(Ok((e, res))) => {
                            (false, res, describe(&format!("verlinde gives {e}")))
                        }
                        Some(Err(e)) => (false, 0.0, describe(&e.to_string())),
                    }
                })
                .collect()
        })
        .collect();
    for (ok, res, what) in rows.into_iter().flatten() {
        check.case(ok, || what);
        if verlinde.is_some() {
            check.worst_residual = Some(check.worst_residual.map_or(res, |w| w.max(res)));
        }
    }
    if verlinde.is_none() {
        check.skipped = None;
        check.name = "fusion: bethe, kac-walton and plactic agree".into();
    }
    check
}

fn golden_product(ctx: &FusionContext) -> CheckResult {
    let mut check = CheckResult::new("golden: (3,1) * (3,2) at n=3, k=4");
    let expected = "{0: 1, 2,1: 2, 3: 1, 3,3: 1, 4,2: 1}";
    let engine = FusionEngine::new(ctx);
    for m in FusionMethod::ALL {
        match engine.fuse(m, &p(&[3, 1]), &p(&[3, 2])) {
            Ok(e) => check.case(e.to_string() == expected, || format!("{m} gives {e}")),
            Err(e) => check.error(e),
        }
    }
    check
}

fn operator_checks(ctx: &FusionContext) -> Vec<CheckResult> {
    let (n, k) = (ctx.n(), ctx.k());
    let top = n + k - 1;
    let e: Vec<Operator<BigInt>> = (0..=n + k)
        .map(|r| nc_poly(PolyKind::Elementary, r, ctx))
        .collect();
    let h: Vec<Operator<BigInt>> = (0..=n + k)
        .map(|r| nc_poly(PolyKind::Complete, r, ctx))
        .collect();
    let mut out = Vec::new();

    let mut c = CheckResult::new("plactic: e_n(A) = z");
    c.case(e[n] == Operator::identity(ctx).shift_z(1), || {
        "e_n(A) differs from z".into()
    });
    out.push(c);

    let mut c = CheckResult::new("plactic: h_r(A') = 0 above the level");
    for r in k + 1..=top {
        c.case(
            nc_poly_finite::<BigInt>(PolyKind::Complete, r, ctx).is_zero(),
            || format!("r = {r}"),
        );
    }
    out.push(c);

    let mut c = CheckResult::new("plactic: e and h commute");
    for r in 0..=top {
        for s in r..=top {
            for (x, y, label) in [
                (&h[r], &h[s], "[h,h]"),
                (&e[r], &e[s], "[e,e]"),
                (&e[r], &h[s], "[e,h]"),
                (&e[s], &h[r], "[e,h]"),
            ] {
                match x.commutator(y) {
                    Ok(com) => c.case(com.is_zero(), || format!("{label} at r={r}, s={s}")),
                    Err(err) => c.error(err),
                }
            }
        }
    }
    out.push(c);

    let mut c = CheckResult::new("plactic: T(-u)Q(u) functional equation");
    match functional_equation_residual(ctx, n + k) {
        Ok(res) => c.case(res == BigInt::from(0), || {
            format!("largest coefficient {res}")
        }),
        Err(err) => c.error(err),
    }
    out.push(c);

    out.push(strip_recursions(ctx));

    let mut c = CheckResult::new("plactic: h_k(A) rotates labels at z=1");
    c.case(shift_identity_holds(ctx), || {
        "h_k(A) is not the rotation".into()
    });
    out.push(c);
    out
}

/// `e_r(A) = e_r(A') + z φ_n e_{r−1}(A') φ_1*` and `h_r(A) = h_r(A') + z φ_1* h_{r−1}(A) φ_n`.
fn strip_recursions(ctx: &FusionContext) -> CheckResult {
    let (n, k) = (ctx.n(), ctx.k());
    let mut c = CheckResult::new("plactic: elementary and complete recursions");
    let run = |c: &mut CheckResult| -> crate::Result<()> {
        let up = ctx.with_level(k + 1);
        let phi_star = generator::<BigInt>(GeneratorKind::PhiStar, 1, ctx)?;
        let phi_n = generator::<BigInt>(GeneratorKind::Phi, n, &up)?;
        for r in 1..=n {
            let inner = nc_poly_finite::<BigInt>(PolyKind::Elementary, r - 1, &up);
            let rhs = nc_poly_finite::<BigInt>(PolyKind::Elementary, r, ctx)
                .add(&phi_n.compose(&inner.compose(&phi_star)?)?.shift_z(1))?;
            c.case(
                nc_poly::<BigInt>(PolyKind::Elementary, r, ctx) == rhs,
                || format!("elementary r = {r}"),
            );
        }
        if k >= 1 {
            let down = ctx.with_level(k - 1);
            let phi_n = generator::<BigInt>(GeneratorKind::Phi, n, ctx)?;
            let phi_star = generator::<BigInt>(GeneratorKind::PhiStar, 1, &down)?;
            for r in 1..=n + k {
                let inner = nc_poly::<BigInt>(PolyKind::Complete, r - 1, &down);
                let rhs = nc_poly_finite::<BigInt>(PolyKind::Complete, r, ctx)
                    .add(&phi_star.compose(&inner.compose(&phi_n)?)?.shift_z(1))?;
                c.case(nc_poly::<BigInt>(PolyKind::Complete, r, ctx) == rhs, || {
                    format!("complete r = {r}")
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut c) {
        c.error(e);
    }
    c
}

fn spectral_checks(ctx: &FusionContext, opts: &ValidationOptions) -> Vec<CheckResult> {
    let names = [
        "spectral: S-matrix unitary and symmetric",
        "spectral: Bethe equations",
        "spectral: B-operator and S-matrix vectors agree",
        "spectral: eigenvalue equations",
        "spectral: S-matrix from Bethe vectors",
        "spectral: idempotents",
        "spectral: completeness",
    ];
    if ctx.n() > MAX_SMATRIX_RANK {
        return names
            .iter()
            .map(|n| CheckResult::skipped(n, "rank above the S-matrix guard"))
            .collect();
    }
    let tol = &opts.tolerances;
    let mut out: Vec<CheckResult> = names.iter().map(|n| CheckResult::new(n)).collect();
    let s = match s_matrix::<f64>(ctx) {
        Ok(s) => s,
        Err(e) => {
            out[0].error(e);
            return out;
        }
    };
    out[0].residual(
        s.unitarity_residual().max(s.symmetry_residual()),
        tol.unitarity,
        || "S".into(),
    );
    let sp = match BetheSpectrum::<f64>::new(ctx) {
        Ok(sp) => sp,
        Err(e) => {
            out[1].error(e);
            return out;
        }
    };
    let (n, k) = (ctx.n(), ctx.k());
    let per_sigma: Vec<(Partition, crate::Result<[f64; 3]>)> = ctx
        .partitions()
        .par_iter()
        .map(|sigma| {
            let run = || -> crate::Result<[f64; 3]> {
                let bae = sp.roots(sigma)?.residual(ctx);
                let agree = sp.method_residual(sigma)?.max(norm_residual(&sp, sigma)?);
                let mut eig = 0.0f64;
                for r in 0..n + k {
                    for kind in [PolyKind::Complete, PolyKind::Elementary] {
                        eig = eig.max(sp.eigen_residual(sigma, r, kind)?);
                    }
                }
                Ok([bae, agree, eig])
            };
            (sigma.clone(), run())
        })
        .collect();
    for (sigma, r) in per_sigma {
        match r {
            Ok([bae, agree, eig]) => {
                out[1].residual(bae, tol.bae, || format!("σ = {sigma}"));
                out[2].residual(agree, tol.spectral, || format!("σ = {sigma}"));
                out[3].residual(eig, tol.spectral, || format!("σ = {sigma}"));
            }
            Err(e) => out[1].error(e),
        }
    }
    match sp.s_matrix() {
        Ok(sb) => out[4].residual(sb.max_abs_diff(&s), tol.s_from_bethe, || {
            "elementwise".into()
        }),
        Err(e) => out[4].error(e),
    }
    if ctx.dim() <= opts.max_idempotent_dim {
        match sp.idempotency_residual() {
            Ok(r) => out[5].residual(r, tol.spectral, || "pairwise products".into()),
            Err(e) => out[5].error(e),
        }
    } else {
        out[5] = CheckResult::skipped(names[5], "basis too large for the pairwise sweep");
    }
    match sp.completeness() {
        // reported as the distance of the smallest singular value from zero
        Ok(sv) => {
            out[6].cases += 1;
            out[6].worst_residual = Some(sv);
            if sv <= tol.completeness {
                out[6].passed = false;
                out[6].counterexample = Some(format!("smallest singular value {sv:.3e}"));
            }
        }
        Err(e) => out[6].error(e),
    }
    out
}

fn vertex_checks(ctx: &FusionContext, opts: &ValidationOptions) -> Vec<CheckResult> {
    let names = [
        "vertex: direct sum equals transfer matrices",
        "vertex: partition function generates fusion",
        "vertex: path count equals hook-content sum",
    ];
    if ctx.dim() > opts.max_vertex_dim {
        return names
            .iter()
            .map(|n| CheckResult::skipped(n, "basis too large for lattice enumeration"))
            .collect();
    }
    let table = bethe_table(ctx, ctx);
    let pairs: Vec<(usize, usize)> = (0..ctx.dim())
        .flat_map(|a| (0..ctx.dim()).map(move |b| (a, b)))
        .collect();
    let results: Vec<[Option<String>; 3]> = pairs
        .par_iter()
        .map(|&(a, b)| vertex_pair(ctx, a, b, &table))
        .collect();
    let mut out: Vec<CheckResult> = names.iter().map(|n| CheckResult::new(n)).collect();
    for r in results {
        for (c, fail) in out.iter_mut().zip(r) {
            c.case(fail.is_none(), || fail.unwrap_or_default());
        }
    }
    out
}

/// `table[λ][μ]` is `λ ∗ μ` by Bethe reduction, `λ` from `lhs`, `μ` from `ctx`.
fn bethe_table(lhs: &FusionContext, ctx: &FusionContext) -> Vec<Vec<FusionExpansion>> {
    lhs.partitions()
        .par_iter()
        .map(|l| {
            ctx.partitions()
                .iter()
                .map(|m| fuse_bethe(l, m, ctx).expect("basis partitions fuse"))
                .collect()
        })
        .collect()
}

fn vertex_pair(
    ctx: &FusionContext,
    a: usize,
    b: usize,
    table: &[Vec<FusionExpansion>],
) -> [Option<String>; 3] {
    let (mu_hat, nu_hat) = (&ctx.basis()[a], &ctx.basis()[b]);
    let (mu, nu) = (&ctx.partitions()[a], &ctx.partitions()[b]);
    let label = format!("{mu_hat} -> {nu_hat}");
    let direct: SymbolicPoly<BigInt> =
        match partition_function(mu_hat, nu_hat, ctx, Backend::Direct) {
            Ok(z) => z,
            Err(e) => return [Some(format!("{label}: {e}")), None, None],
        };
    let op: SymbolicPoly<BigInt> = match partition_function(mu_hat, nu_hat, ctx, Backend::Operator)
    {
        Ok(z) => z,
        Err(e) => return [Some(format!("{label}: {e}")), None, None],
    };
    let backends = (direct != op).then(|| label.clone());
    let coeff = |lambda: &Partition| -> BigInt {
        let i = ctx.index_of_partition(lambda).expect("basis partition");
        table[i][a].coeff(nu)
    };
    let generating = (|| {
        if !direct.is_symmetric() {
            return Some(format!("{label}: not symmetric"));
        }
        let exp = match direct.schur_expand() {
            Ok(e) => e,
            Err(e) => return Some(format!("{label}: {e}")),
        };
        for lambda in ctx.partitions() {
            let got = fusion_degree(lambda, mu, nu, ctx.n())
                .and_then(|d| exp.get(&d))
                .map_or(BigInt::from(0), |e| e.coeff(lambda));
            if got != coeff(lambda) {
                return Some(format!("{label}: coefficient of s_{lambda}"));
            }
        }
        let total: BigInt = exp
            .values()
            .flat_map(|e| e.iter().map(|(_, c)| c.clone()))
            .sum();
        let expected: BigInt = ctx.partitions().iter().map(coeff).sum();
        (total != expected).then(|| format!("{label}: terms outside the stated degrees"))
    })();
    let paths = (|| {
        for d in 0..=ctx.k() + 1 {
            let brute = count_paths(mu_hat, nu_hat, d, ctx).ok()?;
            let hc = hook_content_sum(mu, nu, d, ctx, |l| Ok(coeff(l))).ok()?;
            if brute != hc {
                return Some(format!("{label}, d = {d}: {brute} vs {hc}"));
            }
        }
        None
    })();
    [backends, generating, paths]
}

fn weight_pairs(ctx: &FusionContext) -> Vec<(&AffineWeight, &AffineWeight)> {
    ctx.basis()
        .iter()
        .flat_map(|m| ctx.basis().iter().map(move |v| (m, v)))
        .collect()
}

fn recursion_checks(ctx: &FusionContext) -> Vec<CheckResult> {
    let (n, k) = (ctx.n(), ctx.k());
    let up = ctx.with_level(k + 1);
    let mut level = CheckResult::new("recursion: raising the level, columns");
    // the row version is false in general, so it is tallied but does not gate
    let mut level_row =
        CheckResult::new("recursion: raising the level, rows (counterexamples expected)");
    level_row.informational = true;
    let mut column = CheckResult::new("recursion: column closed form");
    let mut row = CheckResult::new("recursion: row recursion");

    for kind in [StripKind::Column, StripKind::Row] {
        for r in 0..=k.max(n - 1) {
            let rho = kind.shape(r);
            if !ctx.contains_partition(&rho) {
                continue;
            }
            let low: Vec<FusionExpansion> = ctx
                .partitions()
                .par_iter()
                .map(|m| fuse_bethe(&rho, m, ctx).expect("fuses"))
                .collect();
            let high: Vec<FusionExpansion> = up
                .partitions()
                .par_iter()
                .map(|m| fuse_bethe(&rho, m, &up).expect("fuses"))
                .collect();
            for (mu, nu) in weight_pairs(ctx) {
                let lo = low[ctx.index_of(mu).expect("basis")]
                    .coeff(&ctx.weight_to_partition(nu).expect("basis"));
                for i in 1..=n {
                    let (mut m, mut v) = (mu.clone(), nu.clone());
                    m.labels_mut()[i - 1] += 1;
                    v.labels_mut()[i - 1] += 1;
                    let hi = high[up.index_of(&m).expect("raised weight")]
                        .coeff(&up.weight_to_partition(&v).expect("raised"));
                    let target = if kind == StripKind::Column {
                        &mut level
                    } else {
                        &mut level_row
                    };
                    target.case(lo == hi, || format!("r={r}, i={i}, {mu} -> {nu}"));
                }
                if kind == StripKind::Column && r < n {
                    match fuse_column_closed_form(r, mu, nu, ctx) {
                        Ok(c) => {
                            column.case(BigInt::from(c) == lo, || format!("r={r}, {mu} -> {nu}"))
                        }
                        Err(e) => column.error(e),
                    }
                }
            }
            if kind == StripKind::Row {
                for mu in ctx.basis() {
                    match fuse_row_recursion(r, mu, ctx) {
                        Ok(e) => row.case(e == low[ctx.index_of(mu).expect("basis")], || {
                            format!("r={r}, {mu}")
                        }),
                        Err(e) => row.error(e),
                    }
                }
            }
        }
    }
    if !level_row.passed {
        let failed = level_row.counterexample.take().unwrap_or_default();
        level_row.counterexample = Some(format!("first counterexample {failed}"));
    }
    vec![level, level_row, column, row]
}
