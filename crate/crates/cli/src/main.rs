use std::fmt::Write as _;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wznw_fusion::combinatorics::{FusionContext, Partition};
use wznw_fusion::fusion::{
    s_matrix, smatrix_to_json, FusionEngine, FusionExpansion, FusionMethod, MAX_SMATRIX_RANK,
};
use wznw_fusion::identities::{cross_validate_with, ValidationOptions};
use wznw_fusion::plactic::{nc_poly, nc_schur, PolyKind};
use wznw_fusion::vertex::{count_paths, enumerate_lattice_configs, hook_content_sum};
use wznw_fusion::{FusionError, PlacticOperator, Spectrum, Tolerances};

/// Largest weight-space dimension the CLI will sweep over.
const MAX_DIM: usize = 5000;

#[derive(Parser)]
#[command(
    name = "wznw-fusion",
    version,
    about = "Fusion coefficients of su(n) level-k WZNW models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fuse two partitions.
    Fuse {
        #[command(flatten)]
        common: Common,
        /// Comma-separated parts, e.g. 3,1; 0 is the empty partition.
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// bethe, kac-walton, verlinde, plactic or all
        #[arg(long, default_value = "bethe")]
        method: String,
    },
    /// Run every cross-check for one (n, k).
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Print the modular S-matrix.
    Smatrix {
        #[command(flatten)]
        common: Common,
    },
    /// Count lattice paths and compare with the hook-content sum.
    Paths {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Number of seam crossings; all degrees when omitted.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Print every fusion matrix N_λ.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "bethe")]
        method: String,
    },
    /// Export Bethe roots and vectors.
    Bethe {
        #[command(flatten)]
        common: Common,
        /// Labelling partition; all of them when omitted.
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Dump every lattice configuration between two boundaries.
    Lattice {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Export a plactic operator: e_r, h_r or the Schur operator of --lambda.
    Operator {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = OperatorKind::Schur)]
        kind: OperatorKind,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        lambda: Option<Partition>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorKind {
    E,
    H,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Rank: the algebra is su(n).
    #[arg(long)]
    n: usize,
    /// Level.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long)]
    jobs: Option<usize>,
    /// Overrides the Verlinde rounding and spectral tolerances.
    #[arg(long)]
    tolerance: Option<f64>,
}

impl Common {
    fn context(&self) -> Result<FusionContext, Failure> {
        let ctx = FusionContext::new(self.n, self.k)?;
        if ctx.dim() > MAX_DIM {
            return Err(FusionError::Infeasible(format!(
                "{} basis weights exceed the limit {MAX_DIM}",
                ctx.dim()
            ))
            .into());
        }
        Ok(ctx)
    }

    fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(tol) = self.tolerance {
            t.verlinde_rounding = tol;
            t.spectral = tol;
        }
        t
    }
}

enum Failure {
    /// Bad input or a guard: exit 1.
    Usage(String),
    /// A verification or agreement failure: exit 2.
    Disagreement,
}

impl From<FusionError> for Failure {
    fn from(e: FusionError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(format: Format, text: String, value: Value) {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
    };
    // a closed pipe (`| head`) is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn parse_method(s: &str) -> Result<Option<FusionMethod>, Failure> {
    if s == "all" {
        return Ok(None);
    }
    Ok(Some(s.parse()?))
}

fn cmd_fuse(
    common: &Common,
    lambda: &Partition,
    mu: &Partition,
    method: &str,
) -> Result<(), Failure> {
    let ctx = common.context()?;
    ctx.check_partition(lambda)?;
    ctx.check_partition(mu)?;
    let engine = FusionEngine::with_rounding(&ctx, common.tolerances().verlinde_rounding);
    match parse_method(method)? {
        Some(m) => {
            let e = engine.fuse(m, lambda, mu)?;
            let mut v = e.to_json_value();
            v["method"] = json!(m.name());
            emit(common.format, format!("{e}\n"), v);
            Ok(())
        }
        None => {
            let mut results: Vec<(FusionMethod, FusionExpansion)> = Vec::new();
            for m in FusionMethod::ALL {
                if m == FusionMethod::Verlinde && ctx.n() > MAX_SMATRIX_RANK {
                    continue;
                }
                results.push((m, engine.fuse(m, lambda, mu)?));
            }
            let reference = &results[0].1;
            let agreeing = results.iter().filter(|(_, e)| e == reference).count();
            let total = results.len();
            let agree = agreeing == total;
            let verdict = if agree {
                format!("AGREE({agreeing}/{total})")
            } else {
                format!("DISAGREE({agreeing}/{total})")
            };
            let mut text = format!("{reference}\n");
            if !agree {
                for (m, e) in &results {
                    let _ = writeln!(text, "  {m}: {e}");
                }
            }
            let _ = writeln!(text, "{verdict}");
            let mut v = reference.to_json_value();
            v["method"] = json!("all");
            v["verdict"] = json!(verdict);
            v["agree"] = json!(agree);
            v["methods"] = results
                .iter()
                .map(|(m, e)| (m.name().to_string(), e.to_json_value()))
                .collect();
            emit(common.format, text, v);
            if agree {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
    }
}

fn cmd_verify(common: &Common) -> Result<(), Failure> {
    let ctx = common.context()?;
    let opts = ValidationOptions {
        tolerances: common.tolerances(),
        ..ValidationOptions::default()
    };
    let report = cross_validate_with(&ctx, &opts);
    emit(common.format, report.to_table(), report.to_json_value());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn cmd_smatrix(common: &Common) -> Result<(), Failure> {
    let ctx = common.context()?;
    let s = s_matrix::<f64>(&ctx)?;
    let mut text = String::new();
    let labels: Vec<String> = ctx.partitions().iter().map(|p| format!("({p})")).collect();
    let _ = writeln!(
        text,
        "{:>10} {}",
        "",
        labels
            .iter()
            .map(|l| format!("{l:>22}"))
            .collect::<String>()
    );
    for (i, l) in labels.iter().enumerate() {
        let row: String = s
            .row(i)
            .iter()
            .map(|z| format!("{:>22}", format!("{:+.6}{:+.6}i", z.re, z.im)))
            .collect();
        let _ = writeln!(text, "{l:>10} {row}");
    }
    emit(common.format, text, smatrix_to_json(&ctx, &s));
    Ok(())
}

fn cmd_paths(
    common: &Common,
    mu: &Partition,
    nu: &Partition,
    d: Option<usize>,
) -> Result<(), Failure> {
    let ctx = common.context()?;
    let mu_hat = ctx.partition_to_weight(mu)?;
    let nu_hat = ctx.partition_to_weight(nu)?;
    let engine = FusionEngine::new(&ctx);
    let degrees: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (0..=ctx.k() + 1).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut agree = true;
    for d in degrees {
        let brute = count_paths(&mu_hat, &nu_hat, d, &ctx)?;
        let hc = hook_content_sum(mu, nu, d, &ctx, |lambda| {
            Ok(engine.fuse(FusionMethod::Bethe, lambda, mu)?.coeff(nu))
        })?;
        agree &= brute == hc;
        let _ = writeln!(text, "d={d}: paths={brute} hook-content={hc}");
        rows.push(json!({ "d": d, "paths": brute.to_string(), "hook_content": hc.to_string() }));
    }
    emit(
        common.format,
        text,
        json!({ "n": ctx.n(), "k": ctx.k(), "mu": mu, "nu": nu, "degrees": rows, "agree": agree }),
    );
    if agree {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn cmd_table(common: &Common, method: &str) -> Result<(), Failure> {
    let ctx = common.context()?;
    let method = parse_method(method)?
        .ok_or_else(|| Failure::Usage("table needs a single method".into()))?;
    let engine = FusionEngine::with_rounding(&ctx, common.tolerances().verlinde_rounding);
    let parts = ctx.partitions();
    let mut text = String::new();
    let mut mats = Vec::new();
    for lambda in parts {
        // column μ, row ν: N_λ μ = Σ_ν N_{λμ}^ν ν
        let products: Vec<FusionExpansion> = parts
            .iter()
            .map(|mu| engine.fuse(method, lambda, mu))
            .collect::<Result<_, _>>()?;
        let _ = writeln!(text, "N_({lambda}):");
        let mut rows = Vec::new();
        for nu in parts {
            let row: Vec<String> = products.iter().map(|e| e.coeff(nu).to_string()).collect();
            let _ = writeln!(text, "  {}", row.join(" "));
            rows.push(row);
        }
        mats.push(json!({ "lambda": lambda, "matrix": rows }));
    }
    emit(
        common.format,
        text,
        json!({ "n": ctx.n(), "k": ctx.k(), "partitions": parts, "method": method.name(), "matrices": mats }),
    );
    Ok(())
}

fn cmd_bethe(common: &Common, sigma: Option<&Partition>) -> Result<(), Failure> {
    let ctx = common.context()?;
    let sp = Spectrum::new(&ctx)?;
    let sigmas = match sigma {
        Some(s) => vec![s.clone()],
        None => sp.sigmas(),
    };
    let mut text = String::new();
    let mut out = Vec::new();
    for s in &sigmas {
        let v = sp.to_json_value(s)?;
        let roots = sp.roots(s)?;
        let shown: Vec<String> = roots
            .roots
            .iter()
            .map(|x| format!("{:+.6}{:+.6}i", x.re, x.im))
            .collect();
        let _ = writeln!(
            text,
            "σ=({s}) residual={:.2e} roots=[{}]",
            roots.residual(&ctx),
            shown.join(", ")
        );
        out.push(v);
    }
    let value = if out.len() == 1 {
        out.remove(0)
    } else {
        Value::Array(out)
    };
    emit(common.format, text, value);
    Ok(())
}

fn cmd_lattice(common: &Common, mu: &Partition, nu: &Partition) -> Result<(), Failure> {
    let ctx = common.context()?;
    let configs = enumerate_lattice_configs(
        &ctx.partition_to_weight(mu)?,
        &ctx.partition_to_weight(nu)?,
        &ctx,
    )?;
    let mut text = format!("{} configurations\n", configs.len());
    for (i, c) in configs.iter().enumerate() {
        let _ = writeln!(
            text,
            "#{i}: z^{} x^{:?}",
            c.z_degree(),
            c.horizontal_edges()
        );
        for row in c.rows.iter().rev() {
            let cells: Vec<String> = row
                .vertices
                .iter()
                .map(|v| format!("({},{},{},{})", v.a, v.b, v.c, v.d))
                .collect();
            let _ = writeln!(text, "  {} seam={}", cells.join(" "), row.seam());
        }
    }
    let value = json!({
        "n": ctx.n(),
        "k": ctx.k(),
        "mu": mu,
        "nu": nu,
        "configurations": configs.iter().map(|c| c.to_json_value()).collect::<Vec<_>>(),
    });
    emit(common.format, text, value);
    Ok(())
}

fn cmd_operator(
    common: &Common,
    kind: OperatorKind,
    r: usize,
    lambda: Option<&Partition>,
) -> Result<(), Failure> {
    let ctx = common.context()?;
    let op: PlacticOperator = match kind {
        OperatorKind::E => nc_poly(PolyKind::Elementary, r, &ctx),
        OperatorKind::H => nc_poly(PolyKind::Complete, r, &ctx),
        OperatorKind::Schur => {
            let lambda = lambda.ok_or_else(|| {
                Failure::Usage("--lambda is required for the Schur operator".into())
            })?;
            nc_schur(lambda, &ctx)?
        }
    };
    let mut text = String::new();
    for (i, j, c) in op.entries() {
        let _ = writeln!(
            text,
            "({}) <- ({}): {c}",
            ctx.partitions()[i],
            ctx.partitions()[j]
        );
    }
    emit(common.format, text, op.to_json_value());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = match &cli.command {
        Command::Fuse { common, .. }
        | Command::Verify { common }
        | Command::Smatrix { common }
        | Command::Paths { common, .. }
        | Command::Table { common, .. }
        | Command::Bethe { common, .. }
        | Command::Lattice { common, .. }
        | Command::Operator { common, .. } => common,
    };
    if let Some(jobs) = common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Fuse {
            common,
            lambda,
            mu,
            method,
        } => cmd_fuse(common, lambda, mu, method),
        Command::Verify { common } => cmd_verify(common),
        Command::Smatrix { common } => cmd_smatrix(common),
        Command::Paths { common, mu, nu, d } => cmd_paths(common, mu, nu, *d),
        Command::Table { common, method } => cmd_table(common, method),
        Command::Bethe { common, lambda } => cmd_bethe(common, lambda.as_ref()),
        Command::Lattice { common, mu, nu } => cmd_lattice(common, mu, nu),
        Command::Operator {
            common,
            kind,
            r,
            lambda,
        } => cmd_operator(common, *kind, *r, lambda.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement) => ExitCode::from(2),
    }
}
