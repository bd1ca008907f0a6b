//! `superschur`: batch interface for enumeration, construction and
//! verification of even-primitive vectors.
//!
//! Every command prints one JSON document to standard output and, with
//! `--json-out`, writes the same bytes to a file.
//!
//! Exit codes:
//!
//! * `0`: every check passed.
//! * `1`: a mathematical check failed.
//! * `2`: bad input, including an exceeded term budget.
//! * `3`: an internal claim was violated, such as a failed exact division.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use superschur::budget::Budget;
use superschur::characters::{hook_schur, hook_schur_lr, hook_schur_tableaux, CharacterError};
use superschur::lr::{
    enumerate_marked, enumerate_pictures, enumerate_ssyt, lr_sum_identity, lr_tableaux, plus_shape,
    LrError,
};
use superschur::par::{self, Parallelism};
use superschur::primitive::{
    build_primitive_budgeted, check_congruences, perturb, rank, verify_even_primitive,
    PrimitiveError, PrimitiveVector, VectorReport,
};
use superschur::shapes::{conjugate, hook_partitions, hook_split, HookSplit, Partition, SkewShape};
use superschur::superring::{
    check_det_identities, check_dminus_expanded, IdentityParams, SuperringError,
};
use superschur::sweep::{instances, run_instance, Instance};
use thiserror::Error;

/// Failures that abort a command before a verdict is reached.
#[derive(Debug, Error)]
enum CliError {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("term budget exceeded: {0}")]
    Budget(String),
    #[error("claim violated: {0}")]
    Claim(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::BadInput(_) | CliError::Budget(_) | CliError::Io(_) => 2,
            CliError::Claim(_) => 3,
        }
    }
}

impl From<PrimitiveError> for CliError {
    fn from(e: PrimitiveError) -> Self {
        match e {
            PrimitiveError::Budget(b) => CliError::Budget(b.to_string()),
            PrimitiveError::Ring(r) => r.into(),
            PrimitiveError::Lr(l) => l.into(),
            other => CliError::Claim(other.to_string()),
        }
    }
}

impl From<LrError> for CliError {
    fn from(e: LrError) -> Self {
        match e {
            LrError::Shape(s) => CliError::BadInput(s.to_string()),
            other => CliError::Claim(other.to_string()),
        }
    }
}

impl From<SuperringError> for CliError {
    fn from(e: SuperringError) -> Self {
        match e {
            SuperringError::Budget(b) => CliError::Budget(b.to_string()),
            SuperringError::BadContext { .. } => CliError::BadInput(e.to_string()),
            other => CliError::Claim(other.to_string()),
        }
    }
}

impl From<CharacterError> for CliError {
    fn from(e: CharacterError) -> Self {
        CliError::BadInput(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "superschur",
    version,
    about = "Even-primitive vectors for GL(m|n)"
)]
struct Cli {
    /// Worker threads; 1 runs sequentially, 0 uses the default pool.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Also write the JSON document to this path.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List tableaux or pictures attached to one weight.
    Enumerate {
        kind: EnumerateKind,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Build every vector v̄(T⁺) of one weight and report it.
    Construct {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = Mode::Expanded)]
        mode: Mode,
    },
    /// Run one family of checks and exit 1 if any fails.
    Verify {
        check: VerifyKind,
        #[command(flatten)]
        target: TargetArgs,
        /// Largest `s` for the determinant identities.
        #[arg(long, default_value_t = 3)]
        s: usize,
        /// Largest offset `u` for the determinant identities.
        #[arg(long, default_value_t = 2)]
        u: usize,
        #[arg(long, value_enum, default_value_t = Mode::Expanded)]
        mode: Mode,
        /// Perturb every vector before checking primitivity.
        #[arg(long)]
        inject_perturbation: bool,
    },
    /// Build, verify and rank every vector for all weights of a grid.
    Sweep {
        #[command(flatten)]
        target: TargetArgs,
        /// Skip the primitivity check.
        #[arg(long)]
        no_verify: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    /// Littlewood-Richardson tableaux of shape λ'/μ' and content ν.
    Lr,
    /// Marked pairs (T⁺, T⁻, Rpos).
    Marked,
    /// Semistandard T⁺ of shape (λ⁺)'/μ' and content (0|ν/λ⁻).
    Ssyt,
    /// Pictures from (λ⁺)'/μ' to ν/λ⁻.
    Pictures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    DetIdentities,
    Primitivity,
    LrSum,
    HookSchur,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Abstract,
    Expanded,
}

/// One weight `(μ|ν)` below a hook weight `λ`.
#[derive(Args, Debug, Clone)]
struct WeightArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// `λ⁺/λ⁻` such as `2,2/1,1`, or a full partition without `/`.
    #[arg(long)]
    lambda: String,
    #[arg(long, default_value = "")]
    mu: String,
    #[arg(long, default_value = "")]
    nu: String,
}

/// A single weight, a grid `(m, n, max-size)`, or a named preset.
#[derive(Args, Debug, Clone)]
struct TargetArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, default_value = "")]
    mu: String,
    #[arg(long, default_value = "")]
    nu: String,
    /// Largest `|λ|` of a grid sweep.
    #[arg(long)]
    max_size: Option<usize>,
    /// Named parameter grid: `acceptance` or `smoke`.
    #[arg(long)]
    seed_sweep: Option<String>,
}

/// A parameter grid `(m, n, largest |λ|)`.
type Grid = Vec<(usize, usize, usize)>;

/// The grids behind each `--seed-sweep` preset, per check.
struct Preset {
    det_identities: Vec<(usize, usize)>,
    primitivity: Grid,
    lr_sum: Grid,
    hook_schur: Grid,
}

fn preset(name: &str) -> Result<Preset, CliError> {
    match name {
        "acceptance" => Ok(Preset {
            det_identities: (1..=4).flat_map(|m| (1..=3).map(move |n| (m, n))).collect(),
            primitivity: vec![(2, 2, 5)],
            lr_sum: vec![(2, 2, 6), (2, 3, 6), (3, 2, 6)],
            hook_schur: vec![(2, 2, 5)],
        }),
        "smoke" => Ok(Preset {
            det_identities: vec![(2, 2)],
            primitivity: vec![(2, 2, 3)],
            lr_sum: vec![(2, 2, 3)],
            hook_schur: vec![(2, 2, 3)],
        }),
        other => Err(CliError::BadInput(format!(
            "unknown seed sweep {other:?}; expected acceptance or smoke"
        ))),
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::BadInput(format!("{s:?} is not a comma-separated list")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| CliError::BadInput(e.to_string()))
}

fn parse_lambda(s: &str, m: usize, n: usize) -> Result<HookSplit, CliError> {
    let split = match s.split_once('/') {
        Some((plus, minus)) => {
            HookSplit::new(m, n, parse_partition(plus)?, parse_partition(minus)?)
        }
        None => hook_split(&parse_partition(s)?, m, n),
    };
    split.map_err(|e| CliError::BadInput(e.to_string()))
}

/// A validated weight.
struct Weight {
    lambda: HookSplit,
    mu: Partition,
    nu: Partition,
}

impl Weight {
    fn parse(m: usize, n: usize, lambda: &str, mu: &str, nu: &str) -> Result<Self, CliError> {
        if m + n > 8 {
            return Err(CliError::BadInput(format!("m+n={} exceeds 8", m + n)));
        }
        let lambda = parse_lambda(lambda, m, n)?;
        let mu = parse_partition(mu)?;
        let nu = parse_partition(nu)?;
        if !lambda.lambda_plus.contains(&mu) {
            return Err(CliError::BadInput(format!(
                "μ={mu} is not contained in λ⁺={}",
                lambda.lambda_plus
            )));
        }
        if !nu.contains(&lambda.lambda_minus) {
            return Err(CliError::BadInput(format!(
                "ν={nu} does not contain λ⁻={}",
                lambda.lambda_minus
            )));
        }
        if nu.len() > n {
            return Err(CliError::BadInput(format!(
                "ν={nu} has more than {n} parts"
            )));
        }
        Ok(Weight { lambda, mu, nu })
    }

    fn from_args(a: &WeightArgs) -> Result<Self, CliError> {
        Self::parse(a.m, a.n, &a.lambda, &a.mu, &a.nu)
    }

    fn instance(&self) -> Instance {
        Instance {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            nu: self.nu.clone(),
        }
    }
}

/// What a verifying command runs over.
enum Target {
    Single(Weight),
    Grid(Grid),
    Preset(Preset),
}

impl TargetArgs {
    fn resolve(&self) -> Result<Target, CliError> {
        if let Some(name) = &self.seed_sweep {
            return Ok(Target::Preset(preset(name)?));
        }
        let (m, n) = match (self.m, self.n) {
            (Some(m), Some(n)) => (m, n),
            _ => {
                return Err(CliError::BadInput(
                    "--m and --n are required without --seed-sweep".into(),
                ))
            }
        };
        if let Some(lambda) = &self.lambda {
            return Ok(Target::Single(Weight::parse(
                m, n, lambda, &self.mu, &self.nu,
            )?));
        }
        match self.max_size {
            Some(max) => Ok(Target::Grid(vec![(m, n, max)])),
            None => Err(CliError::BadInput(
                "give --lambda, --max-size or --seed-sweep".into(),
            )),
        }
    }
}

/// A finished command: its JSON document and whether every check passed.
struct Report {
    json: Value,
    pass: bool,
}

impl Report {
    fn listing(items: Vec<Value>) -> Self {
        Report {
            json: json!({ "count": items.len(), "items": items }),
            pass: true,
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn cmd_enumerate(kind: EnumerateKind, w: &Weight) -> Result<Report, CliError> {
    let lambda = &w.lambda;
    let items: Vec<Value> = match kind {
        EnumerateKind::Marked => enumerate_marked(lambda, &w.mu, &w.nu)?
            .iter()
            .map(to_value)
            .collect(),
        EnumerateKind::Ssyt => {
            let shape = plus_shape(lambda, &w.mu).map_err(LrError::from)?;
            let mut content = vec![0usize; lambda.m];
            content.extend((1..=lambda.n).map(|j| w.nu.part(j) - lambda.minus(j)));
            enumerate_ssyt(&shape, &content)
                .iter()
                .map(to_value)
                .collect()
        }
        EnumerateKind::Lr => lr_tableaux(&conjugate(&lambda.lambda()), &conjugate(&w.mu), &w.nu)
            .iter()
            .map(to_value)
            .collect(),
        EnumerateKind::Pictures => {
            let domain = plus_shape(lambda, &w.mu).map_err(LrError::from)?;
            let image = SkewShape::new(w.nu.clone(), lambda.lambda_minus.clone())
                .map_err(|e| CliError::BadInput(e.to_string()))?;
            enumerate_pictures(&domain, &image)
                .iter()
                .map(to_value)
                .collect()
        }
    };
    Ok(Report::listing(items))
}

/// Every vector of one weight, built under `budget`.
fn build_all(
    w: &Weight,
    budget: &Budget,
    mode: Parallelism,
) -> Result<(usize, Vec<PrimitiveVector>), CliError> {
    let marked = enumerate_marked(&w.lambda, &w.mu, &w.nu)?;
    let built = par::map(&marked, mode, |p| {
        build_primitive_budgeted(&w.lambda, &p.t_plus, &p.rpos, budget)
    });
    let vectors = built.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok((marked.len(), vectors))
}

/// Builds and optionally checks the vectors of one weight.
fn weight_report(
    w: &Weight,
    check: bool,
    inject_perturbation: bool,
    budget: &Budget,
    mode: Parallelism,
) -> Result<Report, CliError> {
    let (marked, vectors) = build_all(w, budget, mode)?;
    let checked = par::map(&vectors, mode, |v| {
        if !check {
            return Ok(None);
        }
        let expr = if inject_perturbation {
            perturb(&v.expression)
        } else {
            v.expression.clone()
        };
        verify_even_primitive(&expr).map(Some)
    });
    let mut reports = Vec::new();
    let mut primitive = true;
    for (v, rep) in vectors.iter().zip(checked) {
        let rep = rep?;
        primitive &= rep.as_ref().is_none_or(|r| r.all_zero());
        reports.push(VectorReport::new(v, rep.as_ref()));
    }
    let r = rank(&vectors.iter().map(|v| &v.expression).collect::<Vec<_>>());
    if r < marked {
        return Err(PrimitiveError::RankDeficient {
            rank: r,
            expected: marked,
        }
        .into());
    }
    let (lr, _) = lr_sum_identity(&w.lambda, &w.mu, &w.nu);
    Ok(Report {
        json: json!({
            "lambda": w.lambda.to_string(),
            "mu": w.mu,
            "nu": w.nu,
            "marked": marked,
            "lr_coefficient": lr,
            "rank": r,
            "primitive": primitive,
            "vectors": reports,
        }),
        pass: primitive,
    })
}

/// Combines per-item reports into one verdict.
fn summary(check: &str, results: Vec<Report>) -> Report {
    let failed = results.iter().filter(|r| !r.pass).count();
    let pass = failed == 0;
    Report {
        json: json!({
            "check": check,
            "pass": pass,
            "checked": results.len(),
            "failed": failed,
            "results": results.into_iter().map(|r| r.json).collect::<Vec<_>>(),
        }),
        pass,
    }
}

fn grid_instances(grid: &Grid) -> Vec<Instance> {
    grid.iter()
        .flat_map(|&(m, n, max)| instances(m, n, max))
        .collect()
}

/// Largest `m` and `n` for which the fully localized checks run.
const EXPANDED_MAX: usize = 3;

fn verify_det_identities(
    cases: &[(usize, usize)],
    s: usize,
    u: usize,
    expanded: bool,
    mode: Parallelism,
) -> Result<Report, CliError> {
    let mut results = Vec::new();
    for &(m, n) in cases {
        let report = check_det_identities(
            m,
            n,
            IdentityParams {
                max_s: s,
                max_u: u,
                mode,
            },
        )?;
        let mut checks = report.checks;
        if expanded && m <= EXPANDED_MAX && n <= EXPANDED_MAX {
            checks.push(check_dminus_expanded(m, n)?);
            checks.extend(check_congruences(m, n)?);
        }
        let pass = checks.iter().all(|c| c.holds());
        results.push(Report {
            json: json!({
                "m": m,
                "n": n,
                "pass": pass,
                "instances": checks.iter().map(|c| c.checked).sum::<usize>(),
                "checks": checks,
            }),
            pass,
        });
    }
    Ok(summary("det-identities", results))
}

fn verify_primitivity(
    weights: Vec<Weight>,
    expanded: bool,
    inject: bool,
    mode: Parallelism,
) -> Result<Report, CliError> {
    let budget = Budget::from_env();
    let results = par::map(&weights, mode, |w| {
        weight_report(w, expanded, inject, &budget, Parallelism::Sequential)
    });
    let results = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(summary("primitivity", results))
}

fn lr_sum_report(inst: &Instance) -> Result<Report, CliError> {
    let (lhs, rhs) = lr_sum_identity(&inst.lambda, &inst.mu, &inst.nu);
    let marked = enumerate_marked(&inst.lambda, &inst.mu, &inst.nu)?.len();
    let domain = plus_shape(&inst.lambda, &inst.mu).map_err(LrError::from)?;
    let image = SkewShape::new(inst.nu.clone(), inst.lambda.lambda_minus.clone())
        .map_err(|e| CliError::BadInput(e.to_string()))?;
    let pictures = enumerate_pictures(&domain, &image).len();
    let pass = lhs == rhs && rhs as usize == marked && marked == pictures;
    Ok(Report {
        json: json!({
            "lambda": inst.lambda.to_string(),
            "mu": inst.mu,
            "nu": inst.nu,
            "typical": inst.lambda.is_typical(),
            "lr_coefficient": lhs,
            "kappa_sum": rhs,
            "marked": marked,
            "pictures": pictures,
            "pass": pass,
        }),
        pass,
    })
}

fn verify_lr_sum(insts: Vec<Instance>, mode: Parallelism) -> Result<Report, CliError> {
    let results = par::map(&insts, mode, lr_sum_report)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(summary("lr-sum", results))
}

fn hook_schur_report(lambda: &HookSplit) -> Result<Report, CliError> {
    let tableaux = hook_schur_tableaux(&lambda.lambda(), lambda.m, lambda.n)?;
    let formula = hook_schur(lambda)?;
    let lr = hook_schur_lr(lambda);
    let symmetric = tableaux.is_block_symmetric();
    let pass = tableaux == formula && formula == lr && symmetric;
    Ok(Report {
        json: json!({
            "lambda": lambda.to_string(),
            "terms": tableaux.len(),
            "routes_agree": tableaux == formula && formula == lr,
            "symmetric": symmetric,
            "pass": pass,
        }),
        pass,
    })
}

fn verify_hook_schur(hooks: Vec<HookSplit>, mode: Parallelism) -> Result<Report, CliError> {
    let results = par::map(&hooks, mode, hook_schur_report)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(summary("hook-schur", results))
}

fn hooks_of(grid: &Grid) -> Result<Vec<HookSplit>, CliError> {
    let mut out = Vec::new();
    for &(m, n, max) in grid {
        for size in 0..=max {
            for p in hook_partitions(size, m, n) {
                out.push(hook_split(&p, m, n).map_err(|e| CliError::BadInput(e.to_string()))?);
            }
        }
    }
    Ok(out)
}

fn weights_of(grid: &Grid) -> Vec<Weight> {
    grid_instances(grid)
        .into_iter()
        .map(|i| Weight {
            lambda: i.lambda,
            mu: i.mu,
            nu: i.nu,
        })
        .collect()
}

fn cmd_verify(
    check: VerifyKind,
    target: &TargetArgs,
    s: usize,
    u: usize,
    mode: Mode,
    inject: bool,
    par_mode: Parallelism,
) -> Result<Report, CliError> {
    let expanded = mode == Mode::Expanded;
    if inject && check != VerifyKind::Primitivity {
        return Err(CliError::BadInput(
            "--inject-perturbation applies to primitivity only".into(),
        ));
    }
    if check == VerifyKind::DetIdentities {
        let cases = match (&target.seed_sweep, target.m) {
            (Some(name), _) => preset(name)?.det_identities,
            (None, Some(m)) => vec![(m, target.n.unwrap_or(2))],
            (None, None) => {
                return Err(CliError::BadInput(
                    "--m is required without --seed-sweep".into(),
                ))
            }
        };
        return verify_det_identities(&cases, s, u, expanded, par_mode);
    }
    let resolved = target.resolve()?;
    match check {
        VerifyKind::DetIdentities => unreachable!("handled above"),
        VerifyKind::Primitivity => {
            let weights = match resolved {
                Target::Single(w) => vec![w],
                Target::Grid(g) => weights_of(&g),
                Target::Preset(p) => weights_of(&p.primitivity),
            };
            verify_primitivity(weights, expanded || inject, inject, par_mode)
        }
        VerifyKind::LrSum => {
            let insts = match resolved {
                Target::Single(w) => vec![w.instance()],
                Target::Grid(g) => grid_instances(&g),
                Target::Preset(p) => grid_instances(&p.lr_sum),
            };
            verify_lr_sum(insts, par_mode)
        }
        VerifyKind::HookSchur => {
            let hooks = match resolved {
                Target::Single(w) => vec![w.lambda],
                Target::Grid(g) => hooks_of(&g)?,
                Target::Preset(p) => hooks_of(&p.hook_schur)?,
            };
            verify_hook_schur(hooks, par_mode)
        }
    }
}

fn cmd_sweep(target: &TargetArgs, verify: bool, mode: Parallelism) -> Result<Report, CliError> {
    let insts = match target.resolve()? {
        Target::Single(w) => vec![w.instance()],
        Target::Grid(g) => grid_instances(&g),
        Target::Preset(p) => grid_instances(&p.primitivity),
    };
    let outcomes = par::map(&insts, mode, |i| run_instance(i, verify));
    let failed = outcomes.iter().filter(|o| !o.passes()).count();
    let claim = outcomes.iter().find(|o| !o.errors.is_empty());
    if let Some(o) = claim {
        return Err(CliError::Claim(format!(
            "{}: {}",
            o.instance,
            o.errors.join("; ")
        )));
    }
    Ok(Report {
        json: json!({
            "check": "sweep",
            "pass": failed == 0,
            "checked": outcomes.len(),
            "failed": failed,
            "results": outcomes,
        }),
        pass: failed == 0,
    })
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let mode = if cli.jobs == 1 || !Parallelism::available() {
        Parallelism::Sequential
    } else {
        Parallelism::Parallel
    };
    match &cli.command {
        Command::Enumerate { kind, weight } => cmd_enumerate(*kind, &Weight::from_args(weight)?),
        Command::Construct { weight, mode: m } => weight_report(
            &Weight::from_args(weight)?,
            *m == Mode::Expanded,
            false,
            &Budget::from_env(),
            mode,
        ),
        Command::Verify {
            check,
            target,
            s,
            u,
            mode: m,
            inject_perturbation,
        } => cmd_verify(*check, target, *s, *u, *m, *inject_perturbation, mode),
        Command::Sweep { target, no_verify } => cmd_sweep(target, !no_verify, mode),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
    text.push('\n');
    if let Some(path) = &cli.json_out {
        std::fs::write(path, &text)?;
    }
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = par::with_threads(cli.jobs, || run(&cli));
    match result.and_then(|report| emit(&cli, &report).map(|_| report.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("superschur: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
