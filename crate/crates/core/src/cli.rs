//! Command-line front end.
//!
//! Exit codes: `0` on success, `1` for malformed input or arguments, `2` when
//! the mathematics refuses the input, for instance a non-regular
//! representation or a failing property suite.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::checks::{run_suite, CheckReport, Suite};
use crate::complex::{BasedChainComplex, ComplexJson};
use crate::error::{Error, Result};
use crate::format::sig;
use crate::fox::alexander_polynomial;
use crate::knot::{
    abelian_torsion_report, linear_grid, nonabelian_torsion_report, scan_csv, scan_torus_with, torus_rep, ScanRow,
    TorsionOptions, TorsionReport,
};
use crate::presentation::{parse_presentation, parse_presentation_json, torus_knot_presentation, GroupPresentation, Representation};
use crate::su2::UnitQuaternion;
use crate::tolerance::Tolerances;

const DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// A complete torsion or Alexander job, as read from `--job FILE`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub presentation: PresentationSource,
    #[serde(default)]
    pub representation: Option<RepresentationSpec>,
    #[serde(default)]
    pub tolerances: JobTolerances,
    #[serde(default)]
    pub format: Option<OutputFormat>,
    #[serde(default)]
    pub flip_axis: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationSource {
    /// DSL text.
    Dsl(String),
    /// DSL or JSON file; relative paths resolve against the job file.
    File(PathBuf),
    /// Built-in presentation of the `(2, q)` torus knot.
    Torus(i64),
    /// Inline JSON presentation.
    Json(Value),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepresentationSpec {
    /// Quaternions `[w, x, y, z]`, one per generator.
    Images(Vec<UnitQuaternion>),
    /// `ρ_{ℓ,t}` on the torus knot `q`: `[q, ℓ, t]`.
    Torus((i64, i64, f64)),
    /// The abelian representation at angle `θ`.
    AbelianTheta(f64),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobTolerances {
    #[serde(default)]
    pub rank: Option<f64>,
    #[serde(default)]
    pub representation: Option<f64>,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "torsionlab", version, about = "Adjoint-twisted Reidemeister torsion of knot exteriors")]
struct Cli {
    /// Relative singular-value cutoff for rank decisions (overrides TORSIONLAB_RANK_TOL).
    #[arg(long, global = true, value_name = "TOL")]
    rank_tol: Option<f64>,

    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Torsion at one representation (non-abelian, or abelian with --abelian-theta).
    Torsion(TorsionArgs),
    /// Normalized Alexander polynomial.
    Alexander(SourceArgs),
    /// Torsion along the torus-knot path t -> rho_{l,t}.
    Scan(ScanArgs),
    /// Seeded randomized property suites.
    Check(CheckArgs),
    /// Sign-determined torsion of a based complex given as JSON.
    TorsionRaw(RawArgs),
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Built-in torus knot: `q`, or `q,l,t` to also select rho_{l,t}.
    #[arg(long, value_name = "Q[,L,T]")]
    torus: Option<String>,
    /// Presentation file, DSL or JSON.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Inline presentation DSL; `|` may separate lines.
    #[arg(long, value_name = "TEXT")]
    dsl: Option<String>,
    /// JSON job file.
    #[arg(long, value_name = "PATH")]
    job: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TorsionArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Use the abelian representation at this angle in (0, pi).
    #[arg(long, value_name = "THETA", allow_negative_numbers = true)]
    abelian_theta: Option<f64>,
    /// Representation as JSON text or a JSON file.
    #[arg(long, value_name = "JSON|PATH")]
    rep: Option<String>,
    /// Normalize h2 against the reversed meridian axis.
    #[arg(long)]
    flip_axis: bool,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Torus knot and representation family: `q,l`.
    #[arg(long, value_name = "Q,L")]
    torus: String,
    /// Grid `a:b:n` of n points with endpoints in (0, 1).
    #[arg(long, value_name = "A:B:N", default_value = "0.1:0.9:9")]
    grid: String,
    /// Central-difference step for d theta_m / dt.
    #[arg(long, value_name = "H", default_value_t = 1e-5)]
    fd_step: f64,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Suite name, or `all`.
    suite: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct RawArgs {
    /// Complex JSON file, or `-` for standard input.
    input: PathBuf,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => CliOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: if e.is_domain_error() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let mut tol = Tolerances::from_env();
    if let Some(r) = cli.rank_tol {
        tol = tol.with_rank(positive(r, "--rank-tol")?);
    }
    match &cli.command {
        Command::Torsion(a) => {
            let job = torsion_job(a)?;
            let format = cli.format.or(job.format).unwrap_or(OutputFormat::Text);
            Ok((0, cmd_torsion(&job, apply(tol, &job.tolerances)?, format)?))
        }
        Command::Alexander(a) => {
            let job = source_job(a)?;
            let format = cli.format.or(job.format).unwrap_or(OutputFormat::Text);
            Ok((0, cmd_alexander(&job, format)?))
        }
        Command::Scan(a) => Ok((0, cmd_scan(a, tol, cli.format.unwrap_or(OutputFormat::Csv))?)),
        Command::Check(a) => cmd_check(a, cli.format.unwrap_or(OutputFormat::Text)),
        Command::TorsionRaw(a) => Ok((0, cmd_torsion_raw(&a.input, tol, cli.format.unwrap_or(OutputFormat::Text))?)),
    }
}

fn positive(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::InvalidParameter(format!("{what} must be positive, got {x}")))
    }
}

fn apply(mut tol: Tolerances, job: &JobTolerances) -> Result<Tolerances> {
    if let Some(r) = job.rank {
        tol.rank = positive(r, "tolerances.rank")?;
    }
    if let Some(r) = job.representation {
        tol.representation = positive(r, "tolerances.representation")?;
    }
    Ok(tol)
}

// ---------------------------------------------------------------------------
// Jobs from flags

fn parse_list(text: &str, sep: char) -> Vec<&str> {
    text.split(sep).map(str::trim).collect()
}

fn parse_num<T: std::str::FromStr>(text: &str, what: &str) -> Result<T> {
    text.parse()
        .map_err(|_| Error::InvalidParameter(format!("cannot read {what} from `{text}`")))
}

/// `q` or `q,l,t`.
fn parse_torus_flag(text: &str) -> Result<(i64, Option<(i64, f64)>)> {
    match parse_list(text, ',')[..] {
        [q] => Ok((parse_num(q, "q")?, None)),
        [q, l, t] => Ok((parse_num(q, "q")?, Some((parse_num(l, "l")?, parse_num(t, "t")?)))),
        _ => Err(Error::InvalidParameter(format!("--torus expects `q` or `q,l,t`, got `{text}`"))),
    }
}

fn source_job(a: &SourceArgs) -> Result<JobSpec> {
    let given = [a.torus.is_some(), a.file.is_some(), a.dsl.is_some(), a.job.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Error::InvalidParameter(
            "give exactly one of --torus, --file, --dsl, --job".into(),
        ));
    }
    if let Some(path) = &a.job {
        return read_job(path);
    }
    let (presentation, representation) = if let Some(t) = &a.torus {
        let (q, rep) = parse_torus_flag(t)?;
        (PresentationSource::Torus(q), rep.map(|(l, t)| RepresentationSpec::Torus((q, l, t))))
    } else if let Some(f) = &a.file {
        (PresentationSource::File(f.clone()), None)
    } else {
        let text = a.dsl.as_deref().unwrap_or_default().replace('|', "\n");
        (PresentationSource::Dsl(text), None)
    };
    Ok(JobSpec {
        presentation,
        representation,
        tolerances: JobTolerances::default(),
        format: None,
        flip_axis: false,
    })
}

fn torsion_job(a: &TorsionArgs) -> Result<JobSpec> {
    let mut job = source_job(&a.source)?;
    let mut extra = Vec::new();
    if let Some(theta) = a.abelian_theta {
        extra.push(RepresentationSpec::AbelianTheta(theta));
    }
    if let Some(r) = &a.rep {
        let text = if r.trim_start().starts_with('{') { r.clone() } else { read_file(Path::new(r))? };
        extra.push(serde_json::from_str(&text)?);
    }
    match (job.representation.is_some(), extra.len()) {
        (false, 1) => job.representation = extra.pop(),
        (true, 0) => {}
        (false, 0) => {
            return Err(Error::InvalidParameter(
                "torsion needs a representation (--torus q,l,t, --abelian-theta or --rep)".into(),
            ))
        }
        _ => return Err(Error::InvalidParameter("give exactly one representation".into())),
    }
    job.flip_axis |= a.flip_axis;
    Ok(job)
}

fn read_job(path: &Path) -> Result<JobSpec> {
    let mut job: JobSpec = serde_json::from_str(&read_file(path)?)?;
    if let PresentationSource::File(f) = &mut job.presentation {
        if f.is_relative() {
            if let Some(dir) = path.parent() {
                *f = dir.join(&*f);
            }
        }
    }
    Ok(job)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_presentation(src: &PresentationSource) -> Result<GroupPresentation> {
    match src {
        PresentationSource::Dsl(text) => parse_presentation(text),
        PresentationSource::File(path) => parse_presentation(&read_file(path)?),
        PresentationSource::Torus(q) => torus_knot_presentation(*q),
        PresentationSource::Json(v) => parse_presentation_json(&v.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Commands

fn num(x: f64) -> Value {
    let rounded: f64 = sig(x, DIGITS).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

/// Rounds every float in `v` to the output precision.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => *v = num(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn render_json(v: &Value) -> String {
    let mut v = v.clone();
    round_floats(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("values always serialize");
    s.push('\n');
    s
}

fn cmd_torsion(job: &JobSpec, tol: Tolerances, format: OutputFormat) -> Result<String> {
    let p = load_presentation(&job.presentation)?;
    let spec = job
        .representation
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("job has no representation".into()))?;
    let (kind, report) = match spec {
        RepresentationSpec::AbelianTheta(theta) => ("abelian", abelian_torsion_report(&p, *theta, tol)?),
        other => {
            let images = match other {
                RepresentationSpec::Images(images) => images.clone(),
                RepresentationSpec::Torus((q, l, t)) => {
                    if let PresentationSource::Torus(pq) = job.presentation {
                        if pq != *q {
                            return Err(Error::InvalidParameter(format!(
                                "representation is for q = {q}, presentation for q = {pq}"
                            )));
                        }
                    }
                    torus_rep(*q, *l, *t)?.images().to_vec()
                }
                RepresentationSpec::AbelianTheta(_) => unreachable!("handled above"),
            };
            let rho = Representation::with_tolerance(&p, images, tol.representation)?;
            let opts = TorsionOptions {
                tolerances: tol,
                flip_axis: job.flip_axis,
            };
            ("nonabelian", nonabelian_torsion_report(&p, &rho, &opts)?)
        }
    };
    Ok(render_torsion(kind, &report, format))
}

fn render_torsion(kind: &str, r: &TorsionReport, format: OutputFormat) -> String {
    let [b0, b1, b2] = r.cohomology_dims;
    let theta = r.theta_m.map(|t| sig(t, DIGITS)).unwrap_or_default();
    match format {
        OutputFormat::Json => render_json(&json!({
            "kind": kind,
            "value": num(r.value),
            "tau0": r.tau0,
            "sign_exponent": r.complex.sign_exponent,
            "cohomology_dims": r.cohomology_dims,
            "irreducible": r.irreducible,
            "regular": r.regular,
            "mu_regular": r.mu_regular,
            "theta_m": r.theta_m.map(num),
        })),
        OutputFormat::Csv => format!(
            "kind,value,tau0,b0,b1,b2,irreducible,regular,mu_regular,theta_m\n{kind},{},{},{b0},{b1},{b2},{},{},{},{theta}\n",
            sig(r.value, DIGITS),
            r.tau0,
            r.irreducible,
            r.regular,
            r.mu_regular
        ),
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "kind: {kind}");
            let _ = writeln!(s, "value: {}", sig(r.value, DIGITS));
            let _ = writeln!(s, "tau0: {}", r.tau0);
            let _ = writeln!(s, "sign_exponent: {}", r.complex.sign_exponent);
            let _ = writeln!(s, "cohomology_dims: {b0} {b1} {b2}");
            let _ = writeln!(s, "irreducible: {}", r.irreducible);
            let _ = writeln!(s, "regular: {}", r.regular);
            let _ = writeln!(s, "mu_regular: {}", r.mu_regular);
            if r.theta_m.is_some() {
                let _ = writeln!(s, "theta_m: {theta}");
            }
            s
        }
    }
}

fn cmd_alexander(job: &JobSpec, format: OutputFormat) -> Result<String> {
    let p = load_presentation(&job.presentation)?;
    let delta = alexander_polynomial(&p)?;
    Ok(match format {
        OutputFormat::Text => format!("{delta}\n"),
        OutputFormat::Json => render_json(&json!({
            "polynomial": delta.to_string(),
            "coefficients": delta.terms().map(|(k, c)| [k, c]).collect::<Vec<_>>(),
        })),
        OutputFormat::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            for (k, c) in delta.terms() {
                let _ = writeln!(s, "{k},{c}");
            }
            s
        }
    })
}

/// `a:b:n` with `0 < a, b < 1`.
fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let [a, b, n] = parse_list(text, ':')[..] else {
        return Err(Error::InvalidParameter(format!("--grid expects `a:b:n`, got `{text}`")));
    };
    let (a, b): (f64, f64) = (parse_num(a, "grid start")?, parse_num(b, "grid end")?);
    let n: usize = parse_num(n, "grid size")?;
    for x in [a, b] {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::InvalidParameter(format!("grid endpoint {x} must lie in (0, 1)")));
        }
    }
    if n == 0 {
        return Err(Error::InvalidParameter("grid needs at least one point".into()));
    }
    Ok(linear_grid(a, b, n))
}

fn cmd_scan(a: &ScanArgs, tol: Tolerances, format: OutputFormat) -> Result<String> {
    let (q, l) = match parse_list(&a.torus, ',')[..] {
        [q, l] => (parse_num(q, "q")?, parse_num(l, "l")?),
        _ => return Err(Error::InvalidParameter(format!("--torus expects `q,l`, got `{}`", a.torus))),
    };
    let grid = parse_grid(&a.grid)?;
    let opts = TorsionOptions {
        tolerances: tol,
        flip_axis: false,
    };
    let rows = scan_torus_with(q, l, &grid, a.fd_step, &opts)?;
    Ok(match format {
        OutputFormat::Csv | OutputFormat::Text => scan_csv(&rows),
        OutputFormat::Json => {
            let row = |r: &ScanRow| {
                json!({
                    "t": num(r.t), "theta_m": num(r.theta_m), "tor": num(r.tor),
                    "dtheta_dt": num(r.dtheta_dt), "tau_form": num(r.tau_form),
                    "closed_form": num(r.closed_form), "abs_err": num(r.abs_err),
                })
            };
            render_json(&json!({ "q": q, "l": l, "fd_step": num(a.fd_step), "rows": rows.iter().map(row).collect::<Vec<_>>() }))
        }
    })
}

fn cmd_check(a: &CheckArgs, format: OutputFormat) -> Result<(i32, String)> {
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let reports: Vec<CheckReport> = suites.into_iter().map(|s| run_suite(s, a.trials, a.seed)).collect();
    let code = if reports.iter().all(CheckReport::ok) { 0 } else { 2 };
    let out = match format {
        OutputFormat::Json => render_json(&serde_json::to_value(&reports)?),
        OutputFormat::Csv => {
            let mut s = String::from("suite,seed,trials,passed,max_error,tolerance\n");
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.suite,
                    r.seed,
                    r.trials,
                    r.passed,
                    sig(r.max_error, 3),
                    sig(r.tolerance, 3)
                );
            }
            s
        }
        OutputFormat::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok((code, out))
}

fn cmd_torsion_raw(input: &Path, tol: Tolerances, format: OutputFormat) -> Result<String> {
    let text = if input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        read_file(input)?
    };
    let json: ComplexJson = serde_json::from_str(&text)?;
    let c = BasedChainComplex::from_json(&json, tol)?;
    let r = c.sign_determined_torsion()?;
    let hdims = c.homology_dims();
    let join = |v: &[u8]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(" ");
    Ok(match format {
        OutputFormat::Json => render_json(&json!({
            "value": num(r.value),
            "unsigned": num(r.unsigned),
            "sign_exponent": r.sign_exponent,
            "alpha": r.alpha,
            "beta": r.beta,
            "homology_dims": hdims,
        })),
        OutputFormat::Csv => format!(
            "value,unsigned,sign_exponent\n{},{},{}\n",
            sig(r.value, DIGITS),
            sig(r.unsigned, DIGITS),
            r.sign_exponent
        ),
        OutputFormat::Text => {
            let dims: Vec<String> = hdims.iter().map(usize::to_string).collect();
            format!(
                "value: {}\nunsigned: {}\nsign_exponent: {}\nalpha: {}\nbeta: {}\nhomology_dims: {}\n",
                sig(r.value, DIGITS),
                sig(r.unsigned, DIGITS),
                r.sign_exponent,
                join(&r.alpha),
                join(&r.beta),
                dims.join(" ")
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CliOutput {
        run_from(std::iter::once("torsionlab").chain(args.iter().copied()))
    }

    #[test]
    fn trefoil_torus_torsion() {
        let out = run(&["torsion", "--torus", "3,1,0.4"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("value: -2\n"), "{}", out.stdout);
        assert!(out.stdout.contains("regular: true"));
    }

    #[test]
    fn invalid_torus_is_usage_error() {
        let out = run(&["torsion", "--torus", "2,1,0.5"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("invalid parameter"));
    }

    #[test]
    fn alexander_of_inline_dsl() {
        let out = run(&["alexander", "--dsl", "gens: a, b | rel: a*b*a*B*A*B"]);
        assert_eq!(out.stdout, "1 - t + t^2\n");
    }

    #[test]
    fn grid_endpoints_are_excluded() {
        assert_eq!(run(&["scan", "--torus", "5,1", "--grid", "0:1:3"]).code, 1);
        let out = run(&["scan", "--torus", "3,1", "--grid", "0.5:0.5:1"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("t,theta_m,tor,"));
    }

    #[test]
    fn abelian_branch_exit_codes() {
        let out = run(&["torsion", "--torus", "3", "--rep", r#"{"abelian_theta": 0.25}"#]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let out = run(&["torsion", "--torus", "3", "--abelian-theta", "0.5235987755982988"]);
        assert_eq!(out.code, 2, "{}", out.stdout);
    }

    #[test]
    fn job_spec_round_trip() {
        let job = JobSpec {
            presentation: PresentationSource::Torus(5),
            representation: Some(RepresentationSpec::Torus((5, 2, 0.3))),
            tolerances: JobTolerances::default(),
            format: Some(OutputFormat::Json),
            flip_axis: false,
        };
        let text = serde_json::to_string(&job).unwrap();
        assert_eq!(serde_json::from_str::<JobSpec>(&text).unwrap(), job);
        assert!(text.contains(r#""torus":[5,2,0.3]"#));
    }

    #[test]
    fn help_exits_zero() {
        let out = run(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("torsion-raw"));
        assert_eq!(run(&["frobnicate"]).code, 1);
    }
}
