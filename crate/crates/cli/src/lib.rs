//! Command implementations behind the `frontal-helicoid` binary.
//!
//! Every command prints one JSON document with sorted keys. Exit codes:
//! 0 success, 1 usage/parse/IO error, 2 curve validation failure, 3 a
//! command needing `δ = 1` got a curve with `δ = -1`, 4 the fast and oracle
//! classifications disagree.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use frontal_helicoid::expr::parse;
use frontal_helicoid::helicoid::{HelicoidError, HelicoidalSurface, SurfaceKind};
use frontal_helicoid::legendre::{LegendreCurve, LegendreError, DEFAULT_SAMPLES};
use frontal_helicoid::meshio::{self, MeshError};
use frontal_helicoid::singularity::{
    classify_cuspidal_edge, det_identity_check, find_singular_points, table_oracle_check, SingularityError,
    SingularityReport,
};
use frontal_helicoid::ToleranceSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "frontal-helicoid/1";
pub const TOL_ENV: &str = "FRONTAL_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DELTA: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "frontal-helicoid",
    version,
    about = "Helicoidal surfaces of non-lightlike Legendre curves in Minkowski 3-space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check Δ-membership and the Legendre condition on a sample grid.
    Validate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Find singular parameters and classify the cuspidal edge at each.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Grid points for the singular-point sweep.
        #[arg(long, default_value_t = 1025)]
        grid: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the surface into an OBJ mesh plus a `.causal.csv` sidecar.
    ///
    /// The v-range defaults to [-π, π] for type 1 and [-2, 2] for type 2;
    /// the u-range defaults to the curve domain.
    Mesh {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        nv: usize,
        #[arg(long, allow_negative_numbers = true)]
        umin: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        umax: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        vmin: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        vmax: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample the singular locus through `u0`; `.obj` paths get OBJ, any
    /// other path gets CSV with columns u,v,x,y,z,type.
    ///
    /// The v-range defaults to [-π, π] for type 1 and [-2, 2] for type 2.
    Locus {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        u0: f64,
        #[arg(long, default_value_t = 101)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        vmin: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        vmax: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the twelve basic invariants and frame residuals at (u, v).
    /// Needs a curve with δ = 1.
    Invariants {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        v: f64,
    },
    /// Check the determinant identity and the coefficient tables against
    /// the jet oracle at random parameters.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest relative residual accepted.
        #[arg(long, default_value_t = 1e-8)]
        max_residual: f64,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Curve spec (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Zero-test tolerance as `ABS` or `ABS,REL`; overrides FRONTAL_TOL.
    #[arg(long)]
    pub tol: Option<String>,
}

/// A curve spec file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub name: String,
    pub x1: String,
    pub x2: String,
    pub a: String,
    pub b: String,
    pub domain: [f64; 2],
    pub lambda: f64,
    pub kind: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn legendre_code(e: &LegendreError) -> i32 {
    match e {
        LegendreError::Invalid(_) => EXIT_INVALID,
        _ => EXIT_USAGE,
    }
}

fn helicoid_code(e: &HelicoidError) -> i32 {
    match e {
        HelicoidError::DeltaNotOne { .. } => EXIT_DELTA,
        HelicoidError::Curve(c) => legendre_code(c),
        _ => EXIT_USAGE,
    }
}

impl From<LegendreError> for Failure {
    fn from(e: LegendreError) -> Self {
        Failure {
            code: legendre_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<HelicoidError> for Failure {
    fn from(e: HelicoidError) -> Self {
        let message = match e {
            HelicoidError::DeltaNotOne { delta } => format!(
                "lightcone frames and basic invariants are defined under the hypothesis δ = 1 \
                 (ν timelike, a² - b² = 1); this curve has δ = {delta}"
            ),
            ref other => other.to_string(),
        };
        Failure {
            code: helicoid_code(&e),
            message,
        }
    }
}

impl From<SingularityError> for Failure {
    fn from(e: SingularityError) -> Self {
        match e {
            SingularityError::Surface(h) => h.into(),
            other => Failure::usage(other),
        }
    }
}

impl From<MeshError> for Failure {
    fn from(e: MeshError) -> Self {
        match e {
            MeshError::Eval { source, u, v } => {
                let inner = Failure::from(source);
                Failure {
                    code: inner.code,
                    message: format!("at (u, v) = ({u}, {v}): {}", inner.message),
                }
            }
            MeshError::Singularity(s) => s.into(),
            other => Failure::usage(other),
        }
    }
}

/// Parses `ABS` or `ABS,REL`.
pub fn parse_tolerance(s: &str) -> Result<ToleranceSpec, String> {
    let parse_one = |t: &str| -> Result<f64, String> {
        match t.trim().parse::<f64>() {
            Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
            _ => Err(format!(
                "bad tolerance `{s}`: expected ABS or ABS,REL with nonnegative numbers"
            )),
        }
    };
    let default = ToleranceSpec::default();
    match s.split_once(',') {
        Some((abs, rel)) => Ok(ToleranceSpec::new(parse_one(abs)?, parse_one(rel)?)),
        None => Ok(default.with_abs(parse_one(s)?)),
    }
}

fn resolve_tolerance(flag: Option<&str>) -> Result<ToleranceSpec, Failure> {
    let env = std::env::var(TOL_ENV).ok();
    match flag.or(env.as_deref()) {
        Some(s) => parse_tolerance(s).map_err(Failure::usage),
        None => Ok(ToleranceSpec::default()),
    }
}

pub fn read_spec(path: &Path) -> Result<CurveSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let spec: CurveSpec =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if !(spec.lambda.is_finite() && spec.lambda != 0.0) {
        return Err(Failure::usage(format!(
            "{}: lambda must be nonzero, got {}",
            path.display(),
            spec.lambda
        )));
    }
    if SurfaceKind::from_number(spec.kind).is_none() {
        return Err(Failure::usage(format!(
            "{}: kind must be 1 or 2, got {}",
            path.display(),
            spec.kind
        )));
    }
    Ok(spec)
}

fn unchecked_curve(spec: &CurveSpec) -> Result<LegendreCurve, Failure> {
    let p = |component: &'static str, src: &str| {
        parse(src).map_err(|source| Failure::from(LegendreError::Parse { component, source }))
    };
    Ok(LegendreCurve::new_unchecked(
        p("x1", &spec.x1)?,
        p("x2", &spec.x2)?,
        p("a", &spec.a)?,
        p("b", &spec.b)?,
        spec.domain,
        1,
    )?)
}

pub fn build_surface(spec: &CurveSpec, tol: &ToleranceSpec) -> Result<HelicoidalSurface, Failure> {
    let curve = LegendreCurve::parse(&spec.x1, &spec.x2, &spec.a, &spec.b, spec.domain, tol)?;
    let kind = SurfaceKind::from_number(spec.kind).ok_or_else(|| Failure::usage("kind must be 1 or 2"))?;
    Ok(HelicoidalSurface::new(curve, spec.lambda, kind)?)
}

fn header(command: &str, spec: &CurveSpec, tol: &ToleranceSpec) -> Value {
    json!({
        "schema": SCHEMA,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "curve": spec.name,
        "kind": spec.kind,
        "lambda": spec.lambda,
        "tolerance": { "abs": tol.abs, "rel": tol.rel },
    })
}

fn extend(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn default_v_range(kind: SurfaceKind) -> [f64; 2] {
    match kind {
        SurfaceKind::Type1 => [-std::f64::consts::PI, std::f64::consts::PI],
        SurfaceKind::Type2 => [-2.0, 2.0],
    }
}

fn report_json(r: &SingularityReport) -> Value {
    json!({
        "u0": r.u0,
        "reasons": r.reasons,
        "scope": r.scope,
        "conditions": r.conditions,
        "type": r.cusp_type().edge_label(),
        "classification_fast": r.classification_fast.edge_label(),
        "classification_oracle": r.classification_oracle.edge_label(),
        "agree": r.agree,
        "exclusion_respected": r.exclusion_respected,
        "verified": r.verified,
        "oracle_derivatives": r.oracle_derivatives,
    })
}

/// Result of a command: the JSON document and the exit code.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

pub fn validate(spec: &CurveSpec, samples: usize, tol: &ToleranceSpec) -> Result<Outcome, Failure> {
    let curve = unchecked_curve(spec)?;
    let report = curve.validate(samples, tol)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_INVALID };
    let body = json!({
        "passed": report.passed(),
        "delta": report.delta,
        "report": report,
    });
    Ok(Outcome {
        report: extend(header("validate", spec, tol), body),
        code,
    })
}

pub fn classify(spec: &CurveSpec, grid: usize, tol: &ToleranceSpec) -> Result<Outcome, Failure> {
    let s = build_surface(spec, tol)?;
    let sweep = find_singular_points(&s, grid, tol)?;
    let reports = sweep
        .points
        .iter()
        .map(|p| classify_cuspidal_edge(&s, p.u0, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let all_verified = reports.iter().all(|r| r.verified);
    let body = json!({
        "delta": s.curve().delta(),
        "grid": grid,
        "singular_points": reports.iter().map(report_json).collect::<Vec<_>>(),
        "suspected_tangent_roots": sweep.suspects,
        "all_verified": all_verified,
    });
    Ok(Outcome {
        report: extend(header("classify", spec, tol), body),
        code: if all_verified { EXIT_OK } else { EXIT_DISAGREE },
    })
}

pub struct MeshArgs {
    pub nu: usize,
    pub nv: usize,
    pub u_range: Option<[f64; 2]>,
    pub v_range: Option<[f64; 2]>,
}

fn range(min: Option<f64>, max: Option<f64>, default: [f64; 2]) -> [f64; 2] {
    [min.unwrap_or(default[0]), max.unwrap_or(default[1])]
}

pub fn mesh(spec: &CurveSpec, args: &MeshArgs, out: &Path, tol: &ToleranceSpec) -> Result<Outcome, Failure> {
    let s = build_surface(spec, tol)?;
    let u_range = args.u_range.unwrap_or(s.curve().domain());
    let v_range = args.v_range.unwrap_or(default_v_range(s.kind()));
    let m = meshio::sample_mesh(&s, u_range, v_range, args.nu, args.nv, tol)?;
    let sidecar = out.with_extension("causal.csv");
    meshio::export_obj(&m, out)?;
    meshio::export_causal_csv(&m, &sidecar)?;
    let body = json!({
        "u_range": u_range,
        "v_range": v_range,
        "nu": m.nu,
        "nv": m.nv,
        "vertices": m.vertices.len(),
        "faces": m.faces.len(),
        "obj": out.display().to_string(),
        "causal_csv": sidecar.display().to_string(),
    });
    Ok(Outcome {
        report: extend(header("mesh", spec, tol), body),
        code: EXIT_OK,
    })
}

pub fn locus(
    spec: &CurveSpec,
    u0: f64,
    n: usize,
    v_range: Option<[f64; 2]>,
    out: &Path,
    tol: &ToleranceSpec,
) -> Result<Outcome, Failure> {
    let s = build_surface(spec, tol)?;
    let v_range = v_range.unwrap_or(default_v_range(s.kind()));
    let l = meshio::singular_locus(&s, u0, v_range, n, tol)?;
    let is_obj = out.extension().is_some_and(|e| e.eq_ignore_ascii_case("obj"));
    if is_obj {
        meshio::export_locus_obj(&l, out)?;
    } else {
        meshio::export_locus_csv(&l, out)?;
    }
    let body = json!({
        "u0": u0,
        "v_range": v_range,
        "samples": l.points.len(),
        "type": l.cusp_type.edge_label(),
        "format": if is_obj { "obj" } else { "csv" },
        "path": out.display().to_string(),
    });
    Ok(Outcome {
        report: extend(header("locus", spec, tol), body),
        code: EXIT_OK,
    })
}

pub fn invariants(spec: &CurveSpec, u: f64, v: f64, tol: &ToleranceSpec) -> Result<Outcome, Failure> {
    let s = build_surface(spec, tol)?;
    s.curve().check_domain(u)?;
    let inv = s.basic_invariants(u, v)?;
    let closed = s.basic_invariants_closed_form(u)?;
    let residuals = s.frame_residuals(u, v)?;
    let wedge = s.wedge_decomposition(u, v)?;
    let frame = s.lightcone_frame(u, v)?;
    let named = |vals: [f64; 12]| {
        serde_json::Map::from_iter(
            frontal_helicoid::helicoid::BasicInvariants::NAMES
                .iter()
                .zip(vals)
                .map(|(k, x)| (k.to_string(), json!(x))),
        )
    };
    let body = json!({
        "u": u,
        "v": v,
        "delta": s.curve().delta(),
        "invariants": named(inv.to_array()),
        "invariants_closed_form": named(closed.to_array()),
        "max_invariant_difference": inv.max_abs_difference(&closed),
        "frame": frame,
        "frame_identity_residuals": frame.identity_residuals(),
        "frame_residuals": residuals,
        "wedge": wedge,
    });
    Ok(Outcome {
        report: extend(header("invariants", spec, tol), body),
        code: EXIT_OK,
    })
}

pub fn verify(
    spec: &CurveSpec,
    points: usize,
    seed: u64,
    max_residual: f64,
    tol: &ToleranceSpec,
) -> Result<Outcome, Failure> {
    let s = build_surface(spec, tol)?;
    let [min, max] = s.curve().domain();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut det_max: f64 = 0.0;
    let mut table_max: f64 = 0.0;
    for _ in 0..points {
        let u0 = rng.random_range(min..=max);
        det_max = det_max.max(det_identity_check(&s, u0, tol)?);
        table_max = table_max.max(table_oracle_check(&s, u0, tol)?);
    }
    let passed = det_max < max_residual && table_max < max_residual;
    let body = json!({
        "points": points,
        "seed": seed,
        "max_residual_allowed": max_residual,
        "det_identity_max": det_max,
        "table_oracle_max": table_max,
        "passed": passed,
    });
    Ok(Outcome {
        report: extend(header("verify", spec, tol), body),
        code: if passed { EXIT_OK } else { EXIT_DISAGREE },
    })
}

fn dispatch(cli: Cli) -> Result<(Outcome, Option<PathBuf>), Failure> {
    let setup = |c: &Common| -> Result<(CurveSpec, ToleranceSpec), Failure> {
        Ok((read_spec(&c.input)?, resolve_tolerance(c.tol.as_deref())?))
    };
    Ok(match cli.command {
        Command::Validate { common, samples } => {
            let (spec, tol) = setup(&common)?;
            (validate(&spec, samples, &tol)?, None)
        }
        Command::Classify { common, grid, out } => {
            let (spec, tol) = setup(&common)?;
            (classify(&spec, grid, &tol)?, out)
        }
        Command::Mesh {
            common,
            nu,
            nv,
            umin,
            umax,
            vmin,
            vmax,
            out,
        } => {
            let (spec, tol) = setup(&common)?;
            let kind = SurfaceKind::from_number(spec.kind).unwrap_or(SurfaceKind::Type1);
            let args = MeshArgs {
                nu,
                nv,
                u_range: (umin.is_some() || umax.is_some()).then(|| range(umin, umax, spec.domain)),
                v_range: Some(range(vmin, vmax, default_v_range(kind))),
            };
            (mesh(&spec, &args, &out, &tol)?, None)
        }
        Command::Locus {
            common,
            u0,
            n,
            vmin,
            vmax,
            out,
        } => {
            let (spec, tol) = setup(&common)?;
            let kind = SurfaceKind::from_number(spec.kind).unwrap_or(SurfaceKind::Type1);
            (
                locus(&spec, u0, n, Some(range(vmin, vmax, default_v_range(kind))), &out, &tol)?,
                None,
            )
        }
        Command::Invariants { common, u, v } => {
            let (spec, tol) = setup(&common)?;
            (invariants(&spec, u, v, &tol)?, None)
        }
        Command::Verify {
            common,
            points,
            seed,
            max_residual,
        } => {
            let (spec, tol) = setup(&common)?;
            (verify(&spec, points, seed, max_residual, &tol)?, None)
        }
    })
}

/// Serialized report text; keys come out sorted.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli) {
        Ok((outcome, out)) => {
            let text = render(&outcome.report);
            match out {
                Some(path) => {
                    if let Err(e) = meshio::write_atomic(&path, &text) {
                        let _ = writeln!(stderr, "error: {e}");
                        return EXIT_USAGE;
                    }
                }
                None => {
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_strings() {
        assert_eq!(parse_tolerance("1e-10").unwrap(), ToleranceSpec::new(1e-10, 1e-9));
        assert_eq!(parse_tolerance("1e-10, 1e-6").unwrap(), ToleranceSpec::new(1e-10, 1e-6));
        assert!(parse_tolerance("-1").is_err());
        assert!(parse_tolerance("x").is_err());
    }

    #[test]
    fn default_ranges() {
        assert_eq!(default_v_range(SurfaceKind::Type2), [-2.0, 2.0]);
        assert_eq!(default_v_range(SurfaceKind::Type1)[1], std::f64::consts::PI);
    }
}
