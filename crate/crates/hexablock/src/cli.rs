//! Command-line front end. All logic lives here so it can be tested without
//! spawning processes; the binary only forwards `argv` to [`run`].
//!
//! JSON conventions: a complex number is `[re, im]` (a bare number is read as
//! a real value), a point is an array of complex numbers, a matrix is
//! `[[a11, a12], [a21, a22]]`, and a polynomial is either a coefficient array
//! (constant term first) or `{"degree": d, "coeffs": [...]}`.
//!
//! Exit codes: 0 interior (or success), 1 boundary, 2 exterior, 3 infeasible
//! Schwarz problem, 4 unsupported construction, 5 validation failed,
//! 64 malformed input or usage, 65 invalid data, 70 internal consistency fault.

use crate::automorphisms::{hexa_aut_apply, hexa_aut_compose, hexa_aut_invert, HexaAut};
use crate::domains_classic::{g2_classify, penta_classify, tetra_classify, Region, RegionVerdict};
use crate::hexablock::{hexa_classify, hmu_closure_member, hmu_member, hn_member, mu_value, spectral_radius, Membership, MuStructure};
use crate::inner_schwarz::{
    endpoint_residuals, hexa_inner_construct, hexa_inner_validate, schwarz_construct, schwarz_feasible, HexaInnerReport, RationalHexaInner,
    RationalTetraInner, SchwarzProblem, SchwarzReport,
};
use crate::numerics_core::{poly_reflect, BlaschkeProduct, Cx, HexError, HexaPoint, Mat2, Poly, TetraPoint, DEFAULT_TOL};
use crate::oracles::{mu_bruteforce, mu_bruteforce_diagonal, mu_bruteforce_scalar_plus_nilpotent, GridSpec};
use crate::sampling::{real_slice_csv, RealSample};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_INTERIOR: i32 = 0;
pub const EXIT_BOUNDARY: i32 = 1;
pub const EXIT_EXTERIOR: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;
pub const EXIT_INVALID: i32 = 5;
pub const EXIT_MALFORMED: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_FAULT: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "hexablock", version, about = "Membership, mu values, automorphisms, inner functions and Schwarz interpolation for the hexablock and its relatives")]
struct Cli {
    /// Print machine-readable JSON instead of the human-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Decision tolerance (echoed in every JSON response).
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Domain {
    G2,
    Tetra,
    Penta,
    Hexa,
    HexaMu,
    HexaN,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Structure {
    Tetra,
    Penta,
    Hexa,
    Spectral,
    Norm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a point: exit 0 interior, 1 boundary, 2 exterior.
    Classify {
        #[arg(long, value_enum)]
        domain: Domain,
        /// Point as a JSON array of complex numbers.
        #[arg(long)]
        point: String,
        /// Test membership in the closed domain (exit 0 inside, 2 outside).
        #[arg(long)]
        closed: bool,
    },
    /// Structured singular value of a 2×2 matrix.
    Mu {
        #[arg(long, value_enum)]
        structure: Structure,
        /// Matrix as `[[a11, a12], [a21, a22]]`.
        #[arg(long)]
        matrix: String,
        /// Also run the brute-force oracle and report the relative gap.
        #[arg(long)]
        oracle: bool,
    },
    /// Hexablock automorphisms `{"xi1","z1","xi2","z2","omega","flip"}`.
    Aut {
        #[command(subcommand)]
        action: AutAction,
    },
    /// Rational inner functions into the closed hexablock.
    Inner {
        #[command(subcommand)]
        action: InnerAction,
    },
    /// Two-point Schwarz interpolation `f(0) = 0`, `f(λ₀) = target`.
    Schwarz {
        #[command(subcommand)]
        action: SchwarzAction,
    },
    /// Deterministic CSV samples of the real hexablock. Columns:
    /// a,x1,x2,x3,region,faces,margin,k (faces separated by `|`).
    Sample {
        #[command(subcommand)]
        kind: SampleKind,
    },
}

#[derive(Subcommand, Debug)]
enum AutAction {
    /// Apply an automorphism to a point of the closed hexablock.
    Apply {
        #[arg(long)]
        aut: String,
        #[arg(long)]
        point: String,
    },
    /// Normal form of `first ∘ second`.
    Compose {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Normal form of the inverse.
    Invert {
        #[arg(long)]
        aut: String,
    },
}

#[derive(Args, Debug)]
struct TetraDataArgs {
    /// Polynomial E₁ (defaults to the degree-n reflection of E₂).
    #[arg(long)]
    e1: Option<String>,
    /// Polynomial E₂.
    #[arg(long)]
    e2: String,
    /// Polynomial D.
    #[arg(long)]
    d: String,
    /// Degree bound n.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum InnerAction {
    /// Build `(cB·A/D, E₁/D, E₂/D, D^{~n}/D)` from tetrablock data.
    Construct {
        #[command(flatten)]
        data: TetraDataArgs,
        /// Blaschke product `{"phase": c, "zeros": [...]}` (default λ).
        #[arg(long)]
        blaschke: Option<String>,
        /// Unimodular constant c (default 1).
        #[arg(long)]
        c: Option<String>,
    },
    /// Validate a function in the JSON format printed by `construct`.
    Validate {
        #[arg(long)]
        function: String,
    },
}

#[derive(Args, Debug)]
struct ProblemArgs {
    /// The interpolation node λ₀ (0 < |λ₀| < 1).
    #[arg(long)]
    lambda0: String,
    /// Target point (a, x1, x2, x3).
    #[arg(long)]
    target: String,
}

#[derive(Subcommand, Debug)]
enum SchwarzAction {
    /// Evaluate the feasibility inequalities (exit 0 feasible, 3 infeasible).
    Check {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Construct an interpolant and print its data and endpoint residuals.
    Solve {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Tetrablock-inner interpolant `{"e1","e2","d","n"}` to lift.
        #[arg(long)]
        supplied: Option<String>,
    },
}

#[derive(Args, Debug)]
struct SampleArgs {
    /// `csv` writes to standard output; any other value is a file path.
    #[arg(long, default_value = "csv")]
    out: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    count: usize,
}

#[derive(Subcommand, Debug)]
enum SampleKind {
    /// Uniform points of the box [−1.1, 1.1]⁴ with their region.
    RealSlice {
        #[command(flatten)]
        args: SampleArgs,
    },
    /// Points of the real boundary with their face labels.
    Boundary {
        #[command(flatten)]
        args: SampleArgs,
    },
}

/// Error carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<HexError> for Failure {
    fn from(e: HexError) -> Self {
        let code = match e {
            HexError::Parse(_) => EXIT_MALFORMED,
            HexError::SchwarzInfeasible { .. } => EXIT_INFEASIBLE,
            HexError::Unsupported(_) => EXIT_UNSUPPORTED,
            HexError::ConsistencyFault(_) => EXIT_FAULT,
            _ => EXIT_DATA,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult = Result<(Value, String, i32), Failure>;

/// Run the CLI on `args` (including the program name).
pub fn run(args: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text.trim_end().to_string(), stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: text.trim_end().to_string(), code: EXIT_MALFORMED },
            };
        }
    };
    let tol = cli.tol;
    if !(tol.is_finite() && tol >= 0.0) {
        return Outcome { stdout: String::new(), stderr: "error: --tol must be a nonnegative number".into(), code: EXIT_MALFORMED };
    }
    if let Command::Sample { kind } = cli.command {
        return sample(kind);
    }
    let result = match cli.command {
        Command::Classify { domain, point, closed } => classify(domain, &point, closed, tol),
        Command::Mu { structure, matrix, oracle } => mu(structure, &matrix, oracle, tol),
        Command::Aut { action } => aut(action, tol),
        Command::Inner { action } => inner(action, tol),
        Command::Schwarz { action } => schwarz(action, tol),
        Command::Sample { .. } => unreachable!("handled above"),
    };
    match result {
        Ok((mut value, human, code)) => {
            if let Value::Object(m) = &mut value {
                m.insert("tol".into(), json!(tol));
            }
            let stdout = if cli.json { value.to_string() } else { format!("{}tol: {tol:e}", human) };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(f) => {
            let stdout = if cli.json { json!({"error": f.message, "exit_code": f.code, "tol": tol}).to_string() } else { String::new() };
            Outcome { stdout, stderr: format!("error: {}", f.message), code: f.code }
        }
    }
}

// ---------------------------------------------------------------------------
// JSON helpers

fn malformed(what: &str, detail: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_MALFORMED, message: format!("malformed {what}: {detail}") }
}

fn parse_json(what: &str, text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| malformed(what, e))
}

fn cx_from(what: &str, v: &Value) -> Result<Cx, Failure> {
    let num = |x: &Value| x.as_f64().filter(|f| f.is_finite());
    match v {
        Value::Number(_) => num(v).map(|re| Cx::new(re, 0.0)).ok_or_else(|| malformed(what, "not a finite number")),
        Value::Array(a) if a.len() == 2 => match (num(&a[0]), num(&a[1])) {
            (Some(re), Some(im)) => Ok(Cx::new(re, im)),
            _ => Err(malformed(what, "complex numbers are [re, im] with finite parts")),
        },
        _ => Err(malformed(what, "expected a number or [re, im]")),
    }
}

fn cx_json(z: Cx) -> Value {
    json!([z.re, z.im])
}

fn fmt_cx(z: Cx) -> String {
    if z.im >= 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}{}i", z.re, z.im)
    }
}

fn parse_cx(what: &str, text: &str) -> Result<Cx, Failure> {
    cx_from(what, &parse_json(what, text)?)
}

fn cx_list(what: &str, v: &Value) -> Result<Vec<Cx>, Failure> {
    v.as_array().ok_or_else(|| malformed(what, "expected an array"))?.iter().map(|x| cx_from(what, x)).collect()
}

fn parse_point(what: &str, text: &str, len: usize) -> Result<Vec<Cx>, Failure> {
    let p = cx_list(what, &parse_json(what, text)?)?;
    if p.len() != len {
        return Err(malformed(what, format!("expected {len} coordinates, got {}", p.len())));
    }
    Ok(p)
}

fn hexa_point(what: &str, text: &str) -> Result<HexaPoint, Failure> {
    let p = parse_point(what, text, 4)?;
    Ok(HexaPoint::new(p[0], p[1], p[2], p[3]))
}

fn hexa_json(p: &HexaPoint) -> Value {
    Value::Array(p.coords().iter().map(|&z| cx_json(z)).collect())
}

fn parse_matrix(text: &str) -> Result<Mat2, Failure> {
    let v = parse_json("matrix", text)?;
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(|| malformed("matrix", "expected [[a11, a12], [a21, a22]]"))?;
    let mut e = Vec::new();
    for r in rows {
        let r = cx_list("matrix", r)?;
        if r.len() != 2 {
            return Err(malformed("matrix", "each row needs two entries"));
        }
        e.extend(r);
    }
    Ok(Mat2::new(e[0], e[1], e[2], e[3]))
}

fn poly_from(what: &str, v: &Value) -> Result<Poly, Failure> {
    match v {
        Value::Array(_) => Ok(Poly::new(cx_list(what, v)?)),
        Value::Object(m) => {
            let coeffs = m.get("coeffs").ok_or_else(|| malformed(what, "missing \"coeffs\""))?;
            let p = Poly::new(cx_list(what, coeffs)?);
            if let Some(d) = m.get("degree") {
                let declared = if d.is_null() { None } else { Some(d.as_u64().ok_or_else(|| malformed(what, "degree must be a nonnegative integer"))? as usize) };
                if declared != p.degree() {
                    return Err(malformed(what, format!("declared degree {declared:?} does not match the coefficients ({:?})", p.degree())));
                }
            }
            Ok(p)
        }
        _ => Err(malformed(what, "expected a coefficient array or {\"degree\", \"coeffs\"}")),
    }
}

fn poly_json(p: &Poly) -> Value {
    let t = p.trimmed();
    json!({"degree": t.degree(), "coeffs": t.coeffs.iter().map(|&c| cx_json(c)).collect::<Vec<_>>()})
}

fn fmt_poly(p: &Poly) -> String {
    let t = p.trimmed();
    if t.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = t
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() != 0.0)
        .map(|(k, c)| match k {
            0 => format!("({})", fmt_cx(*c)),
            1 => format!("({})λ", fmt_cx(*c)),
            _ => format!("({})λ^{k}", fmt_cx(*c)),
        })
        .collect();
    terms.join(" + ")
}

fn blaschke_from(what: &str, v: &Value) -> Result<BlaschkeProduct, Failure> {
    let m = v.as_object().ok_or_else(|| malformed(what, "expected {\"phase\", \"zeros\"}"))?;
    let phase = m.get("phase").map(|p| cx_from(what, p)).transpose()?.unwrap_or(Cx::new(1.0, 0.0));
    let zeros = m.get("zeros").map(|z| cx_list(what, z)).transpose()?.unwrap_or_default();
    Ok(BlaschkeProduct::new(phase, zeros)?)
}

fn blaschke_json(b: &BlaschkeProduct) -> Value {
    json!({"phase": cx_json(b.phase), "zeros": b.zeros.iter().map(|&z| cx_json(z)).collect::<Vec<_>>()})
}

fn field<'a>(what: &str, m: &'a Map<String, Value>, key: &str) -> Result<&'a Value, Failure> {
    m.get(key).ok_or_else(|| malformed(what, format!("missing \"{key}\"")))
}

fn tetra_data_from(what: &str, v: &Value) -> Result<RationalTetraInner, Failure> {
    let m = v.as_object().ok_or_else(|| malformed(what, "expected an object"))?;
    let n = field(what, m, "n")?.as_u64().ok_or_else(|| malformed(what, "n must be a nonnegative integer"))? as usize;
    let e2 = poly_from(what, field(what, m, "e2")?)?;
    let d = poly_from(what, field(what, m, "d")?)?;
    let e1 = match m.get("e1") {
        Some(e) => poly_from(what, e)?,
        None => poly_reflect(&e2, n)?,
    };
    Ok(RationalTetraInner::new(e1, e2, d, n))
}

fn tetra_data_json(t: &RationalTetraInner) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("e1".into(), poly_json(&t.e1));
    m.insert("e2".into(), poly_json(&t.e2));
    m.insert("d".into(), poly_json(&t.d));
    m.insert("n".into(), json!(t.n));
    m
}

fn hexa_function_json(f: &RationalHexaInner) -> Value {
    let mut m = tetra_data_json(&f.tetra);
    m.insert("a".into(), poly_json(&f.a_poly));
    m.insert("blaschke".into(), blaschke_json(&f.b));
    m.insert("c".into(), cx_json(f.c));
    m.insert("a_inner".into(), f.a_in.as_ref().map(blaschke_json).unwrap_or(Value::Null));
    Value::Object(m)
}

fn hexa_function_from(text: &str) -> Result<RationalHexaInner, Failure> {
    let what = "function";
    let v = parse_json(what, text)?;
    let tetra = tetra_data_from(what, &v)?;
    let m = v.as_object().ok_or_else(|| malformed(what, "expected an object"))?;
    let a_poly = poly_from(what, field(what, m, "a")?)?;
    let b = m.get("blaschke").map(|b| blaschke_from(what, b)).transpose()?.unwrap_or_else(BlaschkeProduct::one);
    let c = m.get("c").map(|c| cx_from(what, c)).transpose()?.unwrap_or(Cx::new(1.0, 0.0));
    let a_in = match m.get("a_inner") {
        None | Some(Value::Null) => None,
        Some(b) => Some(blaschke_from(what, b)?),
    };
    Ok(RationalHexaInner { tetra, a_poly, b, c, a_in })
}

fn fmt_function(out: &mut String, f: &RationalHexaInner) {
    let t = &f.tetra;
    let _ = writeln!(out, "n: {}", t.n);
    let _ = writeln!(out, "E1(λ) = {}", fmt_poly(&t.e1));
    let _ = writeln!(out, "E2(λ) = {}", fmt_poly(&t.e2));
    let _ = writeln!(out, "D(λ)  = {}", fmt_poly(&t.d));
    let _ = writeln!(out, "A(λ)  = {}", fmt_poly(&f.a_poly));
    match &f.a_in {
        Some(b) => {
            let _ = writeln!(out, "inner factor of a: phase {} zeros [{}]", fmt_cx(b.phase), b.zeros.iter().map(|z| fmt_cx(*z)).collect::<Vec<_>>().join(", "));
        }
        None => {
            let _ = writeln!(out, "c: {}", fmt_cx(f.c));
            let _ = writeln!(out, "B: phase {} zeros [{}]", fmt_cx(f.b.phase), f.b.zeros.iter().map(|z| fmt_cx(*z)).collect::<Vec<_>>().join(", "));
        }
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

// ---------------------------------------------------------------------------
// Subcommands

fn region_code(region: Region, closed: bool) -> i32 {
    match (region, closed) {
        (Region::ExteriorOfClosure, _) => EXIT_EXTERIOR,
        (_, true) | (Region::Interior, false) => EXIT_INTERIOR,
        _ => EXIT_BOUNDARY,
    }
}

fn verdict_value(domain: &str, v: &RegionVerdict) -> Value {
    json!({"domain": domain, "region": v.region.as_str(), "margins": to_value(&v.margins), "witnesses": v.witnesses.iter().map(|(k, z)| (k.clone(), cx_json(*z))).collect::<Map<_, _>>()})
}

fn verdict_human(domain: &str, v: &RegionVerdict) -> String {
    let mut s = format!("domain: {domain}\nregion: {}\n", v.region.as_str());
    for (k, m) in &v.margins {
        let _ = writeln!(s, "  margin {k}: {m:e}");
    }
    for (k, z) in &v.witnesses {
        let _ = writeln!(s, "  witness {k}: {}", fmt_cx(*z));
    }
    s
}

/// Region of a set given membership in its interior and closure.
fn region_of(interior: &Membership, closure: &Membership) -> Region {
    if interior.member {
        Region::Interior
    } else if closure.member {
        Region::Boundary
    } else {
        Region::ExteriorOfClosure
    }
}

fn classify(domain: Domain, point: &str, closed: bool, tol: f64) -> CliResult {
    match domain {
        Domain::G2 | Domain::Tetra | Domain::Penta => {
            let (name, len) = match domain {
                Domain::G2 => ("g2", 2),
                Domain::Tetra => ("tetra", 3),
                _ => ("penta", 3),
            };
            let p = parse_point("point", point, len)?;
            let v = match domain {
                Domain::G2 => g2_classify(p[0], p[1], tol)?,
                Domain::Tetra => tetra_classify(&TetraPoint::new(p[0], p[1], p[2]), tol)?,
                _ => penta_classify(p[0], p[1], p[2], tol)?,
            };
            let mut value = verdict_value(name, &v);
            value["closed"] = json!(closed);
            value["in_closure"] = json!(v.region.in_closure());
            Ok((value, verdict_human(name, &v), region_code(v.region, closed)))
        }
        Domain::Hexa => {
            let p = hexa_point("point", point)?;
            let v = hexa_classify(&p, tol)?;
            let region = if v.b_h.member {
                Region::DistinguishedBoundary
            } else {
                region_of(&v.h, &v.h_closure)
            };
            let mut value = to_value(&v);
            value["domain"] = json!("hexa");
            value["region"] = json!(region.as_str());
            value["closed"] = json!(closed);
            let mut human = format!("domain: hexa\nregion: {}\n", region.as_str());
            for (name, m) in [
                ("H", &v.h),
                ("closure of H", &v.h_closure),
                ("H_mu", &v.h_mu),
                ("interior of H_mu", &v.h_mu_interior),
                ("H_N", &v.h_n),
                ("closure of H_N", &v.h_n_closure),
                ("distinguished boundary", &v.b_h),
                ("H_p", &v.h_p),
            ] {
                let _ = writeln!(human, "  {name}: {} (margin {:e})", if m.member { "yes" } else { "no" }, m.margin);
            }
            if !v.boundary_parts.is_empty() {
                let _ = writeln!(human, "  boundary parts: {:?}", v.boundary_parts);
            }
            Ok((value, human, region_code(region, closed)))
        }
        Domain::HexaMu | Domain::HexaN => {
            let p = hexa_point("point", point)?;
            let nz = p.a.norm() > tol;
            let (name, set, closure) = if matches!(domain, Domain::HexaMu) {
                ("hexa-mu", hmu_member(&p, tol), hmu_closure_member(&p, tol))
            } else {
                ("hexa-n", hn_member(&p, false, tol), hn_member(&p, true, tol))
            };
            let interior = Membership { member: set.member && nz, margin: if nz { set.margin } else { -p.a.norm() } };
            let region = region_of(&interior, &closure);
            let value = json!({"domain": name, "region": region.as_str(), "closed": closed, "member": to_value(&set), "interior": to_value(&interior), "closure": to_value(&closure)});
            let human = format!(
                "domain: {name}\nregion: {}\n  member: {} (margin {:e})\n  closure: {} (margin {:e})\n",
                region.as_str(),
                set.member,
                set.margin,
                closure.member,
                closure.margin
            );
            Ok((value, human, region_code(region, closed)))
        }
    }
}

fn mu(structure: Structure, matrix: &str, oracle: bool, _tol: f64) -> CliResult {
    let a = parse_matrix(matrix)?;
    let spec = GridSpec { radial_points: 24, angular_points: 48, refinement_levels: 4, seed: 0 };
    let (name, value, reference) = match structure {
        Structure::Tetra => ("tetra", mu_value(&a, MuStructure::Tetra), oracle.then(|| mu_bruteforce_diagonal(&a, &spec))),
        Structure::Penta => ("penta", mu_value(&a, MuStructure::Penta), oracle.then(|| mu_bruteforce_scalar_plus_nilpotent(&a, &spec))),
        Structure::Hexa => ("hexa", mu_value(&a, MuStructure::Hexa), oracle.then(|| mu_bruteforce(&a, &spec))),
        Structure::Spectral => ("spectral", spectral_radius(&a), oracle.then(|| spectral_radius(&a))),
        Structure::Norm => ("norm", a.op_norm(), oracle.then(|| a.op_norm())),
    };
    let mut out = json!({"structure": name, "value": value});
    let mut human = format!("structure: {name}\nvalue: {value}\n");
    if let Some(r) = reference {
        let gap = (value - r).abs() / value.abs().max(r.abs()).max(1e-300);
        out["oracle"] = json!(r);
        out["relative_gap"] = json!(if value == r { 0.0 } else { gap });
        let _ = writeln!(human, "oracle: {r}\nrelative gap: {:e}", if value == r { 0.0 } else { gap });
    }
    Ok((out, human, 0))
}

fn parse_aut(what: &str, text: &str) -> Result<HexaAut, Failure> {
    let v = parse_json(what, text)?;
    let m = v.as_object().ok_or_else(|| malformed(what, "expected {\"xi1\",\"z1\",\"xi2\",\"z2\",\"omega\",\"flip\"}"))?;
    let get = |k: &str, default: Cx| -> Result<Cx, Failure> { m.get(k).map(|x| cx_from(what, x)).transpose().map(|o| o.unwrap_or(default)) };
    let (one, zero) = (Cx::new(1.0, 0.0), Cx::new(0.0, 0.0));
    let flip = match m.get("flip") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(malformed(what, "flip must be true or false")),
    };
    Ok(HexaAut::from_params(get("xi1", one)?, get("z1", zero)?, get("xi2", one)?, get("z2", zero)?, get("omega", one)?, flip)?)
}

fn aut_json(t: &HexaAut) -> Value {
    let (xi1, z1, xi2, z2) = t.params();
    json!({"xi1": cx_json(xi1), "z1": cx_json(z1), "xi2": cx_json(xi2), "z2": cx_json(z2), "omega": cx_json(t.omega), "flip": t.flip})
}

fn aut_human(t: &HexaAut) -> String {
    let (xi1, z1, xi2, z2) = t.params();
    format!(
        "xi1: {}\nz1: {}\nxi2: {}\nz2: {}\nomega: {}\nflip: {}\n",
        fmt_cx(xi1),
        fmt_cx(z1),
        fmt_cx(xi2),
        fmt_cx(z2),
        fmt_cx(t.omega),
        t.flip
    )
}

fn aut(action: AutAction, _tol: f64) -> CliResult {
    match action {
        AutAction::Apply { aut, point } => {
            let t = parse_aut("aut", &aut)?;
            let p = hexa_point("point", &point)?;
            let q = hexa_aut_apply(&t, &p)?;
            let human = format!("image: [{}]\n", q.coords().iter().map(|z| fmt_cx(*z)).collect::<Vec<_>>().join(", "));
            Ok((json!({"aut": aut_json(&t), "point": hexa_json(&p), "image": hexa_json(&q)}), human, 0))
        }
        AutAction::Compose { first, second } => {
            let (t1, t2) = (parse_aut("first", &first)?, parse_aut("second", &second)?);
            let c = hexa_aut_compose(&t1, &t2);
            Ok((json!({"composition": aut_json(&c)}), format!("composition (first ∘ second):\n{}", aut_human(&c)), 0))
        }
        AutAction::Invert { aut } => {
            let t = parse_aut("aut", &aut)?;
            let i = hexa_aut_invert(&t);
            Ok((json!({"inverse": aut_json(&i)}), format!("inverse:\n{}", aut_human(&i)), 0))
        }
    }
}

fn report_value(r: &HexaInnerReport) -> Value {
    to_value(r)
}

fn report_human(r: &HexaInnerReport) -> String {
    let mut s = format!(
        "valid: {}\nmax circle defect of |a|^2+|x1|^2=1: {:e}\nmax circle distinguished-boundary defect: {:e}\nmin interior margin: {:e}\n",
        r.valid, r.max_circle_norm_defect, r.max_circle_be_defect, r.min_interior_margin
    );
    for f in &r.failures {
        let _ = writeln!(s, "failure: {f}");
    }
    s
}

fn inner(action: InnerAction, _tol: f64) -> CliResult {
    match action {
        InnerAction::Construct { data, blaschke, c } => {
            let n = data.n;
            let e2 = poly_from("e2", &parse_json("e2", &data.e2)?)?;
            let d = poly_from("d", &parse_json("d", &data.d)?)?;
            let e1 = match &data.e1 {
                Some(t) => poly_from("e1", &parse_json("e1", t)?)?,
                None => poly_reflect(&e2, n)?,
            };
            let t = RationalTetraInner::new(e1, e2, d, n);
            let b = match &blaschke {
                Some(text) => blaschke_from("blaschke", &parse_json("blaschke", text)?)?,
                None => BlaschkeProduct::power(1),
            };
            let c = match &c {
                Some(text) => parse_cx("c", text)?,
                None => Cx::new(1.0, 0.0),
            };
            let f = hexa_inner_construct(&t, &b, c)?;
            let rep = hexa_inner_validate(&f);
            let mut human = String::new();
            fmt_function(&mut human, &f);
            human.push_str(&report_human(&rep));
            let code = if rep.valid { 0 } else { EXIT_INVALID };
            Ok((json!({"function": hexa_function_json(&f), "report": report_value(&rep)}), human, code))
        }
        InnerAction::Validate { function } => {
            let f = hexa_function_from(&function)?;
            let rep = hexa_inner_validate(&f);
            let code = if rep.valid { 0 } else { EXIT_INVALID };
            Ok((json!({"report": report_value(&rep)}), report_human(&rep), code))
        }
    }
}

fn problem_from(p: &ProblemArgs) -> Result<SchwarzProblem, Failure> {
    let l0 = parse_cx("lambda0", &p.lambda0)?;
    let target = hexa_point("target", &p.target)?;
    Ok(SchwarzProblem::new(l0, target)?)
}

fn schwarz_report_human(r: &SchwarzReport) -> String {
    let mut s = format!("feasible: {}\n", r.feasible);
    if let Some(v) = &r.violated {
        let _ = writeln!(s, "violated: {v}");
    }
    let _ = writeln!(s, "tetrablock inequality margin: {:e}", r.tetra_margin);
    let _ = writeln!(s, "supremum bound margin: {:e}", r.psi_sup_margin);
    let _ = writeln!(s, "scaled membership margin: {:e}", r.scaled_membership_margin);
    let _ = writeln!(s, "bound on |a| margin: {:e}", r.a_bound_margin);
    let _ = writeln!(s, "ball retraction margin: {:e}", r.ball_margin);
    let _ = writeln!(s, "conditions agree: {}", r.conditions_agree);
    s
}

fn schwarz(action: SchwarzAction, tol: f64) -> CliResult {
    match action {
        SchwarzAction::Check { problem } => {
            let prob = problem_from(&problem)?;
            let r = schwarz_feasible(&prob, tol);
            let code = if r.feasible { 0 } else { EXIT_INFEASIBLE };
            Ok((json!({"report": to_value(&r)}), schwarz_report_human(&r), code))
        }
        SchwarzAction::Solve { problem, supplied } => {
            let prob = problem_from(&problem)?;
            let supplied = match &supplied {
                Some(text) => Some(tetra_data_from("supplied", &parse_json("supplied", text)?)?),
                None => None,
            };
            let s = schwarz_construct(&prob, supplied.as_ref(), tol)?;
            let (r0, r1) = endpoint_residuals(&s.f, &prob)?;
            let mut human = format!("case: {:?}\n", s.case);
            fmt_function(&mut human, &s.f);
            let _ = writeln!(human, "residual at 0: {r0:e}\nresidual at lambda0: {r1:e}");
            human.push_str(&report_human(&s.report));
            let value = json!({
                "case": to_value(&s.case),
                "function": hexa_function_json(&s.f),
                "residual_at_zero": r0,
                "residual_at_lambda0": r1,
                "report": report_value(&s.report),
            });
            Ok((value, human, 0))
        }
    }
}

/// CSV goes to stdout verbatim (or to the file named by `--out`).
fn sample(kind: SampleKind) -> Outcome {
    let (k, args) = match kind {
        SampleKind::RealSlice { args } => (RealSample::Slice, args),
        SampleKind::Boundary { args } => (RealSample::Boundary, args),
    };
    let text = match real_slice_csv(k, args.seed, args.count) {
        Ok(t) => t,
        Err(e) => {
            let f = Failure::from(e);
            return Outcome { stdout: String::new(), stderr: format!("error: {}", f.message), code: f.code };
        }
    };
    if args.out == "csv" || args.out == "-" {
        return Outcome { stdout: text.trim_end().to_string(), stderr: String::new(), code: 0 };
    }
    match std::fs::write(&args.out, &text) {
        Ok(()) => Outcome { stdout: String::new(), stderr: format!("wrote {} rows to {}", args.count, args.out), code: 0 },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: cannot write {}: {e}", args.out), code: EXIT_DATA },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        let mut v = vec!["hexablock".to_string()];
        v.extend(args.iter().map(|s| s.to_string()));
        run(&v)
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
    }

    #[test]
    fn classify_exit_codes() {
        let o = call(&["classify", "--domain", "tetra", "--point", "[[0,0],[0,0],[0.5,0]]", "--json"]);
        assert_eq!(o.code, 0);
        let v = json_of(&o);
        assert_eq!(v["region"], "interior");
        assert_eq!(v["tol"], 1e-9);
        let o = call(&["classify", "--domain", "hexa", "--point", "[0,0,0,[0.5,0]]", "--json"]);
        assert_eq!(o.code, 0);
        let v = json_of(&o);
        assert_eq!(v["h_mu"]["member"], false);
        assert_eq!(v["h"]["member"], true);
        let o = call(&["classify", "--domain", "hexa-mu", "--point", "[0,0,0,0.5]", "--json"]);
        assert_eq!(o.code, 1);
        assert_eq!(json_of(&o)["member"]["member"], false);
        assert_eq!(call(&["classify", "--domain", "g2", "--point", "[2,1]"]).code, 1);
        assert_eq!(call(&["classify", "--domain", "g2", "--point", "[2,1]", "--closed"]).code, 0);
        assert_eq!(call(&["classify", "--domain", "g2", "--point", "[3,1]", "--closed"]).code, 2);
        assert_eq!(call(&["classify", "--domain", "hexa-n", "--point", "[1,0,0,1]", "--tol", "1e-9"]).code, 1);
        let o = call(&["classify", "--domain", "tetra", "--point", "[[0,0],[0,0]"]);
        assert_eq!(o.code, 64);
        assert!(o.stderr.contains("malformed"));
        assert_eq!(call(&["classify", "--domain", "tetra", "--point", "[0,0]"]).code, 64);
        assert_eq!(call(&["classify", "--domain", "cube", "--point", "[0,0]"]).code, 64);
        assert!(call(&["classify", "--domain", "tetra", "--point", "[0,0,0.5]"]).stdout.contains("tol: 1e-9"));
    }

    #[test]
    fn mu_values() {
        let v = json_of(&call(&["mu", "--structure", "norm", "--matrix", "[[0,5],[0,0]]", "--json"]));
        assert_eq!(v["value"], 5.0);
        let v = json_of(&call(&["mu", "--structure", "hexa", "--matrix", "[[0,5],[0,0]]", "--json", "--oracle"]));
        assert!(v["value"].as_f64().unwrap() <= 1.0 + 1e-9);
        assert!(v["relative_gap"].as_f64().unwrap() <= 2e-2);
    }

    #[test]
    fn automorphism_commands() {
        let t = r#"{"xi1":[0,1],"z1":[0.2,0.1],"xi2":[1,0],"z2":[-0.3,0],"omega":[0.6,0.8],"flip":false}"#;
        let v = json_of(&call(&["aut", "invert", "--aut", t, "--json"]));
        let inv = v["inverse"].to_string();
        let c = json_of(&call(&["aut", "compose", "--first", t, "--second", &inv, "--json"]));
        let p = "[[0.1,0.2],[0.3,0],[-0.2,0.1],[0.05,0]]";
        let a = json_of(&call(&["aut", "apply", "--aut", &c["composition"].to_string(), "--point", p, "--json"]));
        let img = cx_list("image", &a["image"]).unwrap();
        let orig = cx_list("point", &parse_json("p", p).unwrap()).unwrap();
        for (x, y) in img.iter().zip(&orig) {
            assert!((x - y).norm() < 1e-10);
        }
        let o = call(&["aut", "apply", "--aut", t, "--point", "[2,0,0,0]"]);
        assert_eq!(o.code, 65);
    }

    #[test]
    fn inner_commands() {
        let o = call(&["inner", "construct", "--e2", "[0]", "--d", "[1]", "--n", "2", "--json"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v = json_of(&o);
        assert_eq!(v["report"]["valid"], true);
        let f = v["function"].to_string();
        assert_eq!(call(&["inner", "validate", "--function", &f]).code, 0);
        let mut bad = v["function"].clone();
        bad["c"] = json!([1.1, 0.0]);
        assert_eq!(call(&["inner", "validate", "--function", &bad.to_string()]).code, 5);
        let human = call(&["inner", "construct", "--e2", "[0]", "--d", "[1]", "--n", "2"]).stdout;
        assert!(human.contains("A(λ)") && human.contains("valid: true"));
        // declared degree mismatch is malformed input
        assert_eq!(call(&["inner", "construct", "--e2", r#"{"degree":2,"coeffs":[1]}"#, "--d", "[1]", "--n", "2"]).code, 64);
        // D vanishing in the disc is invalid data
        assert_eq!(call(&["inner", "construct", "--e2", "[0]", "--d", "[0.5,1]", "--n", "1"]).code, 65);
    }

    #[test]
    fn schwarz_commands() {
        let o = call(&["schwarz", "check", "--lambda0", "0.5", "--target", "[0.6,0,0,0.5]"]);
        assert_eq!(o.code, 3);
        assert!(o.stdout.contains("violated"));
        let o = call(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0.6,0,0,0.5]"]);
        assert_eq!(o.code, 3);
        assert!(o.stderr.contains("violates psi supremum bound"));
        let o = call(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0.25,0,0,0.5]", "--json"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v = json_of(&o);
        assert!(v["residual_at_lambda0"].as_f64().unwrap() < 1e-7);
        assert!(v["function"]["d"]["coeffs"].is_array());
        let o = call(&["schwarz", "solve", "--lambda0", "0.5", "--target", "[0.1,0.2,0.2,0.1]"]);
        assert_eq!(o.code, 4, "{}", o.stderr);
        assert!(o.stderr.contains("supply tetra-inner data"));
    }

    #[test]
    fn sample_is_deterministic_csv() {
        let a = call(&["sample", "boundary", "--out", "csv", "--seed", "3", "--count", "20"]);
        assert_eq!(a.code, 0);
        assert_eq!(a, call(&["sample", "boundary", "--out", "csv", "--seed", "3", "--count", "20"]));
        assert!(a.stdout.starts_with("a,x1,x2,x3,region,faces,margin,k"));
        assert_eq!(a.stdout.lines().count(), 21);
    }
}
