//! Command-line front end: single-instance solving, exhaustive batch
//! verification, descent demonstrations, and diagnostics.
//!
//! Exit codes: 0 success, 2 bad algebraic input (reducible modulus, point off
//! the surface), 3 exhausted point search, 4 enumeration budget exceeded,
//! 5 degenerate descent outcome, 64 usage errors, 1 anything else.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cubic::{
    self, jacobian_singular_scan, secant_descent, CubicSurface, DescentOutcome, QuadExtPoint,
};
use crate::ff::{irreducible_count, FieldCtx, UniPoly};
use crate::forms::MultiForm;
use crate::hermite::{
    affine_zero_count, build_system, eliminate_c1, hermite_pipeline, projective_zero_count,
};
use crate::{Error, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "hermite5",
    version,
    about = "Constructive Hermite normalization for quintic extensions of GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find an element of GF(p^5) whose minimal polynomial is x^5 + c2*x^3 + c4*x + c5.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Monic irreducible quintic over GF(p), e.g. "x^5+x^2+1" or "1,0,1,0,0,1".
        #[arg(long)]
        modulus: String,
    },
    /// Run the pipeline over every monic irreducible quintic over GF(p).
    VerifyAll {
        #[command(flatten)]
        common: Common,
        /// Worker threads; results are merged in modulus order regardless.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Descend a GF(p^2) point of a cubic surface to a rational point along
    /// its conjugate secant line.
    Descend {
        #[command(flatten)]
        common: Common,
        /// Cubic form in x0..x3, inline text or JSON, or @path to a file.
        #[arg(long)]
        surface: String,
        /// Four GF(p^2) coordinates separated by semicolons, e.g. "1; 0; w+3; w+6".
        #[arg(long)]
        point: String,
    },
    /// Report trivial-point membership, singular points, and zero counts for
    /// one modulus.
    Diag {
        #[command(flatten)]
        common: Common,
        /// Monic irreducible quintic over GF(p).
        #[arg(long)]
        modulus: String,
        /// Largest extension degree scanned for singular points.
        #[arg(long, default_value_t = 2)]
        maxdeg: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Field characteristic (a prime).
    #[arg(long)]
    p: u64,
    /// Output format for stdout.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Evaluation budget for exhaustive enumerations.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Also write the JSON result to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// The rendered result of one subcommand.
pub struct CmdOutput {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

/// Maps library errors to the exit-code taxonomy.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotIrreducible(_) | Error::NotOnSurface => 2,
        Error::NoPointFound => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::NotPrime(_)
        | Error::NotMonic(_)
        | Error::Parse(_)
        | Error::Unsupported(_)
        | Error::DimensionMismatch { .. } => 64,
        _ => 1,
    }
}

/// Resolves the effective budget: the HERMITE_BUDGET environment variable,
/// when set, overrides the flag. Zero is rejected.
pub fn resolve_budget(flag: u64, env: Option<String>) -> Result<u64, Error> {
    let budget = match env {
        Some(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid HERMITE_BUDGET value: {}", text)))?,
        None => flag,
    };
    if budget == 0 {
        return Err(Error::Parse("budget must be positive".into()));
    }
    Ok(budget)
}

/// Every monic irreducible quintic over GF(p), in counter order: the k-th
/// candidate is x^5 plus the base-p digits of k as ascending coefficients.
pub fn monic_irreducible_quintics(p: u64) -> Vec<UniPoly> {
    let total = p.pow(5);
    let mut out = Vec::new();
    for k in 0..total {
        let mut coeffs = vec![0u64; 6];
        let mut rest = k;
        for c in coeffs.iter_mut().take(5) {
            *c = rest % p;
            rest /= p;
        }
        coeffs[5] = 1;
        let candidate = UniPoly::new(p, coeffs);
        if candidate.is_irreducible() {
            out.push(candidate);
        }
    }
    out
}

fn as_object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("serialized struct is a JSON object"),
    }
}

fn point_text(coords: &[u64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(" : "))
}

/// Runs the full pipeline for one modulus and renders the certificate.
pub fn cmd_solve(p: u64, modulus_text: &str) -> Result<CmdOutput, Error> {
    let modulus = UniPoly::parse(p, modulus_text)?;
    let report = hermite_pipeline(p, &modulus)?;
    let ok = report.c_pattern_ok && report.primitive_ok && report.on_surface_ok;
    let mut map = as_object(serde_json::to_value(&report).expect("report serializes"));
    map.insert("schema".into(), json!(1));
    let text = [
        format!("p: {}", report.p),
        format!("modulus: {}", report.modulus),
        format!("point: {}", point_text(&report.point)),
        format!("element: {}", report.element),
        format!("minimal polynomial: {}", report.minpoly),
        format!("coefficient pattern ok: {}", report.c_pattern_ok),
        format!("primitive ok: {}", report.primitive_ok),
        format!("on surface ok: {}", report.on_surface_ok),
        format!("elapsed ms: {}", report.elapsed_ms),
    ]
    .join("\n");
    Ok(CmdOutput {
        json: Value::Object(map),
        text,
        code: if ok { 0 } else { 1 },
    })
}

/// Runs the pipeline over every monic irreducible quintic over GF(p) and
/// summarizes the verdicts. The number of moduli is cross-checked against
/// the closed-form count.
pub fn cmd_verify_all(p: u64, budget: u64, jobs: usize) -> Result<CmdOutput, Error> {
    let start = std::time::Instant::now();
    FieldCtx::prime(p)?;
    if jobs == 0 {
        return Err(Error::Parse("jobs must be at least 1".into()));
    }
    let expected = irreducible_count(p, 5);
    let scan_cost: u128 = (0..4).map(|j| (p as u128).pow(j)).sum();
    let needed = expected as u128 * scan_cost;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: u64::try_from(needed).unwrap_or(u64::MAX),
            budget,
        });
    }

    let moduli = monic_irreducible_quintics(p);
    assert_eq!(
        moduli.len() as u64,
        expected,
        "irreducible scan disagrees with the closed-form count"
    );

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    let outcomes: Vec<Option<(String, String)>> = pool.install(|| {
        moduli
            .par_iter()
            .map(|m| match hermite_pipeline(p, m) {
                Ok(r) if r.c_pattern_ok && r.primitive_ok && r.on_surface_ok => None,
                Ok(r) => Some((
                    m.to_text('x'),
                    format!(
                        "verdicts failed: c_pattern={} primitive={} on_surface={}",
                        r.c_pattern_ok, r.primitive_ok, r.on_surface_ok
                    ),
                )),
                Err(e) => Some((m.to_text('x'), e.to_string())),
            })
            .collect()
    });

    let failed: Vec<Value> = outcomes
        .iter()
        .flatten()
        .map(|(m, reason)| json!({"modulus": m, "reason": reason}))
        .collect();
    let tested = moduli.len() as u64;
    let succeeded = tested - failed.len() as u64;
    let code = if failed.is_empty() { 0 } else { 1 };

    let mut text = vec![
        format!("p: {}", p),
        format!("tested: {}", tested),
        format!("succeeded: {}", succeeded),
        format!("failed: {}", failed.len()),
    ];
    for f in &failed {
        text.push(format!(
            "  {}: {}",
            f["modulus"].as_str().unwrap_or(""),
            f["reason"].as_str().unwrap_or("")
        ));
    }

    let json = json!({
        "schema": 1,
        "p": p,
        "tested": tested,
        "succeeded": succeeded,
        "failed": failed,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok(CmdOutput {
        json,
        text: text.join("\n"),
        code,
    })
}

fn parse_surface(p: u64, input: &str) -> Result<MultiForm, Error> {
    let content = match input.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {}", path, e)))?,
        None => input.to_string(),
    };
    let trimmed = content.trim();
    if trimmed.starts_with('{') {
        let v: Value =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        MultiForm::from_json(p, &v)
    } else {
        MultiForm::parse(p, 4, 3, trimmed)
    }
}

fn parse_point(ctx2: &FieldCtx, input: &str) -> Result<QuadExtPoint, Error> {
    let coords: Result<Vec<_>, Error> = input
        .split(';')
        .map(|part| cubic::parse_quadratic_coord(ctx2, part.trim()))
        .collect();
    QuadExtPoint::new(ctx2, coords?)
}

/// Intersects the surface with the secant line through a GF(p^2) point and
/// its conjugate and reports the tagged outcome.
pub fn cmd_descend(p: u64, surface_text: &str, point_text_in: &str) -> Result<CmdOutput, Error> {
    let prime = FieldCtx::prime(p)?;
    let form = parse_surface(p, surface_text)?;
    let surface = CubicSurface::new(&prime, form)?;
    let ctx2 = cubic::quadratic_extension(p)?;
    let point = parse_point(&ctx2, point_text_in)?;
    let outcome = secant_descent(&surface, &point)?;

    let (tag, rational, code) = match &outcome {
        DescentOutcome::Descended(q) => ("descended", Some(q.coords().to_vec()), 0),
        DescentOutcome::AlreadyRational(q) => ("already_rational", Some(q.coords().to_vec()), 0),
        DescentOutcome::LineOnSurface => ("line_on_surface", None, 5),
        DescentOutcome::TangentSecant => ("tangent_secant", None, 5),
    };

    let mut map = Map::new();
    map.insert("schema".into(), json!(1));
    map.insert("p".into(), json!(p));
    map.insert("outcome".into(), json!(tag));
    let mut text = vec![format!("outcome: {}", tag)];
    if let Some(coords) = &rational {
        map.insert("point".into(), json!(coords));
        text.push(format!("point: {}", point_text(coords)));
    }
    Ok(CmdOutput {
        json: Value::Object(map),
        text: text.join("\n"),
        code,
    })
}

/// Reports Lemma-style diagnostics for one modulus: whether the trivial
/// point lies on the system, the singular points of the cubic surface up to
/// `maxdeg`, and the affine/projective zero counts with the mod-p congruence
/// verdict. Sections whose enumeration exceeds the budget are omitted and
/// flagged instead of failing the run.
pub fn cmd_diag(p: u64, modulus_text: &str, maxdeg: usize, budget: u64) -> Result<CmdOutput, Error> {
    let modulus = UniPoly::parse(p, modulus_text)?;
    if modulus.degree() != Some(5) {
        return Err(Error::Unsupported(format!(
            "modulus must have degree 5, got {}",
            modulus.to_text('x')
        )));
    }
    let base = FieldCtx::prime(p)?;
    let ctx = FieldCtx::extension(&base, modulus.clone())?;
    let sys = build_system(&ctx);
    let e0 = [1u64, 0, 0, 0, 0];
    let trivial = sys.c1().eval(&e0)? == 0 && sys.c3().eval(&e0)? == 0;
    let (cubic_form, _) = eliminate_c1(&sys)?;
    let surface = CubicSurface::new(&base, cubic_form)?;

    let mut warning = false;
    let singular = match jacobian_singular_scan(&surface, maxdeg, budget) {
        Ok(points) => Some(points),
        Err(Error::BudgetExceeded { .. }) => {
            warning = true;
            None
        }
        Err(e) => return Err(e),
    };
    let counts = match affine_zero_count(&sys, budget) {
        Ok(affine) => Some((affine, projective_zero_count(&sys, budget)?)),
        Err(Error::BudgetExceeded { .. }) => {
            warning = true;
            None
        }
        Err(e) => return Err(e),
    };

    let mut map = Map::new();
    map.insert("schema".into(), json!(1));
    map.insert("p".into(), json!(p));
    map.insert("modulus".into(), json!(modulus.to_text('x')));
    map.insert("trivial_point_on_system".into(), json!(trivial));
    map.insert("budget_warning".into(), json!(warning));

    let mut text = vec![
        format!("p: {}", p),
        format!("modulus: {}", modulus.to_text('x')),
        format!("trivial point on system: {}", trivial),
    ];

    if let Some(points) = &singular {
        let rendered: Vec<Value> = points
            .iter()
            .map(|s| {
                let coords: Vec<String> = s.coords().iter().map(|c| c.to_text('w')).collect();
                json!({"field_degree": s.field_degree(), "point": coords})
            })
            .collect();
        map.insert("singular".into(), json!(rendered));
        if points.is_empty() {
            text.push("singular points: none".into());
        } else {
            text.push(format!("singular points: {}", points.len()));
            for s in points {
                text.push(format!("  {} [degree {}]", s, s.field_degree()));
            }
        }
    } else {
        text.push("singular points: skipped (budget exceeded)".into());
    }

    if let Some((affine, projective)) = counts {
        let congruence_ok = affine % p == 0;
        map.insert("affine_zeros".into(), json!(affine));
        map.insert("projective_zeros".into(), json!(projective));
        map.insert("congruence_ok".into(), json!(congruence_ok));
        text.push(format!("affine zeros: {}", affine));
        text.push(format!("projective zeros: {}", projective));
        text.push(format!("congruence ok: {}", congruence_ok));
    } else {
        text.push("zero counts: skipped (budget exceeded)".into());
    }
    if warning {
        text.push("warning: enumeration budget exceeded".into());
    }

    Ok(CmdOutput {
        json: Value::Object(map),
        text: text.join("\n"),
        code: 0,
    })
}

/// Parses the process arguments, dispatches, prints, and returns the exit
/// code for `main`.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };

    let common = match &cli.command {
        Command::Solve { common, .. }
        | Command::VerifyAll { common, .. }
        | Command::Descend { common, .. }
        | Command::Diag { common, .. } => common,
    };
    let budget = match resolve_budget(common.budget, std::env::var("HERMITE_BUDGET").ok()) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {}", e);
            return exit_code_for(&e);
        }
    };
    let format = common.format;
    let out_path = common.out.clone();

    let result = match &cli.command {
        Command::Solve { common, modulus } => cmd_solve(common.p, modulus),
        Command::VerifyAll { common, jobs } => cmd_verify_all(common.p, budget, *jobs),
        Command::Descend {
            common,
            surface,
            point,
        } => cmd_descend(common.p, surface, point),
        Command::Diag {
            common,
            modulus,
            maxdeg,
        } => cmd_diag(common.p, modulus, *maxdeg, budget),
    };

    match result {
        Ok(output) => {
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&output.json).expect("valid JSON")
                    );
                }
                Format::Text => println!("{}", output.text),
            }
            if let Some(path) = out_path {
                let mut body =
                    serde_json::to_string_pretty(&output.json).expect("valid JSON");
                body.push('\n');
                if let Err(e) = std::fs::write(&path, body) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return 1;
                }
            }
            output.code
        }
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_cover_the_taxonomy() {
        assert_eq!(exit_code_for(&Error::NotIrreducible("x^5 + 1".into())), 2);
        assert_eq!(exit_code_for(&Error::NotOnSurface), 2);
        assert_eq!(exit_code_for(&Error::NoPointFound), 3);
        assert_eq!(
            exit_code_for(&Error::BudgetExceeded {
                needed: 10,
                budget: 1
            }),
            4
        );
        assert_eq!(exit_code_for(&Error::NotPrime(4)), 64);
        assert_eq!(exit_code_for(&Error::NotMonic("2x^5".into())), 64);
        assert_eq!(exit_code_for(&Error::Parse("nope".into())), 64);
        assert_eq!(exit_code_for(&Error::Unsupported("nope".into())), 64);
        assert_eq!(
            exit_code_for(&Error::DimensionMismatch {
                expected: 4,
                got: 3
            }),
            64
        );
        assert_eq!(exit_code_for(&Error::BadPoint), 1);
        assert_eq!(exit_code_for(&Error::DivisionByZero), 1);
        assert_eq!(exit_code_for(&Error::ZeroLinearForm), 1);
    }

    #[test]
    fn budget_resolution_prefers_the_environment() {
        assert_eq!(resolve_budget(500, None).unwrap(), 500);
        assert_eq!(resolve_budget(500, Some("123".into())).unwrap(), 123);
        assert_eq!(resolve_budget(500, Some(" 99 ".into())).unwrap(), 99);
        assert!(matches!(
            resolve_budget(500, Some("lots".into())),
            Err(Error::Parse(_))
        ));
        assert!(matches!(resolve_budget(0, None), Err(Error::Parse(_))));
        assert!(matches!(
            resolve_budget(500, Some("0".into())),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn quintic_scan_matches_the_closed_form_count() {
        for p in [2u64, 3] {
            let moduli = monic_irreducible_quintics(p);
            assert_eq!(moduli.len() as u64, irreducible_count(p, 5));
            assert!(moduli.iter().all(|m| m.is_monic() && m.is_irreducible()));
        }
        let gf2 = monic_irreducible_quintics(2);
        assert_eq!(gf2[0].to_text('x'), "x^5 + x^2 + 1");
        assert_eq!(gf2[1].to_text('x'), "x^5 + x^3 + 1");
    }

    #[test]
    fn solve_produces_a_schema_tagged_certificate() {
        let out = cmd_solve(2, "x^5+x^2+1").unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(out.json["schema"], 1);
        assert_eq!(out.json["minpoly"], "x^5 + x^3 + 1");
        assert_eq!(out.json["point"], json!([0, 1, 0, 0, 1]));
        assert!(out.text.contains("minimal polynomial: x^5 + x^3 + 1"));
    }

    #[test]
    fn verify_all_summary_for_gf2() {
        let out = cmd_verify_all(2, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(out.json["tested"], 6);
        assert_eq!(out.json["succeeded"], 6);
        assert_eq!(out.json["failed"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn verify_all_respects_budget() {
        match cmd_verify_all(7, 1000, 1) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 3360 * 400);
                assert_eq!(budget, 1000);
            }
            other => panic!("expected budget error, got {:?}", other.map(|o| o.code)),
        }
    }

    #[test]
    fn descend_fixture_over_gf49() {
        let out = cmd_descend(7, "x0^3 + x1^3 + x2^3 + x3^3", "1; 0; w + 3; w + 6").unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(out.json["outcome"], "descended");
        assert_eq!(out.json["point"], json!([1, 0, 0, 3]));
    }

    #[test]
    fn descend_reports_degenerate_lines_with_exit_five() {
        let out = cmd_descend(2, "x0*x1*x2", "0; 1; w; 0").unwrap();
        assert_eq!(out.code, 5);
        assert_eq!(out.json["outcome"], "line_on_surface");
        assert!(out.json.get("point").is_none());
    }

    #[test]
    fn diag_reports_counts_and_congruence() {
        let out = cmd_diag(2, "x^5 + x^2 + 1", 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(out.json["trivial_point_on_system"], false);
        assert_eq!(out.json["affine_zeros"], 6);
        assert_eq!(out.json["projective_zeros"], 5);
        assert_eq!(out.json["congruence_ok"], true);
        assert_eq!(out.json["budget_warning"], false);
    }

    #[test]
    fn diag_flags_budget_without_failing() {
        let out = cmd_diag(7, "x^5 + x + 3", 2, 100).unwrap();
        assert_eq!(out.code, 0);
        assert_eq!(out.json["budget_warning"], true);
        assert!(out.json.get("affine_zeros").is_none());
        assert!(out.json.get("singular").is_none());
        assert_eq!(out.json["trivial_point_on_system"], false);
    }
}
