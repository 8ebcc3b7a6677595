//! Batch front end: parse automorphism specifications, dispatch analyses,
//! emit deterministic JSON (or a human-readable rendering).
//!
//! Exit codes: 0 for completed analyses, including reports with unknown
//! verdicts; nonzero for input and resource errors.

mod input;
mod poly_parse;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use input::{parse_input, Caps};
use oredyn::dynamics::{
    classify_orbits, fixed_points, periodic_points_monomial, periodic_points_plane,
};
use oredyn::growth::Automorphism;
use oredyn::invariants::{
    bounded_invariant_search, invariant_fibration, invariant_monomials, periodic_divisors,
    power_invariant, PowerInvariance,
};
use oredyn::report::{
    DMJson, DivisorsJson, FibrationJson, FixedPointsJson, GKJson, GrowthJson, InvariantsJson,
    OrbitJson, WitnessJson, SCHEMA_VERSION,
};
use oredyn::LatticePolygon;
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "oredyn",
    about = "Exact dynamics of torus and plane automorphisms, with \
             Dixmier-Moeglin verdicts for the associated skew and \
             skew-Laurent extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Input file(s); `-` reads stdin. Repeat for batch processing; outputs
    /// keep the input order.
    #[arg(long = "in", value_name = "FILE", default_values_t = [String::from("-")])]
    inputs: Vec<String>,
    /// Emit compact JSON (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Emit a human-readable rendering instead of compact JSON.
    #[arg(long)]
    pretty: bool,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Clone)]
pub struct CapArgs {
    /// Growth profile depth.
    #[arg(long)]
    pub depth: Option<u32>,
    /// Degree bound for the brute-force invariant search.
    #[arg(long = "degree-bound")]
    pub degree_bound: Option<u32>,
    /// Period cap for invariant and divisor searches.
    #[arg(long = "period-cap")]
    pub period_cap: Option<u32>,
    /// Torsion order bound for periodic-point enumeration.
    #[arg(long = "torsion-bound")]
    pub torsion_bound: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Growth data (rho, j) with certificate.
    Growth(CommonArgs),
    /// Invariant rational functions: lattice kernels, fibrations, and the
    /// degree-bounded brute-force oracle.
    Invariants(CommonArgs),
    /// Dense-orbit classification.
    Orbits(CommonArgs),
    /// Periodic points (and, for monomial maps, periodic divisor directions).
    Periodic(CommonArgs),
    /// Newton-polytope growth profile of the associated graded algebra.
    Gk(CommonArgs),
    /// Dixmier-Moeglin report for the skew-Laurent ring T.
    AnalyzeT(CommonArgs),
    /// Dixmier-Moeglin report for the skew ring U.
    AnalyzeU(CommonArgs),
    /// Full pipeline: growth, orbits, invariants, and both ring reports.
    Report(CommonArgs),
}

fn main() {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Growth(a) => ("growth", a),
        Command::Invariants(a) => ("invariants", a),
        Command::Orbits(a) => ("orbits", a),
        Command::Periodic(a) => ("periodic", a),
        Command::Gk(a) => ("gk", a),
        Command::AnalyzeT(a) => ("analyze-t", a),
        Command::AnalyzeU(a) => ("analyze-u", a),
        Command::Report(a) => ("report", a),
    };
    match run_batch(name, args) {
        Ok(outputs) => {
            for line in outputs {
                println!("{line}");
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(PathBuf::from(path))
            .map_err(|e| anyhow!("reading {path}: {e}"))?)
    }
}

fn run_batch(command: &str, args: &CommonArgs) -> Result<Vec<String>> {
    // Compact JSON is the default; --json states it explicitly.
    let _ = args.json;
    let mut out = Vec::new();
    for path in &args.inputs {
        let text = read_input(path)?;
        let (sigma, options) = parse_input(&text)?;
        let caps = Caps::resolve(&options, &args.caps)?;
        out.push(run_one(command, &sigma, &caps, args.pretty)?);
    }
    Ok(out)
}

#[derive(Serialize)]
struct GrowthOut {
    schema: String,
    #[serde(flatten)]
    growth: GrowthJson,
}

#[derive(Serialize)]
struct InvariantsOut {
    schema: String,
    subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_invariant: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified_absent_all_powers: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    per_period: Vec<InvariantsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fibration: Option<FibrationJson>,
    brute_force_degree_bound: u32,
    brute_force_period_cap: u32,
    /// Total distinct witnesses found; the list below is capped at 24.
    brute_force_total: usize,
    brute_force: Vec<WitnessJson>,
}

#[derive(Serialize)]
struct PeriodicOut {
    schema: String,
    subject: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    torsion_orbits: Vec<TorsionOrbitOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    divisors: Option<DivisorsJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    plane_periods: Vec<PlanePeriodOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixed_points: Option<FixedPointsJson>,
}

#[derive(Serialize)]
struct TorsionOrbitOut {
    point: String,
    exact_period: u32,
}

#[derive(Serialize)]
struct PlanePeriodOut {
    period: u32,
    solutions: FixedPointsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    genuine_factor: Option<String>,
    genuine_degree: u32,
    rational_orbits: Vec<RationalOrbitOut>,
}

#[derive(Serialize)]
struct RationalOrbitOut {
    point: [String; 2],
    exact_period: u32,
}

#[derive(Serialize)]
struct FullReport {
    schema: String,
    growth: Option<GrowthJson>,
    orbits: OrbitJson,
    invariants: InvariantsOut,
    skew_laurent_t: DMJson,
    skew_u: DMJson,
}

fn run_one(command: &str, sigma: &Automorphism, caps: &Caps, pretty: bool) -> Result<String> {
    match command {
        "growth" => {
            let g = oredyn::growth::growth_data(sigma).map_err(|e| anyhow!("{e}"))?;
            let out = GrowthOut {
                schema: SCHEMA_VERSION.into(),
                growth: GrowthJson::from(&g),
            };
            if pretty {
                Ok(format!(
                    "growth data: rho = {}, j = {}, type {}\n  certificate: {}",
                    g.rho,
                    g.j,
                    g.growth_type(),
                    out.growth.certificate
                ))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "invariants" => {
            let out = invariants_out(sigma, caps)?;
            if pretty {
                let mut s = format!("invariants of {}:", out.subject);
                match &out.power_invariant {
                    Some(w) => {
                        s += &format!("\n  witness: {} (period {})", w.function, w.period)
                    }
                    None => s += "\n  no invariant for any power (certified)",
                }
                for w in &out.brute_force {
                    s += &format!(
                        "\n  brute-force: {} (period {})",
                        w.function, w.period
                    );
                }
                Ok(s)
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "orbits" => {
            let c = classify_orbits(sigma);
            let out = OrbitJson::from(&c);
            if pretty {
                Ok(format!(
                    "orbit classification: {}\n  maximal invariant-irreducibles: {}",
                    out.status, out.max_irreducibles
                ))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "periodic" => {
            let out = periodic_out(sigma, caps)?;
            if pretty {
                let mut s = String::from("periodic structure:");
                for t in &out.torsion_orbits {
                    s += &format!("\n  {} period {}", t.point, t.exact_period);
                }
                if let Some(d) = &out.divisors {
                    s += &format!(
                        "\n  divisor directions: {} (infinitely many: {})",
                        d.directions.len(),
                        d.infinitely_many
                    );
                }
                for p in &out.plane_periods {
                    s += &format!(
                        "\n  period {}: count {:?}",
                        p.period, p.solutions.count_with_multiplicity
                    );
                }
                Ok(s)
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "gk" => {
            let m = match sigma {
                Automorphism::Monomial(m) => m,
                Automorphism::Plane(_) => {
                    bail!("the growth profile is defined for monomial automorphisms")
                }
            };
            let polytope = match &caps.polytope {
                None => LatticePolygon::standard_triangle(),
                Some(vs) => {
                    let pts: Vec<(i64, i64)> = vs.iter().map(|[x, y]| (*x, *y)).collect();
                    LatticePolygon::from_i64(&pts).map_err(|e| anyhow!("{e}"))?
                }
            };
            let prof =
                oredyn::ore::gk_profile(m, &polytope, caps.depth).map_err(|e| anyhow!("{e}"))?;
            let out = GKJson::from(&prof);
            if pretty {
                Ok(format!(
                    "filtration dimensions: {:?}\n  classification: {}",
                    out.dims, out.classification
                ))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "analyze-t" => {
            let rep = oredyn::dm::analyze_t(sigma).map_err(|e| anyhow!("{e}"))?;
            let out = DMJson::from(&rep);
            if pretty {
                Ok(render_dm(&out))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "analyze-u" => {
            let rep = oredyn::dm::analyze_u(sigma).map_err(|e| anyhow!("{e}"))?;
            let out = DMJson::from(&rep);
            if pretty {
                Ok(render_dm(&out))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        "report" => {
            let growth = oredyn::growth::growth_data(sigma).ok();
            let t = oredyn::dm::analyze_t(sigma).map_err(|e| anyhow!("{e}"))?;
            let u = oredyn::dm::analyze_u(sigma).map_err(|e| anyhow!("{e}"))?;
            let out = FullReport {
                schema: SCHEMA_VERSION.into(),
                growth: growth.as_ref().map(GrowthJson::from),
                orbits: OrbitJson::from(&t.orbits),
                invariants: invariants_out(sigma, caps)?,
                skew_laurent_t: DMJson::from(&t),
                skew_u: DMJson::from(&u),
            };
            if pretty {
                Ok(format!(
                    "{}\n\n{}",
                    render_dm(&out.skew_laurent_t),
                    render_dm(&out.skew_u)
                ))
            } else {
                Ok(serde_json::to_string(&out)?)
            }
        }
        other => bail!("unknown command {other}"),
    }
}

fn invariants_out(sigma: &Automorphism, caps: &Caps) -> Result<InvariantsOut> {
    let subject = match sigma {
        Automorphism::Monomial(m) => format!("{m}"),
        Automorphism::Plane(p) => format!("{p}"),
    };
    let (power, absent, per_period, fibration) = match sigma {
        Automorphism::Monomial(m) => {
            let (w, absent) = match power_invariant(m) {
                PowerInvariance::Exists(w) => (Some(WitnessJson::from(&w)), None),
                PowerInvariance::CertifiedAbsent => (None, Some(true)),
            };
            let per: Vec<InvariantsJson> = (1..=caps.period_cap)
                .map(|p| InvariantsJson::from(&invariant_monomials(m, p)))
                .collect();
            (w, absent, per, None)
        }
        Automorphism::Plane(p) => {
            let fib = invariant_fibration(p).ok().map(|f| FibrationJson::from(&f));
            let w = fib
                .as_ref()
                .and_then(|f| f.sigma_invariant.clone().or(f.power_invariant.clone()));
            (w, None, Vec::new(), fib)
        }
    };
    let mut brute = Vec::new();
    let mut brute_total = 0usize;
    for m in 1..=caps.period_cap.min(4) {
        let ws = bounded_invariant_search(sigma, caps.degree_bound, m)
            .map_err(|e| anyhow!("{e}"))?;
        for w in ws {
            let j = WitnessJson::from(&w);
            // A function already found at a smaller period stays invariant
            // at multiples; list each function once.
            if !brute.iter().any(|b: &WitnessJson| b.function == j.function) {
                brute_total += 1;
                if brute.len() < 24 {
                    brute.push(j);
                }
            }
        }
    }
    Ok(InvariantsOut {
        schema: SCHEMA_VERSION.into(),
        subject,
        power_invariant: power,
        certified_absent_all_powers: absent,
        per_period,
        fibration,
        brute_force_degree_bound: caps.degree_bound,
        brute_force_period_cap: caps.period_cap.min(4),
        brute_force_total: brute_total,
        brute_force: brute,
    })
}

fn periodic_out(sigma: &Automorphism, caps: &Caps) -> Result<PeriodicOut> {
    match sigma {
        Automorphism::Monomial(m) => {
            let mut orbits = Vec::new();
            for d in 1..=caps.torsion_bound {
                let cap = 4 * d * d + 4;
                for o in periodic_points_monomial(m, cap, d).map_err(|e| anyhow!("{e}"))? {
                    if o.point.order() == d as u64 {
                        orbits.push(TorsionOrbitOut {
                            point: o.point.to_string(),
                            exact_period: o.exact_period,
                        });
                    }
                }
            }
            let divisors = periodic_divisors(m, caps.period_cap)
                .map(|d| DivisorsJson::from(&d))
                .ok();
            Ok(PeriodicOut {
                schema: SCHEMA_VERSION.into(),
                subject: format!("{m}"),
                torsion_orbits: orbits,
                divisors,
                plane_periods: Vec::new(),
                fixed_points: None,
            })
        }
        Automorphism::Plane(p) => {
            let mut periods = Vec::new();
            for n in 1..=caps.period_cap.min(3) {
                let rep = periodic_points_plane(p, n).map_err(|e| anyhow!("{e}"))?;
                periods.push(PlanePeriodOut {
                    period: n,
                    solutions: FixedPointsJson::from(&rep.solutions),
                    genuine_factor: rep
                        .genuine_factor
                        .as_ref()
                        .map(|(f, _)| f.to_int_primitive().to_string()),
                    genuine_degree: rep.genuine_factor.as_ref().map(|(_, d)| *d).unwrap_or(0),
                    rational_orbits: rep
                        .rational_orbits
                        .iter()
                        .map(|((a, b), k)| RationalOrbitOut {
                            point: [a.to_string(), b.to_string()],
                            exact_period: *k,
                        })
                        .collect(),
                });
            }
            Ok(PeriodicOut {
                schema: SCHEMA_VERSION.into(),
                subject: format!("{p}"),
                torsion_orbits: Vec::new(),
                divisors: None,
                plane_periods: periods,
                fixed_points: Some(FixedPointsJson::from(&fixed_points(p))),
            })
        }
    }
}

fn render_dm(out: &DMJson) -> String {
    let mut s = format!(
        "{} for {}\n  growth type: {}\n  orbits: {}\n  (0) primitive: {}\n  (0) locally closed: {}\n  (0) rational: {}\n  Dixmier-Moeglin: {}",
        out.ring,
        out.subject,
        out.growth
            .as_ref()
            .map(|g| g.growth_type.clone())
            .unwrap_or_else(|| "unknown".into()),
        out.orbits.status,
        out.zero_primitive,
        out.zero_locally_closed,
        out.zero_rational,
        out.dm_verdict
    );
    if let Some(reg) = &out.registry {
        s += &format!("\n  registry: {} [{}]", reg.name, reg.tag);
    }
    for a in &out.alarms {
        s += &format!("\n  ALARM: {a}");
    }
    s += "\n  rules applied:";
    for r in &out.rule_trace {
        s += &format!("\n    - {}", r.rule);
    }
    s
}

