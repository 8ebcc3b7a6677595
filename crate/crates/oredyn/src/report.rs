//! Serializable report models.
//!
//! Exact values are rendered as strings (`"3/2"`, polynomial text) so the
//! JSON is stable, human-diffable, and free of floating point. Struct field
//! order fixes the key order; identical inputs serialize to identical bytes.

use crate::dm::{DMReport, DMVerdict, RegistryEntry, RuleApplication, Verdict};
use crate::dynamics::{FixedPoints, MaxIrreducibles, OrbitClassification, OrbitStatus};
use crate::growth::{GrowthCertificate, GrowthData, GrowthType};
use crate::invariants::{
    DivisorDirection, FibrationReport, InvariantWitness, MonomialInvariantReport,
    PeriodicDivisorReport,
};
use crate::ore::{GKClassification, GKProfile};
use crate::{AlgebraicReal, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "oredyn-report/1";

pub fn rational_str(q: &Rational) -> String {
    q.to_string()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraicJson {
    pub kind: String, // "rational" | "algebraic"
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defining_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[String; 2]>,
}

impl AlgebraicJson {
    pub fn from(a: &AlgebraicReal) -> Self {
        match a.as_rational() {
            Some(r) => AlgebraicJson {
                kind: "rational".into(),
                value: Some(rational_str(&r)),
                defining_poly: None,
                interval: None,
            },
            None => {
                let (lo, hi) = a.interval();
                AlgebraicJson {
                    kind: "algebraic".into(),
                    value: None,
                    defining_poly: Some(a.defining_poly().to_string()),
                    interval: Some([rational_str(&lo), rational_str(&hi)]),
                }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthJson {
    pub rho: AlgebraicJson,
    pub j: u32,
    pub growth_type: String,
    pub certificate: String,
}

impl GrowthJson {
    pub fn from(g: &GrowthData) -> Self {
        let certificate = match &g.certificate {
            GrowthCertificate::Cyclotomic {
                order,
                nilpotency_index,
            } => format!(
                "cyclotomic: (M^{order} - I) nilpotent of index {nilpotency_index}"
            ),
            GrowthCertificate::DominantRoot { simple } => {
                let (lo, hi) = g.rho.interval();
                format!(
                    "dominant root isolated in ({}, {}), simple: {simple}",
                    rational_str(&lo),
                    rational_str(&hi)
                )
            }
            GrowthCertificate::BoundedDegrees {
                max_degree,
                checked_to,
            } => format!(
                "degree sequence bounded by {max_degree} through power {checked_to}"
            ),
        };
        GrowthJson {
            rho: AlgebraicJson::from(&g.rho),
            j: g.j,
            growth_type: match g.growth_type() {
                GrowthType::Finite => "finite".into(),
                GrowthType::Infinite => "infinite".into(),
            },
            certificate,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub function: String,
    pub period: u32,
    pub kind: String,
}

impl WitnessJson {
    pub fn from(w: &InvariantWitness) -> Self {
        WitnessJson {
            function: w.to_string(),
            period: w.period,
            kind: format!("{:?}", w.kind).to_lowercase(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitJson {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub max_irreducibles: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub periodic_samples: Vec<String>,
}

impl OrbitJson {
    pub fn from(o: &OrbitClassification) -> Self {
        let (max_irreducibles, periodic_samples) = match &o.max_irreducibles {
            MaxIrreducibles::Finite(list) => (format!("finite ({})", list.len()), list.clone()),
            MaxIrreducibles::CountablyInfinite { samples, .. } => {
                ("countably infinite".to_string(), samples.clone())
            }
            MaxIrreducibles::Uncountable(w) => {
                (format!("uncountable (fibers of {w})"), Vec::new())
            }
            MaxIrreducibles::Unknown(r) => (format!("unknown ({r})"), Vec::new()),
        };
        OrbitJson {
            status: match &o.status {
                OrbitStatus::DenseOrbitExists => "dense orbit exists".into(),
                OrbitStatus::NoDenseOrbit => "no dense orbit".into(),
                OrbitStatus::Undecided(r) => format!("undecided ({r})"),
            },
            invariant: o.invariant.as_ref().map(WitnessJson::from),
            certificate: o.certificate.clone(),
            max_irreducibles,
            periodic_samples,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleJson {
    pub rule: String,
    pub statement: String,
    pub inputs: Vec<String>,
}

impl RuleJson {
    pub fn from(r: &RuleApplication) -> Self {
        RuleJson {
            rule: r.rule.to_string(),
            statement: r.statement.to_string(),
            inputs: r.inputs.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegistryJson {
    pub name: String,
    pub tag: String,
    pub facts: Vec<String>,
}

impl RegistryJson {
    pub fn from(r: &RegistryEntry) -> Self {
        RegistryJson {
            name: r.name.to_string(),
            tag: r.tag.to_string(),
            facts: r.facts.iter().map(|f| f.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DMJson {
    pub schema: String,
    pub ring: String,
    pub subject: String,
    pub field_convention: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth: Option<GrowthJson>,
    pub orbits: OrbitJson,
    pub zero_primitive: String,
    pub zero_locally_closed: String,
    pub zero_rational: String,
    pub dm_verdict: String,
    pub rule_trace: Vec<RuleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub registry: Option<RegistryJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub alarms: Vec<String>,
}

fn verdict_str(v: &Verdict) -> String {
    v.to_string()
}

impl DMJson {
    pub fn from(r: &DMReport) -> Self {
        DMJson {
            schema: SCHEMA_VERSION.into(),
            ring: r.ring.to_string(),
            subject: r.subject.clone(),
            field_convention: r.field_convention.to_string(),
            growth: r.growth.as_ref().map(GrowthJson::from),
            orbits: OrbitJson::from(&r.orbits),
            zero_primitive: verdict_str(&r.zero_primitive),
            zero_locally_closed: verdict_str(&r.zero_locally_closed),
            zero_rational: verdict_str(&r.zero_rational),
            dm_verdict: match &r.dm {
                DMVerdict::Holds => "holds".into(),
                DMVerdict::Fails(w) => format!("fails ({w})"),
                DMVerdict::Unknown(w) => format!("unknown ({w})"),
            },
            rule_trace: r.rule_trace.iter().map(RuleJson::from).collect(),
            registry: r.registry.as_ref().map(RegistryJson::from),
            alarms: r.alarms.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GKJson {
    pub schema: String,
    pub dims: Vec<String>,
    pub classification: String,
    pub residual_third_differences: Vec<String>,
    pub ratio_threshold: String,
    pub tail_samples: usize,
    pub polytope_vertices: Vec<[String; 2]>,
}

impl GKJson {
    pub fn from(p: &GKProfile) -> Self {
        GKJson {
            schema: SCHEMA_VERSION.into(),
            dims: p.dims.iter().map(|d| d.to_string()).collect(),
            classification: match &p.classification {
                GKClassification::Polynomial { fitted_degree } => {
                    format!("polynomial (fitted degree {fitted_degree})")
                }
                GKClassification::Exponential { base_lower_bound } => {
                    format!("exponential (base >= {})", rational_str(base_lower_bound))
                }
            },
            residual_third_differences: p.residuals.iter().map(|d| d.to_string()).collect(),
            ratio_threshold: rational_str(&p.ratio_threshold),
            tail_samples: p.tail_samples,
            polytope_vertices: p
                .generator_polytope
                .vertices()
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub schema: String,
    pub period: u32,
    pub fixed_lattice_basis: Vec<Vec<String>>,
    pub scalars: Vec<String>,
    pub invariant_exponents: Vec<Vec<String>>,
    pub witnesses: Vec<WitnessJson>,
}

impl InvariantsJson {
    pub fn from(r: &MonomialInvariantReport) -> Self {
        InvariantsJson {
            schema: SCHEMA_VERSION.into(),
            period: r.period,
            fixed_lattice_basis: r
                .fixed_basis
                .vectors()
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            scalars: r.scalars.iter().map(rational_str).collect(),
            invariant_exponents: r
                .invariant_exponents
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            witnesses: r.witnesses.iter().map(WitnessJson::from).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FibrationJson {
    pub function: String,
    pub base_action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_invariant: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_invariant: Option<WitnessJson>,
    pub semi_invariant: bool,
}

impl FibrationJson {
    pub fn from(r: &FibrationReport) -> Self {
        FibrationJson {
            function: r.function.display_with(&["z", "w"]).to_string(),
            base_action: format!(
                "w -> {}*w + {}",
                rational_str(&r.base_beta),
                rational_str(&r.base_gamma)
            ),
            base_order: r.base_order,
            power_invariant: r.power_invariant.as_ref().map(WitnessJson::from),
            sigma_invariant: r.sigma_invariant.as_ref().map(WitnessJson::from),
            semi_invariant: r.semi_invariant,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorDirectionJson {
    pub cocharacter: Vec<String>,
    pub character: Vec<i64>,
    pub period: u32,
    pub sign: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    pub family_infinite: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorsJson {
    pub schema: String,
    pub all_directions_periodic: bool,
    pub directions: Vec<DivisorDirectionJson>,
    pub infinitely_many: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl DivisorsJson {
    pub fn from(r: &PeriodicDivisorReport) -> Self {
        DivisorsJson {
            schema: SCHEMA_VERSION.into(),
            all_directions_periodic: r.all_directions_periodic,
            directions: r
                .directions
                .iter()
                .map(|d: &DivisorDirection| DivisorDirectionJson {
                    cocharacter: d.cocharacter.iter().map(|c| c.to_string()).collect(),
                    character: d.character.clone(),
                    period: d.period,
                    sign: d.sign,
                    scalar: d.scalar.as_ref().map(rational_str),
                    family_infinite: d.family_infinite,
                })
                .collect(),
            infinitely_many: r.infinitely_many,
            witness: r.witness.as_ref().map(WitnessJson::from),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedPointsJson {
    pub schema: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eliminant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_with_multiplicity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_count: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub rational_points: Vec<[String; 2]>,
}

impl FixedPointsJson {
    pub fn from(r: &FixedPoints) -> Self {
        match r {
            FixedPoints::PositiveDimensional { description } => FixedPointsJson {
                schema: SCHEMA_VERSION.into(),
                kind: "positive-dimensional".into(),
                description: Some(description.clone()),
                eliminant: None,
                count_with_multiplicity: None,
                distinct_count: None,
                rational_points: Vec::new(),
            },
            FixedPoints::Empty => FixedPointsJson {
                schema: SCHEMA_VERSION.into(),
                kind: "empty".into(),
                description: None,
                eliminant: None,
                count_with_multiplicity: Some(0),
                distinct_count: Some(0),
                rational_points: Vec::new(),
            },
            FixedPoints::ZeroDimensional {
                eliminant,
                eliminant_var,
                count_with_multiplicity,
                distinct_count,
                rational_points,
            } => FixedPointsJson {
                schema: SCHEMA_VERSION.into(),
                kind: "zero-dimensional".into(),
                description: Some(format!(
                    "eliminant in {}",
                    if *eliminant_var == 0 { "z" } else { "w" }
                )),
                eliminant: Some(eliminant.to_int_primitive().to_string()),
                count_with_multiplicity: Some(*count_with_multiplicity),
                distinct_count: *distinct_count,
                rational_points: rational_points
                    .iter()
                    .map(|(a, b)| [rational_str(a), rational_str(b)])
                    .collect(),
            },
        }
    }
}
