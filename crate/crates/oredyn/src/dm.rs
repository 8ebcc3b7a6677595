//! Dixmier-Moeglin verdicts for the prime `(0)` of the skew extension
//! `U = S[t; sigma]` and the skew-Laurent extension `T = S[t, t^-1; sigma]`.
//!
//! Every Yes/No verdict is a rule application over stored certificates,
//! never a bare boolean; the rules are classical facts about these rings
//! (primitivity criteria of Jordan and of Leroy-Matczuk, the height-one
//! cardinality dichotomy, and the finite-growth theorem for dimension at
//! most two) and each application is recorded in a trace that can be
//! replayed. Verdicts are asserted for the base change of the data to an
//! uncountable algebraically closed field of characteristic zero; over the
//! rationals the engine certifies invariant-function criteria, which are
//! stable under that base change.

use crate::automorphism::{MonomialAutomorphism, PlaneAutomorphism};
use crate::dynamics::{classify_orbits, MaxIrreducibles, OrbitClassification, OrbitStatus};
use crate::growth::{growth_data, Automorphism, GrowthData, GrowthType};
use crate::{RatLaurent, Result};
use num_traits::One;
use std::fmt;

/// Which ring the verdict concerns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingKind {
    /// `T = S[t, t^-1; sigma]`.
    SkewLaurent,
    /// `U = S[t; sigma]`.
    Skew,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::SkewLaurent => write!(f, "T = S[t, t^-1; sigma]"),
            RingKind::Skew => write!(f, "U = S[t; sigma]"),
        }
    }
}

/// A three-valued verdict with reasons on the unknown branch.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Yes,
    No,
    Unknown(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "yes"),
            Verdict::No => write!(f, "no"),
            Verdict::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DMVerdict {
    Holds,
    Fails(String),
    Unknown(String),
}

impl fmt::Display for DMVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DMVerdict::Holds => write!(f, "holds"),
            DMVerdict::Fails(which) => write!(f, "fails ({which})"),
            DMVerdict::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

/// One applied rule: identifier, statement, and the certificate inputs it
/// consumed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleApplication {
    pub rule: &'static str,
    pub statement: &'static str,
    pub inputs: Vec<String>,
}

/// A matched entry of the known-results registry; verdicts carried here are
/// literature facts, tagged as cited, and never overwrite computed
/// certificates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub tag: &'static str,
    pub facts: Vec<&'static str>,
    pub t_primitive: Option<bool>,
    pub u_primitive: Option<bool>,
}

/// The full verdict record for one ring.
#[derive(Clone, Debug)]
pub struct DMReport {
    pub ring: RingKind,
    pub subject: String,
    pub field_convention: &'static str,
    pub growth: Option<GrowthData>,
    pub growth_type: Option<GrowthType>,
    pub orbits: OrbitClassification,
    pub zero_primitive: Verdict,
    pub zero_locally_closed: Verdict,
    pub zero_rational: Verdict,
    pub dm: DMVerdict,
    pub rule_trace: Vec<RuleApplication>,
    pub registry: Option<RegistryEntry>,
    pub alarms: Vec<String>,
}

const FIELD_CONVENTION: &str =
    "verdicts concern the base change of the data to an uncountable algebraically \
     closed field of characteristic zero; invariant-function certificates computed \
     over the rationals transfer across that base change";

const RULE_T_PRIMITIVE: RuleApplication = RuleApplication {
    rule: "t-primitive-dense-orbit",
    statement: "for a commutative domain S, the skew-Laurent ring T is primitive \
                exactly when the automorphism has a dense orbit (Jordan's \
                primitivity criterion)",
    inputs: Vec::new(),
};

const RULE_U_PRIMITIVE_GOOD: RuleApplication = RuleApplication {
    rule: "u-primitive-good-dense-orbits",
    statement: "when the set of points on dense orbits is open (in particular \
                when there are none, or when the growth type is finite in \
                dimension at most two), the skew ring U is primitive exactly \
                when the automorphism has a dense orbit (speciality criterion \
                of Leroy and Matczuk, specialized)",
    inputs: Vec::new(),
};

const RULE_U_SPECIAL_OPEN: RuleApplication = RuleApplication {
    rule: "u-primitive-speciality-open",
    statement: "outside the good-dense-orbits case, primitivity of U requires \
                deciding speciality of the automorphism, which the implemented \
                criteria do not decide",
    inputs: Vec::new(),
};

const RULE_LC_FINITE: RuleApplication = RuleApplication {
    rule: "locally-closed-height-one-cardinality",
    statement: "(0) is locally closed exactly when finitely many height-one \
                primes lie above it; height-one homogeneous primes correspond \
                to maximal invariant-irreducible subsets",
    inputs: Vec::new(),
};

const RULE_RATIONAL_CENTER: RuleApplication = RuleApplication {
    rule: "rational-center-invariants",
    statement: "(0) is rational exactly when the center of the graded quotient \
                ring is algebraic over the base field; a nonconstant invariant \
                rational function is a transcendental central element, and with \
                no invariant for any power the center reduces to the base field",
    inputs: Vec::new(),
};

const RULE_DM_FINITE_GROWTH: RuleApplication = RuleApplication {
    rule: "dm-finite-growth",
    statement: "a skew or skew-Laurent extension of a commutative algebra of \
                dimension at most two over an uncountable algebraically closed \
                field of characteristic zero satisfies the Dixmier-Moeglin \
                equivalence whenever it has finite Gelfand-Kirillov dimension",
    inputs: Vec::new(),
};

fn rule_with(base: &RuleApplication, inputs: Vec<String>) -> RuleApplication {
    RuleApplication {
        rule: base.rule,
        statement: base.statement,
        inputs,
    }
}

/// Exact-match registry of literature examples.
pub fn known_results_registry(s: &Automorphism) -> Option<RegistryEntry> {
    match s {
        Automorphism::Monomial(m) => {
            if m.arity() != 2 || !m.coeffs().iter().all(|c| c.is_one()) {
                return None;
            }
            let entries = |mat: &crate::IntMat| -> Vec<i64> {
                (0..2)
                    .flat_map(|i| (0..2).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        use num_traits::ToPrimitive;
                        mat[(i, j)].to_i64().unwrap_or(i64::MAX)
                    })
                    .collect()
            };
            let e = entries(m.matrix());
            if e == [2, 1, 1, 1] {
                return Some(RegistryEntry {
                    name: "Lorenz skew-Laurent example (u -> u^2 v, v -> u v)",
                    tag: "cited",
                    facts: vec![
                        "T fails the Dixmier-Moeglin equivalence: (0) is primitive but \
                         not locally closed",
                        "T has exponential growth",
                    ],
                    t_primitive: Some(true),
                    u_primitive: None,
                });
            }
            if e == [0, 1, 1, -1] {
                return Some(RegistryEntry {
                    name: "Jordan example (u -> v, v -> u v^-1)",
                    tag: "cited",
                    facts: vec![
                        "no periodic curves; a countably infinite set of periodic points",
                        "the automorphism is not special, so U = S[t; sigma] is not \
                         primitive, while T = S[t, t^-1; sigma] is primitive",
                        "T and U have exponential growth",
                    ],
                    t_primitive: Some(true),
                    u_primitive: Some(false),
                });
            }
            None
        }
        Automorphism::Plane(p) => {
            let z = RatLaurent::var(2, 0);
            let w = RatLaurent::var(2, 1);
            let henon = (z.pow(2).add(&RatLaurent::one(2)).sub(&w), z);
            if *p.pair() == henon {
                return Some(RegistryEntry {
                    name: "quadratic Henon automorphism (z^2 + 1 - w, z)",
                    tag: "cited",
                    facts: vec![
                        "Henon maps have countably many periodic points and no \
                         periodic curves; T is primitive and (0) is not locally closed",
                        "whether the map is special (hence whether U is primitive) is \
                         not settled",
                    ],
                    t_primitive: Some(true),
                    u_primitive: None,
                });
            }
            None
        }
    }
}

fn subject_of(s: &Automorphism) -> String {
    match s {
        Automorphism::Monomial(m) => format!("monomial automorphism {m}"),
        Automorphism::Plane(p) => format!("plane automorphism {p}"),
    }
}

/// Analyze the skew-Laurent ring `T = S[t, t^-1; sigma]`.
pub fn analyze_t(s: &Automorphism) -> Result<DMReport> {
    analyze(s, RingKind::SkewLaurent)
}

/// Analyze the skew ring `U = S[t; sigma]`.
pub fn analyze_u(s: &Automorphism) -> Result<DMReport> {
    analyze(s, RingKind::Skew)
}

fn analyze(s: &Automorphism, ring: RingKind) -> Result<DMReport> {
    let mut trace: Vec<RuleApplication> = Vec::new();
    let growth = growth_data(s).ok();
    let growth_type = growth.as_ref().map(|g| g.growth_type());
    let orbits = classify_orbits(s);
    let registry = known_results_registry(s);
    let mut alarms = Vec::new();

    // Primitivity.
    let zero_primitive = match ring {
        RingKind::SkewLaurent => match &orbits.status {
            OrbitStatus::DenseOrbitExists => {
                trace.push(rule_with(
                    &RULE_T_PRIMITIVE,
                    vec![format!(
                        "dense-orbit certificate: {}",
                        orbits.certificate.clone().unwrap_or_default()
                    )],
                ));
                Verdict::Yes
            }
            OrbitStatus::NoDenseOrbit => {
                trace.push(rule_with(
                    &RULE_T_PRIMITIVE,
                    vec![format!(
                        "invariant witness: {} (period {})",
                        orbits.invariant.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                        orbits.invariant.as_ref().map(|w| w.period).unwrap_or(0)
                    )],
                ));
                Verdict::No
            }
            OrbitStatus::Undecided(r) => Verdict::Unknown(r.clone()),
        },
        RingKind::Skew => {
            let good_dense_orbits = matches!(orbits.status, OrbitStatus::NoDenseOrbit)
                || matches!(growth_type, Some(GrowthType::Finite))
                || matches!(orbits.max_irreducibles, MaxIrreducibles::Finite(_));
            match (&orbits.status, good_dense_orbits) {
                (OrbitStatus::NoDenseOrbit, _) => {
                    trace.push(rule_with(
                        &RULE_U_PRIMITIVE_GOOD,
                        vec!["no dense orbit (invariant witness stored)".into()],
                    ));
                    Verdict::No
                }
                (OrbitStatus::DenseOrbitExists, true) => {
                    trace.push(rule_with(
                        &RULE_U_PRIMITIVE_GOOD,
                        vec!["dense orbit with good-dense-orbits precondition".into()],
                    ));
                    Verdict::Yes
                }
                (OrbitStatus::DenseOrbitExists, false) => {
                    if let Some(reg) = &registry {
                        if let Some(up) = reg.u_primitive {
                            trace.push(rule_with(
                                &RULE_U_SPECIAL_OPEN,
                                vec![format!("registry overlay: {} [{}]", reg.name, reg.tag)],
                            ));
                            if up {
                                Verdict::Yes
                            } else {
                                Verdict::No
                            }
                        } else {
                            trace.push(rule_with(&RULE_U_SPECIAL_OPEN, vec![]));
                            Verdict::Unknown(
                                "speciality undecidable by the implemented criteria".into(),
                            )
                        }
                    } else {
                        trace.push(rule_with(&RULE_U_SPECIAL_OPEN, vec![]));
                        Verdict::Unknown(
                            "speciality undecidable by the implemented criteria".into(),
                        )
                    }
                }
                (OrbitStatus::Undecided(r), _) => Verdict::Unknown(r.clone()),
            }
        }
    };

    // Local closedness from the cardinality of maximal invariant-irreducible
    // subsets.
    let zero_locally_closed = match &orbits.max_irreducibles {
        MaxIrreducibles::Finite(list) => {
            trace.push(rule_with(
                &RULE_LC_FINITE,
                vec![format!("finitely many maximal invariant-irreducibles: {list:?}")],
            ));
            Verdict::Yes
        }
        MaxIrreducibles::CountablyInfinite { samples, .. } => {
            trace.push(rule_with(
                &RULE_LC_FINITE,
                vec![format!(
                    "countably infinite periodic family; first samples {samples:?}"
                )],
            ));
            Verdict::No
        }
        MaxIrreducibles::Uncountable(w) => {
            trace.push(rule_with(
                &RULE_LC_FINITE,
                vec![format!(
                    "uncountable fiber family of the invariant {w} (period {})",
                    w.period
                )],
            ));
            Verdict::No
        }
        MaxIrreducibles::Unknown(r) => Verdict::Unknown(r.clone()),
    };

    // Rationality from the center of the graded quotient.
    let zero_rational = match &orbits.status {
        OrbitStatus::NoDenseOrbit => {
            trace.push(rule_with(
                &RULE_RATIONAL_CENTER,
                vec![format!(
                    "central transcendental invariant {}",
                    orbits.invariant.as_ref().map(|w| w.to_string()).unwrap_or_default()
                )],
            ));
            Verdict::No
        }
        OrbitStatus::DenseOrbitExists => {
            trace.push(rule_with(
                &RULE_RATIONAL_CENTER,
                vec!["no invariant for any power; automorphism of infinite order".into()],
            ));
            Verdict::Yes
        }
        OrbitStatus::Undecided(r) => Verdict::Unknown(r.clone()),
    };

    // The Dixmier-Moeglin verdict.
    let dm = match &growth_type {
        Some(GrowthType::Finite) => {
            trace.push(rule_with(
                &RULE_DM_FINITE_GROWTH,
                vec![format!(
                    "growth certificate: {:?}",
                    growth.as_ref().map(|g| &g.certificate)
                )],
            ));
            DMVerdict::Holds
        }
        _ => {
            let named = match (&zero_primitive, &zero_locally_closed, &zero_rational) {
                (Verdict::Yes, Verdict::No, _) => {
                    Some("primitive but not locally closed".to_string())
                }
                (Verdict::No, _, Verdict::Yes) => {
                    Some("rational but not primitive".to_string())
                }
                (_, Verdict::No, Verdict::Yes) => {
                    Some("rational but not locally closed".to_string())
                }
                (Verdict::No, Verdict::Yes, _) => {
                    Some("locally closed but not primitive".to_string())
                }
                _ => None,
            };
            match named {
                Some(which) => DMVerdict::Fails(which),
                None => match &growth_type {
                    None => DMVerdict::Unknown(
                        "growth data unavailable for this input".into(),
                    ),
                    _ => DMVerdict::Unknown(
                        "no implication among the three conditions is decided".into(),
                    ),
                },
            }
        }
    };

    // Registry consistency alarms.
    if let Some(reg) = &registry {
        let check = |cited: Option<bool>, computed: &Verdict, field: &str| -> Option<String> {
            match (cited, computed) {
                (Some(true), Verdict::No) | (Some(false), Verdict::Yes) => Some(format!(
                    "registry mismatch on {field}: cited {:?} vs computed {computed}",
                    cited
                )),
                _ => None,
            }
        };
        let cited = match ring {
            RingKind::SkewLaurent => reg.t_primitive,
            RingKind::Skew => reg.u_primitive,
        };
        if let Some(alarm) = check(cited, &zero_primitive, "primitivity") {
            alarms.push(alarm);
        }
    }

    Ok(DMReport {
        ring,
        subject: subject_of(s),
        field_convention: FIELD_CONVENTION,
        growth,
        growth_type,
        orbits,
        zero_primitive,
        zero_locally_closed,
        zero_rational,
        dm,
        rule_trace: trace,
        registry,
        alarms,
    })
}

impl DMReport {
    /// Rule soundness audit: every Yes/No verdict carries at least one trace
    /// entry, and replaying the analysis reproduces every verdict.
    pub fn audit(&self, s: &Automorphism) -> std::result::Result<(), String> {
        let has_rule = |rule: &str| self.rule_trace.iter().any(|r| r.rule == rule);
        let check = |v: &Verdict, rule: &str, field: &str| -> std::result::Result<(), String> {
            match v {
                Verdict::Yes | Verdict::No => {
                    if has_rule(rule) {
                        Ok(())
                    } else {
                        Err(format!("verdict {field} lacks its rule {rule}"))
                    }
                }
                Verdict::Unknown(_) => Ok(()),
            }
        };
        check(
            &self.zero_primitive,
            match self.ring {
                RingKind::SkewLaurent => "t-primitive-dense-orbit",
                RingKind::Skew => {
                    if matches!(self.zero_primitive, Verdict::Unknown(_)) {
                        "u-primitive-speciality-open"
                    } else if has_rule("u-primitive-good-dense-orbits") {
                        "u-primitive-good-dense-orbits"
                    } else {
                        "u-primitive-speciality-open"
                    }
                }
            },
            "primitive",
        )?;
        check(
            &self.zero_locally_closed,
            "locally-closed-height-one-cardinality",
            "locally closed",
        )?;
        check(&self.zero_rational, "rational-center-invariants", "rational")?;
        if matches!(self.dm, DMVerdict::Holds) && !has_rule("dm-finite-growth") {
            return Err("DM Holds without the finite-growth rule".into());
        }
        // Replay.
        let again = analyze(s, self.ring).map_err(|e| e.to_string())?;
        if again.zero_primitive != self.zero_primitive
            || again.zero_locally_closed != self.zero_locally_closed
            || again.zero_rational != self.zero_rational
            || again.dm != self.dm
        {
            return Err("replayed analysis disagrees with the stored report".into());
        }
        // Trichotomy consistency.
        match (&self.orbits.max_irreducibles, &self.zero_locally_closed) {
            (MaxIrreducibles::Finite(_), Verdict::No)
            | (MaxIrreducibles::CountablyInfinite { .. }, Verdict::Yes)
            | (MaxIrreducibles::Uncountable(_), Verdict::Yes) => {
                return Err("cardinality/locally-closed mapping violated".into())
            }
            _ => {}
        }
        if matches!(self.orbits.max_irreducibles, MaxIrreducibles::Uncountable(_))
            && self.zero_rational == Verdict::Yes
        {
            return Err("uncountable family with rational (0)".into());
        }
        Ok(())
    }
}

/// Convenience wrappers over the two automorphism families.
pub fn analyze_t_monomial(s: &MonomialAutomorphism) -> Result<DMReport> {
    analyze_t(&Automorphism::Monomial(s.clone()))
}

pub fn analyze_u_monomial(s: &MonomialAutomorphism) -> Result<DMReport> {
    analyze_u(&Automorphism::Monomial(s.clone()))
}

pub fn analyze_t_plane(s: &PlaneAutomorphism) -> Result<DMReport> {
    analyze_t(&Automorphism::Plane(s.clone()))
}

pub fn analyze_u_plane(s: &PlaneAutomorphism) -> Result<DMReport> {
    analyze_u(&Automorphism::Plane(s.clone()))
}
