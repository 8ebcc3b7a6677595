//! JSON input format: automorphism specifications plus resource options.

use crate::poly_parse::parse_poly;
use anyhow::{anyhow, bail, Context, Result};
use oredyn::automorphism::{AffineFactor, ElementaryFactor, PlaneFactor};
use oredyn::growth::Automorphism;
use oredyn::{parse_rational, IntMat, MonomialAutomorphism, PlaneAutomorphism, RatPoly};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub family: String,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub coeffs: Option<Vec<String>>,
    #[serde(default)]
    pub word: Option<Vec<WordFactor>>,
    #[serde(default)]
    pub polys: Option<[String; 2]>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordFactor {
    #[serde(default)]
    pub elementary: Option<ElementarySpec>,
    #[serde(default)]
    pub affine: Option<AffineSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementarySpec {
    pub alpha: String,
    pub p: String,
    pub beta: String,
    pub gamma: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineSpec {
    pub linear: [[String; 2]; 2],
    pub translation: [String; 2],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    /// Profile depth for the growth filtration.
    #[serde(default)]
    pub depth: Option<u32>,
    /// Degree bound for the brute-force invariant search.
    #[serde(default)]
    pub degree_bound: Option<u32>,
    /// Period cap for invariant and divisor searches.
    #[serde(default)]
    pub period_cap: Option<u32>,
    /// Torsion order bound for periodic-point enumeration.
    #[serde(default)]
    pub torsion_bound: Option<u32>,
    /// Generator polytope for the growth profile, as vertex pairs.
    #[serde(default)]
    pub polytope: Option<Vec<[i64; 2]>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            depth: None,
            degree_bound: None,
            period_cap: None,
            torsion_bound: None,
            polytope: None,
        }
    }
}

/// Hard caps; requests beyond these are resource errors.
pub const MAX_DEPTH: u32 = 40;
pub const MAX_DEGREE_BOUND: u32 = 6;
pub const MAX_PERIOD_CAP: u32 = 24;
pub const MAX_TORSION_BOUND: u32 = 20;

#[derive(Debug, Clone)]
pub struct Caps {
    pub depth: u32,
    pub degree_bound: u32,
    pub period_cap: u32,
    pub torsion_bound: u32,
    pub polytope: Option<Vec<[i64; 2]>>,
}

impl Caps {
    pub fn resolve(options: &Options, cli: &crate::CapArgs) -> Result<Caps> {
        let depth = cli.depth.or(options.depth).unwrap_or(12);
        let degree_bound = cli.degree_bound.or(options.degree_bound).unwrap_or(3);
        let period_cap = cli.period_cap.or(options.period_cap).unwrap_or(6);
        let torsion_bound = cli.torsion_bound.or(options.torsion_bound).unwrap_or(6);
        if depth > MAX_DEPTH {
            bail!("resource cap exceeded (depth): {depth} > {MAX_DEPTH}");
        }
        if degree_bound > MAX_DEGREE_BOUND {
            bail!("resource cap exceeded (degree-bound): {degree_bound} > {MAX_DEGREE_BOUND}");
        }
        if period_cap > MAX_PERIOD_CAP {
            bail!("resource cap exceeded (period-cap): {period_cap} > {MAX_PERIOD_CAP}");
        }
        if torsion_bound > MAX_TORSION_BOUND {
            bail!("resource cap exceeded (torsion-bound): {torsion_bound} > {MAX_TORSION_BOUND}");
        }
        Ok(Caps {
            depth,
            degree_bound,
            period_cap,
            torsion_bound,
            polytope: options.polytope.clone(),
        })
    }
}

/// Parse and validate an input document.
pub fn parse_input(text: &str) -> Result<(Automorphism, Options)> {
    let spec: InputSpec =
        serde_json::from_str(text).context("malformed JSON input")?;
    let s = match spec.family.as_str() {
        "monomial" => {
            let rows = spec
                .matrix
                .ok_or_else(|| anyhow!("monomial family needs a `matrix` field"))?;
            let n = rows.len();
            if n == 0 || rows.iter().any(|r| r.len() != n) {
                bail!("matrix must be square and nonempty");
            }
            let mat = IntMat::from_i64(
                &rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
            )
            .map_err(|e| anyhow!("{e}"))?;
            let coeffs = match spec.coeffs {
                None => vec![oredyn::rat(1); n],
                Some(cs) => {
                    if cs.len() != n {
                        bail!("coeffs length {} does not match matrix size {n}", cs.len());
                    }
                    cs.iter()
                        .map(|c| parse_rational(c).map_err(|e| anyhow!("{e}")))
                        .collect::<Result<Vec<_>>>()?
                }
            };
            Automorphism::Monomial(
                MonomialAutomorphism::new(mat, coeffs).map_err(|e| anyhow!("{e}"))?,
            )
        }
        "plane_word" => {
            let word = spec
                .word
                .ok_or_else(|| anyhow!("plane_word family needs a `word` field"))?;
            let factors = word
                .iter()
                .map(parse_factor)
                .collect::<Result<Vec<_>>>()?;
            Automorphism::Plane(PlaneAutomorphism::from_word(factors))
        }
        "plane_poly" => {
            let [f_text, g_text] = spec
                .polys
                .ok_or_else(|| anyhow!("plane_poly family needs a `polys` field"))?;
            let vars = [("z", 0usize), ("w", 1usize)];
            let f = parse_poly(&f_text, &vars, 2)?;
            let g = parse_poly(&g_text, &vars, 2)?;
            Automorphism::Plane(
                PlaneAutomorphism::from_pair(f, g).map_err(|e| anyhow!("{e}"))?,
            )
        }
        other => bail!("unknown family `{other}` (expected monomial, plane_word, plane_poly)"),
    };
    Ok((s, spec.options))
}

fn parse_factor(w: &WordFactor) -> Result<PlaneFactor> {
    match (&w.elementary, &w.affine) {
        (Some(e), None) => {
            let vars = [("w", 0usize)];
            let p_laurent = parse_poly(&e.p, &vars, 1)?;
            if !p_laurent.is_polynomial() {
                bail!("elementary factor polynomial must have nonnegative exponents");
            }
            let p: RatPoly = p_laurent.to_unipoly().map_err(|e| anyhow!("{e}"))?;
            Ok(PlaneFactor::Elementary(
                ElementaryFactor::new(
                    parse_rational(&e.alpha).map_err(|e| anyhow!("{e}"))?,
                    p,
                    parse_rational(&e.beta).map_err(|e| anyhow!("{e}"))?,
                    parse_rational(&e.gamma).map_err(|e| anyhow!("{e}"))?,
                )
                .map_err(|e| anyhow!("{e}"))?,
            ))
        }
        (None, Some(a)) => {
            let lin = |i: usize, j: usize| parse_rational(&a.linear[i][j]).map_err(|e| anyhow!("{e}"));
            let linear = [[lin(0, 0)?, lin(0, 1)?], [lin(1, 0)?, lin(1, 1)?]];
            let translation = [
                parse_rational(&a.translation[0]).map_err(|e| anyhow!("{e}"))?,
                parse_rational(&a.translation[1]).map_err(|e| anyhow!("{e}"))?,
            ];
            Ok(PlaneFactor::Affine(
                AffineFactor::new(linear, translation).map_err(|e| anyhow!("{e}"))?,
            ))
        }
        _ => bail!("each word factor must have exactly one of `elementary` or `affine`"),
    }
}
