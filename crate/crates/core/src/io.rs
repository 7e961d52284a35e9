//! File formats: resolution files, complex files, and unknown-assignment
//! files.
//!
//! Multiplicities and invariants are integers or expression strings that are
//! linear in named unknowns (`"30 - d"`). Serialization is canonical — field
//! order fixed, expressions printed in canonical form — so loading a file
//! written by this module and writing it again is byte-identical.

use crate::expr::{parse_constraint, parse_poly};
use crate::gorenstein::{CurveInvariants, GorensteinResolution};
use crate::liaison::GradedComplex;
use crate::poly::Poly;
use crate::{Error, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Integer or canonical expression string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum IntOrExpr {
    Int(i64),
    Expr(String),
}

impl IntOrExpr {
    pub fn to_poly(&self) -> Result<Poly, Error> {
        match self {
            IntOrExpr::Int(n) => Ok(Poly::int(*n)),
            IntOrExpr::Expr(s) => parse_poly(s),
        }
    }

    pub fn from_poly(p: &Poly) -> IntOrExpr {
        if let Some(c) = p.as_constant() {
            if c.is_integer() {
                if let Ok(n) = i64::try_from(c.numer().clone()) {
                    return IntOrExpr::Int(n);
                }
            }
        }
        IntOrExpr::Expr(p.to_string())
    }
}

/// One `{ "twist": a, "mult": m }` summand.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummandEntry {
    pub twist: i64,
    pub mult: IntOrExpr,
}

/// Degree and genus of the resolved curve.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InvariantsEntry {
    pub d: IntOrExpr,
    pub g: IntOrExpr,
}

/// A self-dual resolution with its curve invariants and extra constraints.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ResolutionFile {
    pub e: i64,
    pub pairs: Vec<SummandEntry>,
    pub invariants: InvariantsEntry,
    #[serde(default)]
    pub constraints: Vec<String>,
}

impl ResolutionFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schema types always serialize")
    }

    pub fn resolution(&self) -> Result<GorensteinResolution, Error> {
        let pairs = self
            .pairs
            .iter()
            .map(|p| Ok((p.twist, p.mult.to_poly()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        GorensteinResolution::new(self.e, pairs)
    }

    pub fn curve_invariants(&self) -> Result<CurveInvariants, Error> {
        Ok(CurveInvariants::new(
            self.invariants.d.to_poly()?,
            self.invariants.g.to_poly()?,
            self.e,
        ))
    }

    /// The extra constraints as polynomials equal to zero.
    pub fn extra_constraints(&self) -> Result<Vec<Poly>, Error> {
        self.constraints.iter().map(|s| parse_constraint(s)).collect()
    }

    pub fn from_parts(res: &GorensteinResolution, inv: &CurveInvariants, constraints: &[String]) -> Self {
        ResolutionFile {
            e: res.e,
            pairs: res
                .pairs
                .iter()
                .map(|p| SummandEntry { twist: p.a, mult: IntOrExpr::from_poly(&p.mult) })
                .collect(),
            invariants: InvariantsEntry {
                d: IntOrExpr::from_poly(&inv.degree),
                g: IntOrExpr::from_poly(&inv.genus),
            },
            constraints: constraints.to_vec(),
        }
    }
}

/// A three-term complex `{ "terms": [ F1, F2, F3 ] }`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexFile {
    pub terms: [Vec<SummandEntry>; 3],
}

impl ComplexFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schema types always serialize")
    }

    pub fn complex(&self) -> Result<GradedComplex, Error> {
        let term = |v: &[SummandEntry]| {
            v.iter()
                .map(|s| Ok((s.twist, s.mult.to_poly()?)))
                .collect::<Result<Vec<_>, Error>>()
        };
        Ok(GradedComplex::new(
            term(&self.terms[0])?,
            term(&self.terms[1])?,
            term(&self.terms[2])?,
        ))
    }

    pub fn from_complex(cx: &GradedComplex) -> Self {
        let term = |k: usize| {
            cx.term(k)
                .iter()
                .map(|s| SummandEntry { twist: s.twist, mult: IntOrExpr::from_poly(&s.mult) })
                .collect()
        };
        ComplexFile { terms: [term(0), term(1), term(2)] }
    }
}

/// Parses a flat `name=integer` assignment file (one entry per line; blank
/// lines and `#` comments allowed).
pub fn parse_assignments(text: &str) -> Result<BTreeMap<String, Rational>, Error> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((name, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                input: line.to_string(),
                reason: "expected `name=integer`".into(),
            });
        };
        let value: i64 = value.trim().parse().map_err(|_| Error::Parse {
            input: line.to_string(),
            reason: "value is not an integer".into(),
        })?;
        out.insert(name.trim().to_string(), crate::rat(value));
    }
    Ok(out)
}
