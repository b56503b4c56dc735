//! Read-only reference tables, embedded at build time and checked against
//! their SHA-256 digest on first use.

use crate::polyjson::{PolyJson, PolyJsonError, RingTag};
use harborth_algebra::dyadic::parse_decimal;
use harborth_algebra::{MultiPoly, QuadInt, ZPoly};
use num_rational::BigRational;
use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::sync::OnceLock;
use thiserror::Error;

const GOLDEN_JSON: &str = include_str!("../data/golden.json");
const GOLDEN_SHA256: &str = include_str!("../data/golden.sha256");

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("golden table checksum mismatch: expected {expected}, found {found}")]
    Checksum { expected: String, found: String },
    #[error("golden table unreadable: {0}")]
    Json(#[from] serde_json::Error),
    #[error("no golden entry named {0}")]
    Missing(String),
    #[error(transparent)]
    Poly(#[from] PolyJsonError),
    #[error("golden relation {0} does not parse")]
    Relation(String),
}

#[derive(Debug, Deserialize)]
pub struct NamedPoly {
    pub name: String,
    #[serde(flatten)]
    pub poly: PolyJson,
}

#[derive(Debug, Deserialize)]
pub struct Relation {
    pub name: String,
    pub vars: Vec<String>,
    pub ring: RingTag,
    pub poly: String,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct Numerics {
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "B")]
    pub b: [String; 2],
    #[serde(rename = "D")]
    pub d: [String; 2],
    #[serde(rename = "E")]
    pub e: [String; 2],
    #[serde(rename = "F")]
    pub f: [String; 2],
    #[serde(rename = "G")]
    pub g: [String; 2],
    #[serde(rename = "H")]
    pub h: [String; 2],
    #[serde(rename = "J")]
    pub j: [String; 2],
    pub tolerance: String,
}

#[derive(Debug, Deserialize)]
pub struct Extremal {
    pub b_minpoly: String,
    pub b_approx: String,
    pub phi_at_0_deg: String,
    pub phi_at_b_deg: String,
    pub tolerance: String,
}

#[derive(Debug, Deserialize)]
pub struct Stage5 {
    pub total_degree: usize,
    pub factor_degrees: Vec<usize>,
}

#[derive(Debug, Deserialize)]
pub struct SignatureGolden {
    pub real: usize,
    pub complex_pairs: usize,
    pub even_part_real: usize,
    pub even_part_complex_pairs: usize,
}

#[derive(Debug, Deserialize)]
pub struct GoldenTable {
    pub minpolys: Vec<NamedPoly>,
    pub relations: Vec<Relation>,
    pub numerics: Numerics,
    pub extremal: Extremal,
    pub stage5: Stage5,
    pub signature: SignatureGolden,
}

/// Names of the coordinate polynomials, in report order.
pub const MINPOLY_NAMES: [&str; 14] = [
    "P_T", "P_yD", "P_yE", "P_yF", "P_yG", "P_yH", "P_yJ", "P_xA", "P_xB", "P_xC", "P_xD", "P_xE", "P_xF", "P_xG",
];

pub fn checksum() -> String {
    hex(&Sha256::digest(GOLDEN_JSON.as_bytes()))
}

fn hex(b: &[u8]) -> String {
    b.iter().map(|x| format!("{x:02x}")).collect()
}

fn load() -> Result<GoldenTable, GoldenError> {
    let expected = GOLDEN_SHA256.split_whitespace().next().unwrap_or("").to_string();
    let found = checksum();
    if expected != found {
        return Err(GoldenError::Checksum { expected, found });
    }
    Ok(serde_json::from_str(GOLDEN_JSON)?)
}

impl GoldenTable {
    pub fn get() -> &'static GoldenTable {
        static TABLE: OnceLock<GoldenTable> = OnceLock::new();
        TABLE.get_or_init(|| load().expect("embedded golden table"))
    }

    pub fn minpoly(&self, name: &str) -> Result<ZPoly, GoldenError> {
        let e = self.minpolys.iter().find(|m| m.name == name).ok_or_else(|| GoldenError::Missing(name.into()))?;
        Ok(e.poly.to_z()?)
    }

    pub fn minpoly_json(&self, name: &str) -> Option<&PolyJson> {
        self.minpolys.iter().find(|m| m.name == name).map(|m| &m.poly)
    }

    pub fn relation(&self, name: &str) -> Result<MultiPoly<QuadInt>, GoldenError> {
        let r = self.relations.iter().find(|m| m.name == name).ok_or_else(|| GoldenError::Missing(name.into()))?;
        let vars: Vec<&str> = r.vars.iter().map(|s| s.as_str()).collect();
        MultiPoly::parse(&r.poly, &vars).map_err(|_| GoldenError::Relation(name.into()))
    }

    /// Published 15-digit coordinates of a point (`"B"`, `"D"`, …, `"J"`).
    pub fn point(&self, name: &str) -> Result<(BigRational, BigRational), GoldenError> {
        let n = &self.numerics;
        let p = match name {
            "B" => &n.b,
            "D" => &n.d,
            "E" => &n.e,
            "F" => &n.f,
            "G" => &n.g,
            "H" => &n.h,
            "J" => &n.j,
            _ => return Err(GoldenError::Missing(name.into())),
        };
        Ok((parse_decimal(&p[0]).unwrap(), parse_decimal(&p[1]).unwrap()))
    }

    pub fn tolerance(&self) -> BigRational {
        parse_decimal(&self.numerics.tolerance).unwrap()
    }
}
