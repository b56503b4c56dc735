//! Lossless JSON for univariate polynomials:
//! `{"var": "T", "ring": "Z", "coeffs": ["-3", "0", "1"]}` with ascending
//! coefficients; over `Zsqrt3` each coefficient is a pair `["a", "b"]` for a+b√3.

use harborth_algebra::{QuadInt, ZPoly, Zs3Poly};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyJsonError {
    #[error("malformed polynomial JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad integer literal {0:?}")]
    Integer(String),
    #[error("coefficient shape does not match ring {0}")]
    Shape(String),
    #[error("polynomial over Zsqrt3 has irrational coefficients")]
    NotIntegral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Zsqrt3")]
    Zsqrt3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Int(String),
    Quad([String; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub ring: RingTag,
    pub coeffs: Vec<CoeffJson>,
}

fn int(s: &str) -> Result<BigInt, PolyJsonError> {
    BigInt::from_str(s).map_err(|_| PolyJsonError::Integer(s.to_string()))
}

impl PolyJson {
    pub fn from_z(var: &str, p: &ZPoly) -> Self {
        PolyJson {
            var: var.to_string(),
            ring: RingTag::Z,
            coeffs: p.coeffs().iter().map(|c| CoeffJson::Int(c.to_string())).collect(),
        }
    }

    pub fn from_zs3(var: &str, p: &Zs3Poly) -> Self {
        PolyJson {
            var: var.to_string(),
            ring: RingTag::Zsqrt3,
            coeffs: p.coeffs().iter().map(|c| CoeffJson::Quad([c.a.to_string(), c.b.to_string()])).collect(),
        }
    }

    pub fn to_zs3(&self) -> Result<Zs3Poly, PolyJsonError> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(match (self.ring, c) {
                (RingTag::Z, CoeffJson::Int(s)) => QuadInt::rational(int(s)?),
                (RingTag::Zsqrt3, CoeffJson::Quad([a, b])) => QuadInt::new(int(a)?, int(b)?),
                _ => return Err(PolyJsonError::Shape(format!("{:?}", self.ring))),
            });
        }
        Ok(Zs3Poly::new(v))
    }

    /// Integer polynomial; a `Zsqrt3` file is accepted when every √3 part is zero.
    pub fn to_z(&self) -> Result<ZPoly, PolyJsonError> {
        self.to_zs3()?.to_z().ok_or(PolyJsonError::NotIntegral)
    }

    pub fn parse(src: &str) -> Result<Self, PolyJsonError> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
