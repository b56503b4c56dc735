//! Variable elimination: subresultant resultants, lex Gröbner bases, and a
//! Sylvester-determinant oracle for cross-checking.

mod groebner;
mod resultant;
mod sylvester;

pub use groebner::{eliminate, groebner, is_groebner_basis, normal_form};
pub use resultant::{resultant, resultant_step, subresultant, subresultant_primitive};
pub use sylvester::{sylvester_matrix, sylvester_resultant_oracle, SYLVESTER_MAX_DEGREE};

use crate::multi::MultiPoly;
use crate::ring::Ring;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElimError {
    #[error("zero polynomial passed to resultant")]
    ZeroInput,
    #[error("polynomial has degree zero in {0}")]
    NotInVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("degree {0} exceeds the oracle guard")]
    DegreeTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tool {
    Resultant,
    Groebner,
}

impl Tool {
    pub fn name(self) -> &'static str {
        match self {
            Tool::Resultant => "resultant",
            Tool::Groebner => "groebner",
        }
    }
}

/// One elimination, with enough context to replay it.
#[derive(Clone, Debug)]
pub struct EliminationStep<R> {
    pub inputs: Vec<MultiPoly<R>>,
    pub tool: Tool,
    pub eliminated: Vec<String>,
    /// lex order used (greatest first); for resultants just the variable list.
    pub order: Vec<String>,
    pub output: Vec<MultiPoly<R>>,
}

impl<R: Ring> EliminationStep<R> {
    /// True when no output polynomial mentions an eliminated variable.
    pub fn is_clean(&self) -> bool {
        self.output.iter().all(|p| {
            self.eliminated.iter().all(|v| match p.var_index(v) {
                Some(i) => !p.involves(i),
                None => true,
            })
        })
    }
}
