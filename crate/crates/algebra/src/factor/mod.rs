//! Factorization over Z, Z[√3] and bivariate Z[√3][v, T]; minimal
//! polynomials from numeric approximations; interval-based factor selection.

mod bivariate;
mod hensel;
mod lll;
mod reconstruct;
mod select;
mod sqf;
mod zassenhaus;
mod zsqrt3;

pub use bivariate::factor_bivariate;
pub use hensel::{lift_modulus, mod_inverse, multifactor_lift};
pub use lll::lll_reduce;
pub use reconstruct::{minpoly_reconstruct, ReconstructError};
pub use select::{select_factor, IntervalEval, SelectError};
pub use sqf::{squarefree_decomposition, squarefree_decomposition_qs3};
pub use zassenhaus::{certify_irreducible, factor_z, trial_small_divisor};
pub use zsqrt3::factor_zsqrt3;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertMethod {
    /// Degree one needs no argument.
    Linear,
    /// Intersection of attainable factor-degree sums modulo several primes.
    DegreePattern,
    /// Every subset of the lifted modular factors was tried.
    Recombination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Irreducible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub method: CertMethod,
    pub primes: Vec<u64>,
    /// Factor degrees modulo each prime, same order as `primes`.
    pub patterns: Vec<Vec<usize>>,
    pub conclusion: Conclusion,
    /// Set when the argument was made for the norm over Z rather than the
    /// polynomial itself (Z[√3] factors).
    pub via_norm: bool,
}

impl IrreducibilityCertificate {
    pub fn linear() -> Self {
        IrreducibilityCertificate {
            method: CertMethod::Linear,
            primes: Vec::new(),
            patterns: Vec::new(),
            conclusion: Conclusion::Irreducible,
            via_norm: false,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.conclusion == Conclusion::Irreducible
    }
}

/// `content · ∏ factors[i].0 ^ factors[i].1` equals the input.
#[derive(Clone, Debug)]
pub struct FactorizationResult<P, C> {
    pub content: C,
    pub factors: Vec<(P, u32)>,
    pub certificates: Vec<IrreducibilityCertificate>,
}

impl<P, C> FactorizationResult<P, C> {
    pub fn degrees(&self) -> Vec<(usize, u32)>
    where
        P: Degree,
    {
        self.factors.iter().map(|(f, m)| (f.degree_of(), *m)).collect()
    }

    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(IrreducibilityCertificate::is_irreducible)
    }
}

pub trait Degree {
    fn degree_of(&self) -> usize;
}

impl<R: crate::ring::Ring> Degree for crate::poly::Poly<R> {
    fn degree_of(&self) -> usize {
        self.deg()
    }
}

impl<R: crate::ring::Ring> Degree for crate::multi::MultiPoly<R> {
    fn degree_of(&self) -> usize {
        self.total_degree() as usize
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("input must have exactly two variables")]
    NotBivariate,
    #[error("input is not squarefree")]
    NotSquarefree,
    #[error("specialization images could not be matched ({0})")]
    UnluckySpecializations(String),
}
