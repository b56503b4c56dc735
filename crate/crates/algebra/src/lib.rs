//! Exact algebra for the Harborth minimal-polynomial pipeline.
//!
//! Integers, rationals and `Z[√3]` coefficients; dense and sparse
//! polynomials; resultants and Gröbner bases; factorization over `Z` and
//! `Z[√3]`; certified real roots; algebraic numbers and a square-root tower
//! over `Q[T]/(m)`.

pub mod algnum;
pub mod dyadic;
pub mod elim;
pub mod factor;
pub mod linalg;
pub mod modp;
pub mod multi;
pub mod poly;
pub mod quad;
pub mod realroots;
pub mod ring;

pub use elim::{ElimError, EliminationStep, Tool};
pub use dyadic::{Dyadic, DyadicInterval, IntervalError};
pub use multi::{Coeff, MultiPoly};
pub use poly::{Poly, PolyError, QPoly, Qs3Poly, ZPoly, Zs3Poly};
pub use quad::{QuadInt, QuadRat};
pub use ring::{Domain, Field, GcdDomain, Ring};
