//! Real algebraic numbers, the number field `Q[T]/(m)(√3)` and square-root
//! towers over it.

mod field;
mod number;
mod radicals;
mod tower;

pub use field::{BaseField, FieldRef, LElem};
pub use number::{alg_arith, product_resultant, sum_resultant, AlgError, AlgebraicNumber, ArithOp};
pub use radicals::{radicals_criterion, RadicalsVerdict, Verdict};
pub use tower::{zero_test, zero_test_at, Tower, TowerElement, TowerError, ZeroTest};
