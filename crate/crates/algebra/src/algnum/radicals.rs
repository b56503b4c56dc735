use super::number::AlgError;
use crate::factor::{factor_z, IrreducibilityCertificate};
use crate::poly::ZPoly;
use crate::realroots::SturmSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SolvableByRadicals,
    NotSolvable,
    CriterionInapplicable,
}

#[derive(Clone, Debug)]
pub struct RadicalsVerdict {
    pub polynomial: ZPoly,
    pub degree: usize,
    pub real_root_count: usize,
    pub verdict: Verdict,
    pub certificate: IrreducibilityCertificate,
}

fn is_odd_prime(n: usize) -> bool {
    n > 2 && n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// For an irreducible polynomial of odd prime degree `p`: the Galois group is
/// solvable exactly when there is one real root or all `p` are real.
pub fn radicals_criterion(p: &ZPoly) -> Result<RadicalsVerdict, AlgError> {
    let fac = factor_z(p);
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 || !fac.all_certified() {
        return Err(AlgError::NotIrreducible);
    }
    let certificate = fac.certificates[0].clone();
    let degree = p.deg();
    let real_root_count = SturmSequence::new(p).total_real();
    let verdict = if !is_odd_prime(degree) {
        Verdict::CriterionInapplicable
    } else if real_root_count == 1 || real_root_count == degree {
        Verdict::SolvableByRadicals
    } else {
        Verdict::NotSolvable
    };
    Ok(RadicalsVerdict { polynomial: p.clone(), degree, real_root_count, verdict, certificate })
}
