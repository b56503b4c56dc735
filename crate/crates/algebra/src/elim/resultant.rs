use super::{ElimError, EliminationStep, Tool};
use crate::multi::MultiPoly;
use crate::poly::Poly;
use crate::ring::{Domain, GcdDomain};

/// Res(a, b) by the subresultant PRS (Collins, Brown–Traub).
///
/// Works over any integral domain; every division below is exact.
/// Convention for two constants: 1.
pub fn subresultant<R: Domain>(a: &Poly<R>, b: &Poly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut neg = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            neg = true;
        }
    }
    if b.deg() == 0 {
        let r = b.lc().pow(a.deg() as u32);
        return if neg { r.neg() } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            neg = !neg;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return R::zero();
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r.div_scalar_exact(&div).expect("subresultant division is exact");
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("h update is exact")
        };
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let last = b.lc().pow(da).div_exact(&h.pow(da - 1)).expect("final step is exact");
            return if neg { last.neg() } else { last };
        }
    }
}

/// Same value as [`subresultant`], after pulling out the contents of both
/// inputs: Res(c·A, d·B) = c^deg B · d^deg A · Res(A, B).
pub fn subresultant_primitive<R: GcdDomain>(a: &Poly<R>, b: &Poly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (ca, cb) = (a.content(), b.content());
    let pa = a.div_scalar_exact(&ca).expect("content divides");
    let pb = b.div_scalar_exact(&cb).expect("content divides");
    let core = subresultant(&pa, &pb);
    ca.pow(b.deg() as u32).mul(&cb.pow(a.deg() as u32)).mul(&core)
}

/// Res_var(p, q) for multivariate input; the result keeps the variable list
/// of `p` with `var` absent from every term.
pub fn resultant<R: Domain>(p: &MultiPoly<R>, q: &MultiPoly<R>, var: &str) -> Result<MultiPoly<R>, ElimError> {
    if p.is_zero() || q.is_zero() {
        return Err(ElimError::ZeroInput);
    }
    let i = p.var_index(var).ok_or_else(|| ElimError::UnknownVariable(var.to_string()))?;
    let q = if q.vars() == p.vars() {
        q.clone()
    } else {
        let names: Vec<&str> = p.vars().iter().map(String::as_str).collect();
        q.with_vars(&names)
    };
    if p.degree_in(i) == 0 || q.degree_in(i) == 0 {
        return Err(ElimError::NotInVariable(var.to_string()));
    }
    let univariate = p.terms().keys().chain(q.terms().keys()).all(|m| m.iter().enumerate().all(|(k, &e)| k == i || e == 0));
    if univariate {
        let r = subresultant(&p.to_poly(i).unwrap(), &q.to_poly(i).unwrap());
        return Ok(p.constant_like(r));
    }
    let pa = Poly::new(p.to_univariate(i));
    let qa = Poly::new(q.to_univariate(i));
    Ok(subresultant(&pa, &qa).add(&p.zero_like()))
}

/// [`resultant`] wrapped as a replayable record.
pub fn resultant_step<R: Domain>(p: &MultiPoly<R>, q: &MultiPoly<R>, var: &str) -> Result<EliminationStep<R>, ElimError> {
    let out = resultant(p, q, var)?;
    Ok(EliminationStep {
        inputs: vec![p.clone(), q.clone()],
        tool: Tool::Resultant,
        eliminated: vec![var.to_string()],
        order: p.vars().to_vec(),
        output: vec![out],
    })
}
