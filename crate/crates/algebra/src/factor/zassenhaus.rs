use super::hensel::{lift_modulus, multifactor_lift};
use super::sqf::squarefree_decomposition;
use super::{CertMethod, Conclusion, FactorizationResult, IrreducibilityCertificate};
use crate::modp::{primes_from, FpPoly};
use crate::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

const PATTERN_PRIMES: usize = 10;

/// Deterministic factor order: degree, then coefficients from the constant term.
pub(crate) fn factor_order(a: &ZPoly, b: &ZPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

struct Reduction {
    p: u64,
    pattern: Vec<usize>,
}

/// Good primes (not dividing lc, squarefree image) with their degree patterns.
fn good_reductions(f: &ZPoly, count: usize) -> Vec<Reduction> {
    let lc = f.lc();
    let mut out = Vec::new();
    for p in primes_from(3) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = FpPoly::from_z(f, p);
        if !fp.is_squarefree() {
            if p > 5000 {
                break;
            }
            continue;
        }
        out.push(Reduction { p, pattern: fp.monic().degree_pattern() });
        if out.len() == count {
            break;
        }
    }
    out
}

fn subset_sums(pattern: &[usize], n: usize) -> Vec<bool> {
    let mut s = vec![false; n + 1];
    s[0] = true;
    for &d in pattern {
        for k in (d..=n).rev() {
            if s[k - d] {
                s[k] = true;
            }
        }
    }
    s
}

fn attainable(reds: &[Reduction], n: usize) -> Vec<bool> {
    let mut acc = vec![true; n + 1];
    for r in reds {
        for (a, b) in acc.iter_mut().zip(subset_sums(&r.pattern, n)) {
            *a &= b;
        }
    }
    acc
}

/// Degree-pattern certificate for a primitive squarefree polynomial.
pub fn certify_irreducible(f: &ZPoly) -> IrreducibilityCertificate {
    let n = f.deg();
    if n == 1 {
        return IrreducibilityCertificate::linear();
    }
    let reds = good_reductions(f, PATTERN_PRIMES);
    let sums = attainable(&reds, n);
    let only_trivial = (1..n).all(|k| !sums[k]);
    IrreducibilityCertificate {
        method: CertMethod::DegreePattern,
        primes: reds.iter().map(|r| r.p).collect(),
        patterns: reds.iter().map(|r| r.pattern.clone()).collect(),
        conclusion: if only_trivial && !reds.is_empty() { Conclusion::Irreducible } else { Conclusion::Inconclusive },
        via_norm: false,
    }
}

/// Complete factorization over Z.
pub fn factor_z(f: &ZPoly) -> FactorizationResult<ZPoly, BigInt> {
    assert!(!f.is_zero(), "factor_z of zero");
    let content = f.content();
    let mut factors: Vec<(ZPoly, u32, IrreducibilityCertificate)> = Vec::new();
    for (a, mult) in squarefree_decomposition(f) {
        for (g, cert) in factor_squarefree(&a) {
            factors.push((g, mult, cert));
        }
    }
    factors.sort_by(|a, b| factor_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    // every factor has positive leading coefficient
    let content = if f.lc().is_negative() { -content.abs() } else { content.abs() };
    let (factors, certificates) = factors.into_iter().map(|(g, m, c)| ((g, m), c)).unzip();
    FactorizationResult { content, factors, certificates }
}

/// Irreducible factors (lc > 0) of a primitive squarefree polynomial.
fn factor_squarefree(f: &ZPoly) -> Vec<(ZPoly, IrreducibilityCertificate)> {
    let mut f = if f.lc().is_negative() { f.neg() } else { f.clone() };
    let mut out = Vec::new();
    if f.coeff(0).is_zero() {
        f = f.div_exact(&ZPoly::x()).expect("x divides");
        out.push((ZPoly::x(), IrreducibilityCertificate::linear()));
    }
    let n = f.deg();
    if n == 0 {
        return out;
    }
    if n == 1 {
        out.push((f, IrreducibilityCertificate::linear()));
        return out;
    }
    let reds = good_reductions(&f, PATTERN_PRIMES);
    let sums = attainable(&reds, n);
    if (1..n).all(|k| !sums[k]) && !reds.is_empty() {
        let cert = IrreducibilityCertificate {
            method: CertMethod::DegreePattern,
            primes: reds.iter().map(|r| r.p).collect(),
            patterns: reds.iter().map(|r| r.pattern.clone()).collect(),
            conclusion: Conclusion::Irreducible,
            via_norm: false,
        };
        out.push((f, cert));
        return out;
    }
    let best = reds.iter().min_by_key(|r| (r.pattern.len(), std::cmp::Reverse(r.p))).expect("a good prime");
    let p = best.p;
    let modular = FpPoly::from_z(&f, p).monic().factor_squarefree();
    for g in zassenhaus(&f, p, &modular, &sums) {
        let mut cert = certify_irreducible(&g);
        if !cert.is_irreducible() {
            cert.method = CertMethod::Recombination;
            cert.primes = vec![p];
            cert.conclusion = Conclusion::Irreducible;
        }
        out.push((g, cert));
    }
    out
}

/// Bound on the coefficients of any factor of `f`, times lc(f), doubled.
fn lift_target(f: &ZPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let l2 = norm2.sqrt() + 1u32;
    (l2 << f.deg()) * f.lc().abs() * 2u32 + 1u32
}

fn sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if r > (m >> 1) {
        r - m
    } else {
        r
    }
}

/// Recombination of lifted factors, smallest subsets first. Each returned
/// factor is irreducible because all smaller subsets were refuted first.
fn zassenhaus(f: &ZPoly, p: u64, modular: &[FpPoly], sums: &[bool]) -> Vec<ZPoly> {
    let target = lift_target(f);
    let m = lift_modulus(p, &target);
    let mut lifted = multifactor_lift(f, modular, p, &target);
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let d: usize = idx.iter().map(|&i| lifted[i].deg()).sum();
            if d < sums.len() && sums[d] {
                if let Some(g) = try_subset(&f, &lifted, &idx, &m) {
                    hit = Some((idx.clone(), g));
                    break;
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        match hit {
            Some((idx, g)) => {
                f = f.div_exact(&g).expect("verified divisor");
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                found.push(g);
            }
            None => s += 1,
        }
    }
    if f.deg() > 0 {
        found.push(if f.lc().is_negative() { f.neg() } else { f });
    }
    found
}

fn try_subset(f: &ZPoly, lifted: &[ZPoly], idx: &[usize], m: &BigInt) -> Option<ZPoly> {
    let lc = f.lc();
    let tc = f.coeff(0);
    let mut t = lc.clone();
    for &i in idx {
        t = (t * lifted[i].coeff(0)).mod_floor(m);
    }
    let t = sym(&t, m);
    if t.is_zero() || !(&lc * &tc).is_multiple_of(&t) {
        return None;
    }
    let mut g = ZPoly::constant(lc);
    for &i in idx {
        g = ZPoly::new(g.mul(&lifted[i]).coeffs().iter().map(|c| c.mod_floor(m)).collect());
    }
    let g = ZPoly::new(g.coeffs().iter().map(|c| sym(c, m)).collect()).primitive_part();
    if g.divides(f) {
        Some(g)
    } else {
        None
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Independent sweep for a divisor of degree 1–3 with coefficients drawn
/// from divisors of the end coefficients (bounded search). `None` if none.
pub fn trial_small_divisor(f: &ZPoly, max_divisors: usize) -> Option<ZPoly> {
    if f.deg() < 2 {
        return None;
    }
    let lead = divisors(&f.lc().abs(), max_divisors);
    let tail = divisors(&f.coeff(0).abs(), max_divisors);
    // rational roots
    for a in &lead {
        for b in &tail {
            for sign in [1, -1] {
                let cand = ZPoly::new(vec![b * sign, a.clone()]);
                if cand.divides(f) {
                    return Some(cand);
                }
            }
        }
    }
    // quadratics a x^2 + c x + b with |c| bounded by a crude root bound sweep
    let bound = 64i64;
    for a in &lead {
        for b in &tail {
            for sign in [1, -1] {
                for c in -bound..=bound {
                    let cand = ZPoly::new(vec![b * sign, BigInt::from(c), a.clone()]);
                    if f.deg() >= 4 && cand.divides(f) {
                        return Some(cand);
                    }
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt, cap: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::from(1)];
    }
    let mut d = BigInt::from(1);
    while &d * &d <= *n && out.len() < cap {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}
