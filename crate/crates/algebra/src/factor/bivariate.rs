use super::zsqrt3::factor_zsqrt3;
use super::{FactorError, FactorizationResult, IrreducibilityCertificate};
use crate::multi::MultiPoly;
use crate::poly::{qs3_to_primitive_zs3, Qs3Poly};
use crate::quad::{QuadInt, QuadRat};
use crate::ring::{Field, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn to_f64(q: &QuadRat) -> f64 {
    use num_traits::ToPrimitive;
    q.rational_part().to_f64().unwrap_or(f64::NAN) + SQRT3 * q.sqrt3_part().to_f64().unwrap_or(f64::NAN)
}

fn rat(n: i64, d: i64) -> QuadRat {
    QuadRat::from_rationals(&BigRational::new(n.into(), d.into()), &BigRational::from_integer(0.into()))
}

struct Image {
    t: QuadRat,
    lead: QuadRat,
    /// monic factors over Q(√3) with their certificates
    factors: Vec<(Qs3Poly, IrreducibilityCertificate)>,
}

/// Factor a squarefree polynomial in `main` and `param` over Z[√3] by
/// specializing `param`, matching the univariate images by continuity of
/// their monic coefficients along a path of sample points, interpolating,
/// and verifying the product exactly.
pub fn factor_bivariate(
    p: &MultiPoly<QuadInt>,
    main: &str,
    param: &str,
) -> Result<FactorizationResult<MultiPoly<QuadInt>, QuadRat>, FactorError> {
    if p.vars().len() != 2 {
        return Err(FactorError::NotBivariate);
    }
    let (Some(im), Some(ip)) = (p.var_index(main), p.var_index(param)) else {
        return Err(FactorError::NotBivariate);
    };
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    let pq: MultiPoly<QuadRat> = p.map(|c| QuadRat::from_quad_int(c.clone()));

    // content in the parameter
    let cols = pq.to_univariate(im);
    let mut cont = Qs3Poly::zero();
    for c in &cols {
        cont = cont.gcd(&c.to_poly(ip).expect("bivariate"));
    }
    let mut factors: Vec<(MultiPoly<QuadInt>, u32)> = Vec::new();
    let mut certs = Vec::new();
    let mut rest = pq.clone();
    if cont.deg() > 0 {
        let cz = factor_zsqrt3(&qs3_to_primitive_zs3(&cont));
        for ((g, m), c) in cz.factors.iter().zip(&cz.certificates) {
            factors.push((MultiPoly::from_poly(&vars, param, g), *m));
            certs.push(c.clone());
        }
        rest = rest.div_exact(&MultiPoly::from_poly(&vars, param, &cont)).expect("content divides");
    }

    let n = rest.degree_in(im) as usize;
    if n > 0 {
        let dt = rest.degree_in(ip) as usize;
        let lead = rest.to_univariate(im).pop().unwrap().to_poly(ip).unwrap();
        let needed = 2 * dt + 3;
        // coarse grid first; dense grids away from 0 when continuation is ambiguous
        let schedules = [(rat(1, 32), rat(1, 32)), (rat(1, 2), rat(1, 1024)), (rat(3, 7), rat(1, 512)), (rat(2, 1), rat(1, 1024))];
        let mut last = None;
        for (start, step) in &schedules {
            match lift_all(&rest, im, ip, &lead, needed, start, step, &vars, main, param, n, dt) {
                Ok(found) => {
                    for (g, c) in found {
                        factors.push((g, 1));
                        certs.push(c);
                    }
                    last = None;
                    break;
                }
                Err(e) => last = Some(e),
            }
        }
        if let Some(e) = last {
            return Err(e);
        }
    }
    // order: by total degree, then degree in main
    let mut items: Vec<_> = factors.into_iter().zip(certs).collect();
    items.sort_by_key(|((g, _), _)| (g.degree_in(im), g.total_degree(), g.to_string()));
    let prod = items.iter().fold(pq.constant_like(QuadRat::one()), |a, ((g, m), _)| {
        a.mul(&g.map(|c| QuadRat::from_quad_int(c.clone())).pow(*m))
    });
    let content = pq.div_exact(&prod).filter(|q| q.is_constant()).ok_or_else(|| {
        FactorError::UnluckySpecializations("interpolated factors do not reassemble the input".into())
    })?;
    let content = content.coeff(&vec![0; vars.len()]);
    let (factors, certificates) = items.into_iter().unzip();
    Ok(FactorizationResult { content, factors, certificates })
}

#[allow(clippy::too_many_arguments)]
fn lift_all(
    rest: &MultiPoly<QuadRat>,
    im: usize,
    ip: usize,
    lead: &Qs3Poly,
    needed: usize,
    start: &QuadRat,
    step: &QuadRat,
    vars: &[&str],
    main: &str,
    param: &str,
    n: usize,
    dt: usize,
) -> Result<Vec<(MultiPoly<QuadInt>, IrreducibilityCertificate)>, FactorError> {
    let images = sample(rest, im, ip, lead, needed, start, step)?;
    let tracks = track(&images)?;
    let mut out = Vec::with_capacity(tracks.len());
    for track in &tracks {
        let g = interpolate(&images, track, vars, main, param, n, 2 * dt)?;
        out.push((g, images[0].factors[track[0]].1.clone()));
    }
    Ok(out)
}

fn sample(rest: &MultiPoly<QuadRat>, im: usize, ip: usize, lead: &Qs3Poly, needed: usize, start: &QuadRat, step: &QuadRat) -> Result<Vec<Image>, FactorError> {
    let n = rest.degree_in(im) as usize;
    let mut images: Vec<Image> = Vec::new();
    let mut pattern: Option<Vec<usize>> = None;
    let budget = 4 * needed + 20;
    for k in 0..budget as i64 {
        if images.len() == needed {
            break;
        }
        let t = start.add(&step.mul(&rat(k, 1)));
        let l = lead.eval(&t);
        if l.is_zero() {
            continue;
        }
        let img = rest.eval_var(ip, &t).to_poly(im).expect("univariate image");
        if img.deg() != n {
            continue;
        }
        let fz = factor_zsqrt3(&qs3_to_primitive_zs3(&img));
        if fz.factors.iter().any(|(_, m)| *m > 1) {
            continue;
        }
        let mut degs: Vec<usize> = fz.factors.iter().map(|(f, _)| f.deg()).collect();
        degs.sort_unstable();
        match &pattern {
            Some(pat) if degs.len() > pat.len() => continue,
            Some(pat) if degs.len() < pat.len() => {
                // earlier samples were unlucky splits
                images.clear();
                pattern = Some(degs);
            }
            Some(pat) if *pat != degs => continue,
            None => pattern = Some(degs),
            _ => {}
        }
        images.push(Image {
            t,
            lead: l,
            factors: fz.factors.iter().zip(&fz.certificates).map(|((f, _), c)| (f.to_qs3().monic(), c.clone())).collect(),
        });
    }
    if images.len() < needed {
        return Err(FactorError::UnluckySpecializations(format!("only {} consistent samples", images.len())));
    }
    Ok(images)
}

fn numeric(f: &Qs3Poly) -> Vec<f64> {
    f.coeffs().iter().map(to_f64).collect()
}

/// `tracks[j][k]`: index of factor j within sample k.
fn track(images: &[Image]) -> Result<Vec<Vec<usize>>, FactorError> {
    let r = images[0].factors.len();
    let mut tracks: Vec<Vec<usize>> = (0..r).map(|j| vec![j]).collect();
    for k in 1..images.len() {
        let mut used = vec![false; r];
        for tr in tracks.iter_mut() {
            let prev = numeric(&images[k - 1].factors[tr[k - 1]].0);
            let pred: Vec<f64> = if k >= 2 {
                let pp = numeric(&images[k - 2].factors[tr[k - 2]].0);
                prev.iter().zip(&pp).map(|(a, b)| 2.0 * a - b).collect()
            } else {
                prev.clone()
            };
            let best = (0..r)
                .filter(|&i| !used[i] && images[k].factors[i].0.deg() + 1 == pred.len())
                .map(|i| {
                    let v = numeric(&images[k].factors[i].0);
                    let dist: f64 = v.iter().zip(&pred).map(|(a, b)| (a - b).powi(2)).sum();
                    (i, dist)
                })
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .ok_or_else(|| FactorError::UnluckySpecializations(format!("no continuation at sample {k}")))?;
            used[best.0] = true;
            tr.push(best.0);
        }
    }
    Ok(tracks)
}

/// Newton interpolation through (x_k, y_k).
fn newton(xs: &[QuadRat], ys: &[QuadRat]) -> Qs3Poly {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = c[i].sub(&c[i - 1]);
            let den = xs[i].sub(&xs[i - j]);
            c[i] = num.mul(&den.inv().expect("distinct nodes"));
        }
    }
    let mut p = Qs3Poly::constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Qs3Poly::new(vec![xs[i].neg(), QuadRat::one()]);
        p = p.mul(&lin).add(&Qs3Poly::constant(c[i].clone()));
    }
    p
}

fn interpolate(
    images: &[Image],
    track: &[usize],
    vars: &[&str],
    main: &str,
    param: &str,
    _n: usize,
    max_deg: usize,
) -> Result<MultiPoly<QuadInt>, FactorError> {
    let d = images[0].factors[track[0]].0.deg();
    let used = max_deg + 1;
    let xs: Vec<QuadRat> = images.iter().map(|im| im.t.clone()).collect();
    let mut coeff_polys = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let ys: Vec<QuadRat> = images
            .iter()
            .zip(track)
            .map(|(im, &j)| im.lead.mul(&im.factors[j].0.coeff(i)))
            .collect();
        let c = newton(&xs[..used], &ys[..used]);
        for k in used..xs.len() {
            if c.eval(&xs[k]) != ys[k] {
                return Err(FactorError::UnluckySpecializations("interpolant fails a check point".into()));
            }
        }
        coeff_polys.push(c);
    }
    // primitive part with respect to the main variable
    let mut cont = Qs3Poly::zero();
    for c in &coeff_polys {
        cont = cont.gcd(c);
    }
    let mut out: MultiPoly<QuadRat> = MultiPoly::zero(vars);
    let xm = MultiPoly::var(vars, main);
    for (i, c) in coeff_polys.iter().enumerate() {
        let ci = c.divrem(&cont).0;
        out = out.add(&MultiPoly::from_poly(vars, param, &ci).mul(&xm.pow(i as u32)));
    }
    // clear denominators, strip integer content
    let mut l = BigInt::from(1);
    for c in out.terms().values() {
        l = num_integer::Integer::lcm(&l, c.denom());
    }
    let z: MultiPoly<QuadInt> = out.map(|c| c.numer().scale(&(&l / c.denom())));
    let mut g = BigInt::from(0);
    for c in z.terms().values() {
        g = num_integer::Integer::gcd(&g, &c.int_content());
    }
    let z = z.map(|c| c.div_int_exact(&g).expect("content divides"));
    let lead_positive = z.leading().map(|(_, c)| c.a > BigInt::from(0) || (c.a == BigInt::from(0) && c.b > BigInt::from(0))).unwrap_or(true);
    Ok(if lead_positive { z } else { z.neg() })
}
