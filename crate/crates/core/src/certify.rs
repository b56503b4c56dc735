//! End-to-end certification of the derived polynomials.

use crate::angles::extremal;
use crate::golden::{checksum, GoldenTable, MINPOLY_NAMES};
use crate::polyjson::PolyJson;
use crate::stages::{FactorAccounting, Pipeline, PipelineError};
use crate::Frame;
use harborth_algebra::algnum::{radicals_criterion, zero_test, Verdict, ZeroTest};
use harborth_algebra::dyadic::{format_decimal, parse_decimal};
use harborth_algebra::factor::factor_z;
use harborth_algebra::realroots::{isolate, refine, signature};
use harborth_algebra::ZPoly;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct PolyMatch {
    pub name: String,
    pub pass: bool,
    /// differing coefficient indices, when any
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootCheck {
    pub label: String,
    pub polynomial: String,
    pub expected: String,
    pub root: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureRow {
    pub name: String,
    pub even: bool,
    pub real: usize,
    pub complex_pairs: usize,
    pub decomposed_degree: usize,
    pub decomposed_real: usize,
    pub decomposed_complex_pairs: usize,
    pub decomposed_irreducible: bool,
    pub radicals: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintRow {
    pub label: String,
    pub result: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalCheck {
    pub b: String,
    pub b_closed_form_residual: String,
    pub phi_at_0: String,
    pub phi_at_b: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stage5Check {
    #[serde(flatten)]
    pub accounting: FactorAccounting,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub golden_checksum: String,
    pub precision_bits: u32,
    pub polynomials: Vec<PolyMatch>,
    pub roots: Vec<RootCheck>,
    pub signatures: Vec<SignatureRow>,
    pub compass_ruler: String,
    pub constraints: Vec<ConstraintRow>,
    pub stage5: Stage5Check,
    pub extremal: ExtremalCheck,
    pub rigidity: String,
    pub overall: bool,
    /// wall-clock seconds per phase; not serialized so reports stay reproducible
    #[serde(skip)]
    pub timings: Vec<(String, f64)>,
}

impl CertificationReport {
    pub fn polynomials_pass(&self) -> bool {
        self.polynomials.iter().all(|p| p.pass)
    }
    pub fn roots_pass(&self) -> bool {
        self.roots.iter().all(|r| r.pass)
    }
    pub fn signatures_pass(&self) -> bool {
        self.signatures.iter().all(|s| s.pass)
    }
    pub fn constraints_pass(&self) -> bool {
        self.constraints.len() == 14 && self.constraints.iter().all(|c| c.pass)
    }
    pub fn signature_of(&self, name: &str) -> Option<(usize, usize)> {
        self.signatures.iter().find(|s| s.name == name).map(|s| (s.real, s.complex_pairs))
    }
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn coefficient_diff(ours: &PolyJson, gold: &PolyJson) -> Vec<String> {
    let a = serde_json::to_value(&ours.coeffs).unwrap_or_default();
    let b = serde_json::to_value(&gold.coeffs).unwrap_or_default();
    let (a, b) = (a.as_array().cloned().unwrap_or_default(), b.as_array().cloned().unwrap_or_default());
    let mut out = vec![];
    for i in 0..a.len().max(b.len()) {
        if a.get(i) != b.get(i) {
            out.push(format!("{}^{i}: derived {} vs table {}", ours.var, a.get(i).map(|v| v.to_string()).unwrap_or("-".into()), b.get(i).map(|v| v.to_string()).unwrap_or("-".into())));
        }
    }
    if out.is_empty() && ours.var != gold.var {
        out.push(format!("variable {} vs {}", ours.var, gold.var));
    }
    out
}

fn q(s: &str) -> BigRational {
    parse_decimal(s).expect("decimal literal")
}

/// Root of `p` within `tol` of `v`, refined to width 2^-bits.
fn root_near(p: &ZPoly, v: &BigRational, tol: &BigRational, bits: i64) -> Option<BigRational> {
    let iso = isolate(p);
    let i = iso.find(&(v - tol), &(v + tol))?;
    let (lo, hi) = refine(&iso, i, bits);
    let mid = (lo.to_rational() + hi.to_rational()) / BigRational::from_integer(2.into());
    ((&mid - v).abs() <= *tol).then_some(mid)
}

fn root_checks(p: &Pipeline) -> Vec<RootCheck> {
    let g = GoldenTable::get();
    let poly = |n: &str| p.store.find(n).and_then(|r| r.univariate());
    let xj = g.point("J").expect("J").0;
    let t = q(&g.numerics.t);
    let tol = q("0.00000000000001");
    let mut jobs: Vec<(String, &str, BigRational, BigRational)> = vec![("T = yB".into(), "P_T", t, g.tolerance())];
    for n in ["D", "E", "F", "G", "H", "J"] {
        let (_, y) = g.point(n).expect("golden point");
        jobs.push((format!("y{n}"), static_name(format!("P_y{n}")), y, tol.clone()));
    }
    jobs.push(("xA − xJ".into(), "P_xA", -&xj, tol.clone()));
    for n in ["B", "D", "E", "F", "G"] {
        let (x, _) = g.point(n).expect("golden point");
        jobs.push((format!("x{n} − xJ"), static_name(format!("P_x{n}")), x - &xj, tol.clone()));
    }
    jobs.into_iter()
        .map(|(label, name, v, tol)| {
            let root = poly(name).and_then(|f| root_near(&f, &v, &tol, 60));
            RootCheck {
                label,
                polynomial: name.into(),
                expected: format_decimal(&v, 15),
                pass: root.is_some(),
                root: root.map(|r| format_decimal(&r, 17)).unwrap_or_else(|| "none within tolerance".into()),
            }
        })
        .collect()
}

fn static_name(s: String) -> &'static str {
    MINPOLY_NAMES.iter().find(|n| **n == s).copied().unwrap_or("?")
}

fn signature_row(name: &str, f: &ZPoly) -> SignatureRow {
    let g = &GoldenTable::get().signature;
    let sig = signature(f).ok();
    let even = f.is_even();
    let dec = f.even_decompose().ok();
    let dsig = dec.as_ref().and_then(|d| signature(d).ok());
    let irreducible = dec
        .as_ref()
        .map(|d| {
            let fz = factor_z(d);
            fz.factors.len() == 1 && fz.factors[0].1 == 1 && fz.all_certified()
        })
        .unwrap_or(false);
    let verdict = dec.as_ref().and_then(|d| radicals_criterion(d).ok()).map(|v| v.verdict);
    let (real, pairs) = sig.map(|s| (s.real_count, s.complex_pairs)).unwrap_or((0, 0));
    let (dreal, dpairs) = dsig.map(|s| (s.real_count, s.complex_pairs)).unwrap_or((0, 0));
    let pass = even && real == g.real && pairs == g.complex_pairs && dreal == g.even_part_real && dpairs == g.even_part_complex_pairs && irreducible && verdict == Some(Verdict::NotSolvable);
    SignatureRow {
        name: name.into(),
        even,
        real,
        complex_pairs: pairs,
        decomposed_degree: dec.as_ref().map(|d| d.deg()).unwrap_or(0),
        decomposed_real: dreal,
        decomposed_complex_pairs: dpairs,
        decomposed_irreducible: irreducible,
        radicals: verdict.map(|v| format!("{v:?}")).unwrap_or_else(|| "unavailable".into()),
        pass,
    }
}

fn compass_ruler(rows: &[SignatureRow]) -> String {
    match rows.iter().find(|r| r.name == "P_xA") {
        Some(r) if r.pass => format!(
            "x_A generates a field of degree 22 = 2·{}; compass and ruler only reach degrees 2^k, so A is not constructible from the unit length. \
             The even part F_xA has {} real roots out of {}, so x_A is not expressible by radicals either.",
            r.decomposed_degree, r.decomposed_real, r.decomposed_degree
        ),
        _ => "not established: the x_A polynomial failed its checks".into(),
    }
}

fn zero_label(z: &ZeroTest) -> &'static str {
    match z {
        ZeroTest::ProvedZero => "ProvedZero",
        ZeroTest::ProvedNonzero(_) => "ProvedNonzero",
        ZeroTest::Unknown => "Unknown",
    }
}

/// Runs every check; failures are recorded rather than returned.
pub fn certify(p: &Pipeline) -> Result<CertificationReport, PipelineError> {
    if let Some(missing) = (1..=7).find(|k| !p.store.by_stage.contains_key(k)) {
        return Err(PipelineError::StageDependencyMissing(8, missing));
    }
    let g = GoldenTable::get();
    let mut timings = vec![];
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut Vec<(String, f64)>| {
        timings.push((name.to_string(), clock.elapsed().as_secs_f64()));
        clock = Instant::now();
    };

    let polynomials: Vec<PolyMatch> = MINPOLY_NAMES
        .iter()
        .map(|&n| {
            let ours = p.store.find(n).and_then(|r| r.poly.clone());
            let gold = g.minpoly_json(n);
            match (ours, gold) {
                (Some(o), Some(gj)) => {
                    let pass = o.to_json() == gj.to_json();
                    PolyMatch { name: n.into(), pass, diff: if pass { vec![] } else { coefficient_diff(&o, gj) } }
                }
                _ => PolyMatch { name: n.into(), pass: false, diff: vec!["missing".into()] },
            }
        })
        .collect();
    lap("polynomials", &mut timings);

    let roots = root_checks(p);
    lap("roots", &mut timings);

    let signatures: Vec<SignatureRow> = {
        use rayon::prelude::*;
        p.minpolys().par_iter().map(|(n, f)| signature_row(n, f)).collect()
    };
    let compass = compass_ruler(&signatures);
    lap("signatures", &mut timings);

    let exact = p.exact()?.transform(Frame::K)?;
    let constraints: Vec<ConstraintRow> = exact
        .constraints()?
        .into_iter()
        .map(|(label, e)| {
            let z = zero_test(&e);
            ConstraintRow { label: label.into(), pass: z == ZeroTest::ProvedZero, result: zero_label(&z).into() }
        })
        .collect();
    lap("constraints", &mut timings);

    let acct: FactorAccounting = p
        .store
        .find("stage5_resultant")
        .and_then(|r| r.extra.get("accounting"))
        .and_then(|s| serde_json::from_str(s).ok())
        .ok_or(PipelineError::StageDependencyMissing(8, 5))?;
    let small: usize = 2 + 4 * acct.quartic_power as usize;
    let stage5 = Stage5Check {
        pass: acct.total_degree == g.stage5.total_degree
            && acct.linear_factors_divide
            && acct.quartic_divides
            && acct.pt_divides
            && small + 22 + acct.cofactor_degree == acct.total_degree
            && acct.cofactor_degree == 108
            && {
                let mut all = vec![1, 1];
                all.extend(std::iter::repeat(4).take(acct.quartic_power as usize));
                all.push(22);
                all.extend(acct.cofactor_factor_degrees.iter().copied());
                all.sort_unstable();
                let mut want = g.stage5.factor_degrees.clone();
                want.sort_unstable();
                all == want
            },
        accounting: acct,
    };

    let ex = extremal(256)?;
    let tol = 1e-12;
    let b_ok = q(&ex.b_residual) < q("0.000000000000000000000000000001");
    let extremal = ExtremalCheck {
        b: ex.b_decimal.clone(),
        b_closed_form_residual: ex.b_residual.clone(),
        phi_at_0: format!("{:.15}", ex.phi_at_0),
        phi_at_b: format!("{:.15}", ex.phi_at_b),
        pass: b_ok && (ex.phi_at_0 - 85.884964999269942).abs() < tol && (ex.phi_at_b - 94.590425288952345).abs() < tol && ex.residual_0() < tol && ex.residual_b() < tol,
    };
    lap("extremal", &mut timings);

    let all_before = polynomials.iter().all(|x| x.pass)
        && roots.iter().all(|x| x.pass)
        && signatures.iter().all(|x| x.pass)
        && constraints.len() == 14
        && constraints.iter().all(|x| x.pass);
    let rigidity = if all_before {
        "Every coordinate of the crucial vertices is a root of a nonzero univariate integer polynomial, and the defining unit-distance system holds exactly at those roots. \
         With the branch signs fixed the system therefore has finitely many real solutions, so the configuration cannot move continuously: the graph is rigid."
            .to_string()
    } else {
        "not established: an earlier check failed".into()
    };
    let overall = all_before && stage5.pass && extremal.pass;
    Ok(CertificationReport {
        golden_checksum: checksum(),
        precision_bits: p.bits,
        polynomials,
        roots,
        signatures,
        compass_ruler: compass,
        constraints,
        stage5,
        extremal,
        rigidity,
        overall,
        timings,
    })
}
