//! The seven derivation stages, from the trapezoid relations to the
//! coordinate minimal polynomials, with an on-disk record cache.

use crate::angles::solve_t;
use crate::geometry::{build, tower_build, Configuration, Frame, GeomError, Num};
use crate::golden::GoldenTable;
use crate::polyjson::PolyJson;
use harborth_algebra::algnum::{AlgebraicNumber, TowerElement};
use harborth_algebra::elim::{eliminate, resultant};
use harborth_algebra::factor::{factor_bivariate, factor_z, minpoly_reconstruct, select_factor};
use harborth_algebra::{Dyadic, DyadicInterval, MultiPoly, QuadInt, QuadRat, ZPoly, Zs3Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

pub const CACHE_DIR: &str = ".harborth-cache";
pub const DEFAULT_BITS: u32 = 400;
/// bumped whenever a stage adds or changes records
const CACHE_SCHEMA: u32 = 2;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("stage {0} needs stage {1} first")]
    StageDependencyMissing(u8, u8),
    #[error("no such stage {0}")]
    NoSuchStage(u8),
    #[error("factor selection for {0} failed: {1}")]
    SelectionAmbiguous(String, String),
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("{0}")]
    Algebra(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Working precision in bits from `HARBORTH_DIGITS` (decimal digits).
pub fn precision_from_env() -> u32 {
    std::env::var("HARBORTH_DIGITS").ok().and_then(|s| s.trim().parse::<u32>().ok()).map(digits_to_bits).unwrap_or(DEFAULT_BITS)
}

pub fn digits_to_bits(d: u32) -> u32 {
    ((d as f64) * std::f64::consts::LOG2_10).ceil() as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationRecord {
    pub stage: u8,
    pub id: String,
    /// what the output is, in words
    pub anchor: String,
    pub inputs: Vec<String>,
    pub tools: Vec<String>,
    pub vars: Vec<String>,
    pub ring: String,
    /// output polynomial in the parser's syntax
    pub output: String,
    /// set for univariate integer outputs
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, String>,
}

impl DerivationRecord {
    pub fn relation(&self) -> MultiPoly<QuadInt> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        MultiPoly::parse(&self.output, &vars).expect("records hold parseable polynomials")
    }

    pub fn univariate(&self) -> Option<ZPoly> {
        self.poly.as_ref().and_then(|p| p.to_z().ok())
    }
}

// ---------- polynomial plumbing ----------

type Rel = MultiPoly<QuadInt>;

fn qi(n: i64) -> QuadInt {
    QuadInt::rational(BigInt::from(n))
}

fn int_content(p: &Rel) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.terms().values() {
        g = Integer::gcd(&g, &c.a);
        g = Integer::gcd(&g, &c.b);
    }
    g
}

fn lc_sign(c: &QuadInt) -> bool {
    if c.a.is_zero() {
        c.b.is_negative()
    } else {
        c.a.is_negative()
    }
}

/// Integer content removed, leading coefficient made "positive".
pub fn normalize(p: &Rel) -> Rel {
    let g = int_content(p);
    let mut q = if g.is_zero() || g.is_one() { p.clone() } else { p.map(|c| c.div_int_exact(&g).expect("content divides")) };
    if let Some((_, c)) = q.leading() {
        if lc_sign(c) {
            q = q.neg();
        }
    }
    q
}

fn from_rational(p: &MultiPoly<BigRational>) -> Rel {
    let mut l = BigInt::one();
    for c in p.terms().values() {
        l = Integer::lcm(&l, c.denom());
    }
    normalize(&p.map(|c| QuadInt::rational((c * BigRational::from_integer(l.clone())).to_integer())))
}

fn conj(p: &Rel) -> Rel {
    p.map(QuadInt::conj)
}

fn is_rational(p: &Rel) -> bool {
    p.terms().values().all(QuadInt::is_rational)
}

fn quad_to_rat(c: &QuadInt) -> QuadRat {
    QuadRat::from_quad_int(c.clone())
}

/// `p` rescaled onto `g` when the two agree up to a constant factor.
fn rescale_onto(p: &Rel, g: &Rel) -> Option<Rel> {
    let vars: Vec<&str> = g.vars().iter().map(String::as_str).collect();
    let p = p.with_vars(&vars);
    let (_, lp) = p.leading()?;
    let (_, lg) = g.leading()?;
    let k = harborth_algebra::Ring::mul(&quad_to_rat(lg), &harborth_algebra::Field::inv(&quad_to_rat(lp))?);
    let pr = p.map(quad_to_rat).scale(&k);
    let gr = g.map(quad_to_rat);
    if pr == gr {
        Some(g.clone())
    } else {
        None
    }
}

fn coeff_text(c: &QuadInt) -> (bool, String) {
    let neg = lc_sign(c);
    let c = if neg { c.scale(&BigInt::from(-1)) } else { c.clone() };
    let s = match (c.a.is_zero(), c.b.is_zero()) {
        (_, true) => c.a.to_string(),
        (true, false) => format!("{}*r3", c.b),
        (false, false) => {
            if c.b.is_negative() {
                format!("({} - {}*r3)", c.a, -&c.b)
            } else {
                format!("({} + {}*r3)", c.a, c.b)
            }
        }
    };
    (neg, s)
}

/// Text in the parser's syntax, ascending in every variable.
pub fn relation_text(p: &Rel) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let (neg, s) = coeff_text(c);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| if e == 1 { p.vars()[k].clone() } else { format!("{}^{}", p.vars()[k], e) })
            .collect();
        if mono.is_empty() {
            out.push_str(&s);
        } else if s == "1" {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&s);
            out.push('*');
            out.push_str(&mono.join("*"));
        }
    }
    out
}

fn parse(src: &str, vars: &[&str]) -> Rel {
    MultiPoly::parse(src, vars).expect("internal polynomial literal")
}

fn parse_q(src: &str, vars: &[&str]) -> MultiPoly<BigRational> {
    MultiPoly::parse(src, vars).expect("internal polynomial literal")
}

fn restrict(p: &Rel, vars: &[&str]) -> Rel {
    p.with_vars(vars)
}

fn primitive_positive(p: &ZPoly) -> ZPoly {
    let q = p.primitive_part();
    if q.lc().is_negative() {
        q.neg()
    } else {
        q
    }
}

// ---------- numeric witnesses ----------

/// Certified coordinates at the solved height, in every frame.
pub struct Witness {
    pub bits: u32,
    pub t: DyadicInterval,
    pub a: Configuration<Num>,
    pub f: Configuration<Num>,
    pub k: Configuration<Num>,
    pub mirror: Configuration<Num>,
}

impl Witness {
    pub fn new(bits: u32) -> Result<Self, PipelineError> {
        let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits + 16));
        let t = solve_t(&tol).with_precision(bits + 64);
        let a = build(&Num::new(t.clone()))?;
        Ok(Witness { bits, f: a.transform(Frame::F)?, k: a.transform(Frame::K)?, mirror: a.transform(Frame::JMirror)?, a, t })
    }

    fn coord(cfg: &Configuration<Num>, name: &str) -> DyadicInterval {
        let mut it = name.chars();
        let axis = it.next().expect("coordinate name");
        let p = cfg.point(it.next().expect("coordinate name")).expect("configured point");
        if axis == 'x' {
            p.x.iv.clone()
        } else {
            p.y.iv.clone()
        }
    }

    /// A-frame coordinate like `"xD"`, or `T`, `X`, `Y`.
    pub fn a(&self, name: &str) -> DyadicInterval {
        match name {
            "T" => self.t.clone(),
            "X" => Self::coord(&self.a, "xD").sub(&Self::coord(&self.a, "xF")),
            "Y" => Self::coord(&self.a, "yD").sub(&Self::coord(&self.a, "yF")),
            _ => Self::coord(&self.a, name),
        }
    }

    /// F-frame coordinate; `s` is half of |FD|.
    pub fn f(&self, name: &str) -> DyadicInterval {
        if name == "s" {
            return Self::coord(&self.f, "xD").scale_rational(&BigRational::new(1.into(), 2.into()));
        }
        Self::coord(&self.f, name)
    }

    pub fn k(&self, name: &str) -> DyadicInterval {
        Self::coord(&self.k, name)
    }
}

fn choose<P: harborth_algebra::factor::IntervalEval + Clone>(id: &str, cands: &[P], point: Vec<DyadicInterval>, bits: u32) -> Result<P, PipelineError> {
    let i = select_factor(cands, |_| point.clone(), bits, bits).map_err(|e| PipelineError::SelectionAmbiguous(id.into(), e.to_string()))?;
    Ok(cands[i].clone())
}

/// Factor a bivariate relation over Z[√3] and keep the factor through the
/// witness; with `over_z` the conjugate is multiplied back in when needed.
fn select_bivariate(id: &str, p: &Rel, main: &str, param: &str, point: Vec<DyadicInterval>, bits: u32, over_z: bool) -> Result<Rel, PipelineError> {
    let p = restrict(p, &[main, param]);
    let fac = factor_bivariate(&p, main, param).map_err(|e| PipelineError::Algebra(format!("{id}: {e}")))?;
    let cands: Vec<Rel> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
    let mut f = choose(id, &cands, point, bits)?;
    if over_z && !is_rational(&f) {
        f = f.mul(&conj(&f));
    }
    Ok(normalize(&f))
}

fn select_univariate(id: &str, p: &ZPoly, point: DyadicInterval, bits: u32) -> Result<(ZPoly, Vec<usize>), PipelineError> {
    let fac = factor_z(p);
    let cands: Vec<ZPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
    let f = choose(id, &cands, vec![point], bits)?;
    Ok((primitive_positive(&f), fac.degrees().into_iter().map(|(d, _)| d).collect()))
}

// ---------- records ----------

struct Rec {
    stage: u8,
    id: &'static str,
    anchor: &'static str,
    inputs: Vec<String>,
    tools: Vec<String>,
    witness: Option<String>,
}

impl Rec {
    fn new(stage: u8, id: &'static str, anchor: &'static str) -> Self {
        Rec { stage, id, anchor, inputs: vec![], tools: vec![], witness: None }
    }
    fn inputs(mut self, v: &[&str]) -> Self {
        self.inputs = v.iter().map(|s| s.to_string()).collect();
        self
    }
    fn tool(mut self, t: impl Into<String>) -> Self {
        self.tools.push(t.into());
        self
    }
    fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
    /// Finish with a relation; rescaled onto the golden entry of the same id if there is one.
    fn relation(self, p: &Rel) -> DerivationRecord {
        let g = GoldenTable::get();
        let mut p = normalize(p);
        let mut extra = BTreeMap::new();
        if let Ok(gold) = g.relation(self.id) {
            match rescale_onto(&p, &gold) {
                Some(q) => {
                    p = q;
                    extra.insert("golden".into(), "match".into());
                }
                None => {
                    extra.insert("golden".into(), "MISMATCH".into());
                }
            }
        }
        let ring = if is_rational(&p) { "Z" } else { "Zsqrt3" };
        DerivationRecord {
            stage: self.stage,
            id: self.id.into(),
            anchor: self.anchor.into(),
            inputs: self.inputs,
            tools: self.tools,
            vars: p.vars().to_vec(),
            ring: ring.into(),
            output: relation_text(&p),
            poly: None,
            witness: self.witness,
            extra,
        }
    }
    fn univariate(self, var: &str, p: &ZPoly) -> DerivationRecord {
        let rel: Rel = MultiPoly::from_poly(&[var], var, &p.map(|c| QuadInt::rational(c.clone())));
        DerivationRecord {
            stage: self.stage,
            id: self.id.into(),
            anchor: self.anchor.into(),
            inputs: self.inputs,
            tools: self.tools,
            vars: vec![var.into()],
            ring: "Z".into(),
            output: relation_text(&rel),
            poly: Some(PolyJson::from_z(var, p)),
            witness: self.witness,
            extra: BTreeMap::new(),
        }
    }
}

fn fmt_point(names: &[&str], pt: &[DyadicInterval]) -> String {
    names.iter().zip(pt).map(|(n, v)| format!("{n}≈{:.15}", v.mid_f64())).collect::<Vec<_>>().join(", ")
}

fn groebner_tool(order: &[&str]) -> String {
    format!("groebner lex [{}]", order.join(" > "))
}

/// Elimination ideal element in exactly `keep`, of least total degree.
fn eliminate_to(gens: &[MultiPoly<BigRational>], order: &[&str], keep: &[&str]) -> Rel {
    let drop: Vec<&str> = order.iter().filter(|v| !keep.contains(v)).copied().collect();
    let step = eliminate(gens, order, &drop);
    let main = keep[0];
    let out = step
        .output
        .iter()
        .filter(|p| p.var_index(main).map(|i| p.involves(i)).unwrap_or(false))
        .min_by_key(|p| (p.total_degree(), p.num_terms()))
        .expect("elimination ideal contains a relation")
        .clone();
    from_rational(&restrict_q(&out, keep))
}

fn restrict_q(p: &MultiPoly<BigRational>, vars: &[&str]) -> MultiPoly<BigRational> {
    p.with_vars(vars)
}

// ---------- stages ----------

fn stage1(w: &Witness) -> Result<Vec<DerivationRecord>, PipelineError> {
    let bits = w.bits;
    let dv = ["t", "xD", "yD", "T"];
    let dgens = [
        parse_q("t^2 + T^2 - 1", &dv),
        parse_q("-t(xD - 2t) + T*yD - 3/2", &dv),
        parse_q("(xD - 2t)^2 + yD^2 - 9", &dv),
    ];
    let ev = ["t", "xE", "yE", "T"];
    let egens = [
        parse_q("t^2 + T^2 - 1", &ev),
        parse_q("t(xE - t) - T(yE - T) + 1", &ev),
        parse_q("(xE - t)^2 + (yE - T)^2 - 4", &ev),
    ];
    let mut out = vec![];

    let order = ["t", "xD", "yD", "T"];
    let r = eliminate_to(&dgens, &order, &["yD", "T"]);
    let pt = vec![w.a("yD"), w.t.clone()];
    let wit = fmt_point(&["yD", "T"], &pt);
    let r = select_bivariate("P_yD_T", &r, "yD", "T", pt, bits, true)?;
    out.push(Rec::new(1, "P_yD_T", "y-coordinate of D against T").tool(groebner_tool(&order)).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r));

    let order = ["t", "yD", "xD", "T"];
    let quartic = eliminate_to(&dgens, &order, &["xD", "T"]);
    out.push(Rec::new(1, "xD_T_quartic", "x-coordinate of D against T, over Q").tool(groebner_tool(&order)).relation(&quartic));
    let pt = vec![w.a("xD"), w.t.clone()];
    let wit = fmt_point(&["xD", "T"], &pt);
    let r = select_bivariate("P_xD_T", &quartic, "xD", "T", pt, bits, false)?;
    out.push(Rec::new(1, "P_xD_T", "x-coordinate of D against T, over Z[√3]").inputs(&["xD_T_quartic"]).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r));

    for (id, order, keep) in [("P_yE_T", ["t", "xE", "yE", "T"], ["yE", "T"]), ("P_xE_T", ["t", "yE", "xE", "T"], ["xE", "T"])] {
        let r = eliminate_to(&egens, &order, &keep);
        let pt = vec![w.a(keep[0]), w.t.clone()];
        let wit = fmt_point(&keep, &pt);
        let r = select_bivariate(id, &r, keep[0], "T", pt, bits, true)?;
        let anchor = if id == "P_yE_T" { "y-coordinate of E against T" } else { "x-coordinate of E against T" };
        out.push(Rec::new(1, id, anchor).tool(groebner_tool(&order)).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r));
    }
    Ok(out)
}

fn stage2(w: &Witness, prev: &Store) -> Result<Vec<DerivationRecord>, PipelineError> {
    let bits = w.bits;
    let vars = ["xE", "yE", "xF", "yF", "T"];
    let lift = |id: &str| -> MultiPoly<BigRational> {
        let r = prev.get(id).relation();
        r.with_vars(&vars).map(|c| BigRational::from_integer(c.a.clone()))
    };
    let gens = [lift("P_xE_T"), lift("P_yE_T"), parse_q("xF^2 + yF^2 - 1", &vars), parse_q("(xE - xF)^2 + (yE - yF)^2 - 1", &vars)];
    let mut out = vec![];

    let order = ["xE", "yE", "yF", "xF", "T"];
    let octic = eliminate_to(&gens, &order, &["xF", "T"]);
    out.push(Rec::new(2, "xF_T_octic", "x-coordinate of F against T, over Q").inputs(&["P_xE_T", "P_yE_T"]).tool(groebner_tool(&order)).relation(&octic));
    let pt = vec![w.a("xF"), w.t.clone()];
    let wit = fmt_point(&["xF", "T"], &pt);
    let r = select_bivariate("P_xF_T", &octic, "xF", "T", pt, bits, false)?;
    out.push(Rec::new(2, "P_xF_T", "x-coordinate of F against T, over Z[√3]").inputs(&["xF_T_octic"]).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r));

    let order = ["xE", "yE", "xF", "yF", "T"];
    let r = eliminate_to(&gens, &order, &["yF", "T"]);
    let pt = vec![w.a("yF"), w.t.clone()];
    let wit = fmt_point(&["yF", "T"], &pt);
    let r = select_bivariate("P_yF_T", &r, "yF", "T", pt, bits, true)?;
    out.push(Rec::new(2, "P_yF_T", "y-coordinate of F against T").inputs(&["P_xE_T", "P_yE_T"]).tool(groebner_tool(&order)).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r));
    Ok(out)
}

fn stage3(w: &Witness) -> Result<Vec<DerivationRecord>, PipelineError> {
    let bits = w.bits;
    let mut out = vec![];
    // G from |FG| = 1, |DG| = 2 with F = (0,0), D = (2s,0)
    let g = ["xG² + yG² = 1", "(xG − 2s)² + yG² = 4"];
    let jobs: [(&'static str, &'static str, [&str; 3], Vec<&str>, &str, &str); 6] = [
        ("P_xG_s", "G in the frame of F and D", ["yG", "xG", "s"], vec![], "xG", "s"),
        ("P_yG_s", "G in the frame of F and D", ["xG", "yG", "s"], vec![], "yG", "s"),
        ("P_xH_s", "H in the frame of F and D", ["yH", "xH", "s"], vec!["(xH - 2s)^2 + yH^2 - 4", "(xH - xG)^2 + (yH - yG)^2 - 4"], "xH", "s"),
        ("P_yH_s", "H in the frame of F and D", ["xH", "yH", "s"], vec!["(xH - 2s)^2 + yH^2 - 4", "(xH - xG)^2 + (yH - yG)^2 - 4"], "yH", "s"),
        ("P_xJ_s", "J in the frame of F and D", ["yJ", "xJ", "s"], vec!["xJ^2 + yJ^2 - 1", "(xJ - xG)^2 + (yJ - yG)^2 - 1"], "xJ", "s"),
        ("P_yJ_s", "J in the frame of F and D", ["xJ", "yJ", "s"], vec!["xJ^2 + yJ^2 - 1", "(xJ - xG)^2 + (yJ - yG)^2 - 1"], "yJ", "s"),
    ];
    let results: Vec<Result<DerivationRecord, PipelineError>> = jobs
        .par_iter()
        .map(|(id, anchor, tail, extra, main, param)| {
            let mut order: Vec<&str> = vec![];
            if !extra.is_empty() {
                order.extend(["yG", "xG"]);
            }
            order.extend(tail.iter());
            let gens: Vec<MultiPoly<BigRational>> = ["xG^2 + yG^2 - 1", "(xG - 2s)^2 + yG^2 - 4"].iter().chain(extra.iter()).map(|s| parse_q(s, &order)).collect();
            let r = eliminate_to(&gens, &order, &[main, param]);
            let pt = vec![w.f(main), w.f(param)];
            let wit = fmt_point(&[main, param], &pt);
            let r = select_bivariate(id, &r, main, param, pt, bits, true)?;
            Ok(Rec::new(3, id, anchor).tool(groebner_tool(&order)).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&r))
        })
        .collect();
    for r in results {
        out.push(r?);
    }
    let _ = g;

    // HJ ⟂ AC as a relation between X = xD − xF and Y = yD − yF
    let v = ["X", "Y"];
    let slope = parse("3X^2(-9 + 10(X^2 + Y^2) - (X^2 + Y^2)^2) - (3r3*Y - (X^2 + Y^2)X)^2", &v);
    out.push(Rec::new(3, "slope_condition", "orthogonality of HJ and AC in X, Y").tool("slope of HJ against DF with 4s² = X² + Y²").relation(&slope));
    let pt = vec![w.a("X"), w.a("Y")];
    let wit = fmt_point(&v, &pt);
    let f = select_bivariate("F_XY", &slope, "X", "Y", pt, bits, false)?;
    out.push(Rec::new(3, "F_XY", "orthogonality factor through the configuration").inputs(&["slope_condition"]).tool("factor_bivariate Z[√3]").tool("select").witness(wit).relation(&f));
    Ok(out)
}

/// Res_{vD}(P_{vF,T}(vD − V), P_{vD,T}) and its factor through the witness.
fn difference_relation(id: &str, pf: &Rel, pd: &Rel, coord: char, big: &str, w: &Witness, over_z: bool) -> Result<Rel, PipelineError> {
    let vf = format!("{coord}F");
    let vd = format!("{coord}D");
    let vars = [vf.as_str(), vd.as_str(), big, "T"];
    let pf = pf.with_vars(&vars);
    let shift = parse(&format!("{vd} - {big}"), &vars);
    let pf = pf.substitute(0, &shift).with_vars(&vars[1..]);
    let pd = pd.with_vars(&vars[1..]);
    let r = resultant(&pf, &pd, &vd).map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let pt = vec![w.a(big), w.t.clone()];
    select_bivariate(id, &r, big, "T", pt, w.bits, over_z)
}

fn stage4(w: &Witness, prev: &Store) -> Result<Vec<DerivationRecord>, PipelineError> {
    let px = difference_relation("P_X_T", &prev.get("P_xF_T").relation(), &prev.get("P_xD_T").relation(), 'x', "X", w, false)?;
    let py = difference_relation("P_Y_T", &prev.get("P_yF_T").relation(), &prev.get("P_yD_T").relation(), 'y', "Y", w, true)?;
    let wx = fmt_point(&["X", "T"], &[w.a("X"), w.t.clone()]);
    let wy = fmt_point(&["Y", "T"], &[w.a("Y"), w.t.clone()]);
    Ok(vec![
        Rec::new(4, "P_X_T", "X = xD − xF against T")
            .inputs(&["P_xF_T", "P_xD_T"])
            .tool("resultant in xD after xF ↦ xD − X")
            .tool("factor_bivariate Z[√3]")
            .tool("select")
            .witness(wx)
            .relation(&px),
        Rec::new(4, "P_Y_T", "Y = yD − yF against T")
            .inputs(&["P_yF_T", "P_yD_T"])
            .tool("resultant in yD after yF ↦ yD − Y")
            .tool("factor_bivariate Z[√3]")
            .tool("select")
            .witness(wy)
            .relation(&py),
    ])
}

/// Stage-5 bookkeeping: the big resultant and what divides it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorAccounting {
    pub total_degree: usize,
    pub linear_factors_divide: bool,
    pub quartic_power: u32,
    pub quartic_divides: bool,
    pub pt_divides: bool,
    pub cofactor_degree: usize,
    /// irreducible factors of the cofactor over Z, when it has integer coefficients
    pub cofactor_factor_degrees: Vec<usize>,
}

fn stage5(w: &Witness, prev: &Store) -> Result<Vec<DerivationRecord>, PipelineError> {
    let vars = ["X", "Y", "T"];
    let f = prev.get("F_XY").relation().with_vars(&vars);
    let px = prev.get("P_X_T").relation().with_vars(&vars);
    let py = prev.get("P_Y_T").relation().with_vars(&vars);
    let ra = resultant(&f, &px, "X").map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let r = resultant(&ra, &py, "Y").map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let big = Zs3Poly::new(r.to_poly(2).expect("univariate in T").coeffs().to_vec());
    let total_degree = big.deg();

    // reconstruct the minimal polynomial of T from a sharp enclosure
    let cache: Mutex<Option<DyadicInterval>> = Mutex::new(None);
    let refine = |prec: u32| -> DyadicInterval {
        let mut c = cache.lock().expect("enclosure cache");
        if let Some(iv) = c.as_ref() {
            if iv.precision() >= prec {
                return iv.with_precision(prec);
            }
        }
        let tol = BigRational::new(BigInt::one(), BigInt::one() << (prec + 8));
        let iv = solve_t(&tol).with_precision(prec);
        *c = Some(iv.clone());
        iv
    };
    let mut found = None;
    for bound in [24, 48] {
        if let Ok(p) = minpoly_reconstruct(&refine, bound, 48) {
            found = Some((primitive_positive(&p), bound));
            break;
        }
    }
    let (pt, bound) = found.ok_or_else(|| PipelineError::Algebra("minimal polynomial of T not reconstructed".into()))?;

    let lin_p = Zs3Poly::new(vec![QuadInt::sqrt3(), qi(2)]);
    let lin_m = Zs3Poly::new(vec![QuadInt::sqrt3().scale(&BigInt::from(-1)), qi(2)]);
    let quartic = Zs3Poly::new(vec![qi(9), qi(0), qi(-24), qi(0), qi(64)]);
    let mut rest = big.clone();
    let mut linear_ok = true;
    for l in [&lin_p, &lin_m] {
        match rest.div_exact(l) {
            Ok(q) => rest = q,
            Err(_) => linear_ok = false,
        }
    }
    let mut power = 0;
    while let Ok(q) = rest.div_exact(&quartic) {
        rest = q;
        power += 1;
    }
    let pt_s3 = pt.to_zs3();
    let (pt_divides, cofactor) = match rest.div_exact(&pt_s3) {
        Ok(q) => (true, q),
        Err(_) => (false, rest.clone()),
    };
    let cofactor_factors: Vec<ZPoly> = match cofactor.to_z() {
        Some(z) if pt_divides => {
            let mut fs: Vec<ZPoly> = factor_z(&z).factors.into_iter().map(|(f, _)| primitive_positive(&f)).collect();
            fs.sort_by_key(|f| f.deg());
            fs
        }
        _ => vec![],
    };
    let acct = FactorAccounting {
        total_degree,
        linear_factors_divide: linear_ok,
        quartic_power: power,
        quartic_divides: power == 6,
        pt_divides,
        cofactor_degree: cofactor.deg(),
        cofactor_factor_degrees: cofactor_factors.iter().map(|f| f.deg()).collect(),
    };
    let mut res = Rec::new(5, "stage5_resultant", "resultant in T of the slope condition with the X and Y relations")
        .inputs(&["F_XY", "P_X_T", "P_Y_T"])
        .tool("resultant in X")
        .tool("resultant in Y")
        .univariate_zs3("T", &big);
    res.extra.insert("accounting".into(), serde_json::to_string(&acct)?);
    let gold = GoldenTable::get().minpoly("P_T").map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let mut rec = Rec::new(5, "P_T", "minimal polynomial of T")
        .inputs(&["stage5_resultant"])
        .tool(format!("minpoly_reconstruct degree ≤ {bound}"))
        .tool("exact division into the resultant over Z[√3]")
        .witness(format!("T≈{:.15}", w.t.mid_f64()))
        .univariate("T", &pt);
    rec.extra.insert("golden".into(), if pt == gold { "match" } else { "MISMATCH" }.into());
    let mut out = vec![res, rec];
    for f in &cofactor_factors {
        let id: &'static str = match f.deg() {
            28 => "stage5_cofactor_28",
            80 => "stage5_cofactor_80",
            _ => "stage5_cofactor",
        };
        out.push(
            Rec::new(5, id, "further irreducible factor of the resultant")
                .inputs(&["stage5_resultant", "P_T"])
                .tool("exact division by the known factors")
                .tool("factor_z")
                .univariate("T", f),
        );
    }
    Ok(out)
}

impl Rec {
    fn univariate_zs3(self, var: &str, p: &Zs3Poly) -> DerivationRecord {
        let rel: Rel = MultiPoly::from_poly(&[var], var, p);
        DerivationRecord {
            stage: self.stage,
            id: self.id.into(),
            anchor: self.anchor.into(),
            inputs: self.inputs,
            tools: self.tools,
            vars: vec![var.into()],
            ring: if p.to_z().is_some() { "Z" } else { "Zsqrt3" }.into(),
            output: relation_text(&rel),
            poly: Some(PolyJson::from_zs3(var, p)),
            witness: self.witness,
            extra: BTreeMap::new(),
        }
    }
}

/// Exact configuration over Q(T, √3) at the root of P_T near the witness.
fn exact_configuration(pt: &ZPoly) -> Result<Configuration<TowerElement>, PipelineError> {
    let lo = BigRational::new(12.into(), 100.into());
    let hi = BigRational::new(13.into(), 100.into());
    let t = AlgebraicNumber::root_in(pt, &lo, &hi).map_err(|e| PipelineError::Algebra(e.to_string()))?;
    Ok(tower_build(&t)?)
}

fn tower_minpoly(cfg: &Configuration<TowerElement>, name: &str) -> Result<ZPoly, PipelineError> {
    let mut it = name.chars();
    let axis = it.next().unwrap_or('x');
    let p = cfg.point(it.next().unwrap_or('A'))?;
    let v = if axis == 'x' { &p.x } else { &p.y };
    let l = v.as_base().ok_or_else(|| PipelineError::Algebra(format!("{name} needs radicals beyond √3")))?;
    Ok(primitive_positive(&l.minpoly()))
}

fn golden_tag(rec: &mut DerivationRecord, name: &str, p: &ZPoly) {
    let ok = GoldenTable::get().minpoly(name).map(|g| &g == p).unwrap_or(false);
    rec.extra.insert("golden".into(), if ok { "match" } else { "MISMATCH" }.into());
}

/// Res_T(P_T, P_{v,T}) then the factor through the witness.
fn via_resultant(id: &'static str, rel: &Rel, pt: &ZPoly, var: &str, witness: DyadicInterval, bits: u32) -> Result<(ZPoly, Vec<usize>), PipelineError> {
    let vars = [var, "T"];
    let rel = rel.with_vars(&vars).map(|c| c.a.clone());
    let ptm: MultiPoly<BigInt> = MultiPoly::from_poly(&vars, "T", pt);
    let r = resultant(&rel, &ptm, "T").map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let u = r.to_poly(0).expect("univariate");
    select_univariate(id, &u, witness, bits)
}

fn stage6(w: &Witness, prev: &Store, exact: &Configuration<TowerElement>) -> Result<Vec<DerivationRecord>, PipelineError> {
    let pt = prev.get("P_T").univariate().expect("P_T");
    let bits = w.bits;
    let ids = ["P_yD", "P_yE", "P_yF", "P_yG", "P_yH", "P_yJ"];
    let res: Vec<Result<DerivationRecord, PipelineError>> = ids
        .par_iter()
        .map(|&id| {
            let coord = &id[2..];
            let var = coord;
            let mut rec = if ["yD", "yE", "yF"].contains(&coord) {
                let rel_id: &'static str = match coord {
                    "yD" => "P_yD_T",
                    "yE" => "P_yE_T",
                    _ => "P_yF_T",
                };
                let (p, degs) = via_resultant(id, &prev.get(rel_id).relation(), &pt, var, w.a(coord), bits)?;
                let mut r = Rec::new(6, id, "y-coordinate minimal polynomial")
                    .inputs(&["P_T", rel_id])
                    .tool("resultant in T")
                    .tool("factor_z")
                    .tool("select")
                    .witness(fmt_point(&[coord], &[w.a(coord)]))
                    .univariate(var, &p);
                r.extra.insert("factor_degrees".into(), format!("{degs:?}"));
                r
            } else {
                let p = tower_minpoly(exact, coord)?;
                Rec::new(6, id, "y-coordinate minimal polynomial")
                    .inputs(&["P_T"])
                    .tool("exact construction over Q(T)[√3]")
                    .tool("characteristic polynomial of multiplication")
                    .univariate(var, &p)
            };
            let p = rec.univariate().expect("univariate output");
            golden_tag(&mut rec, id, &p);
            Ok(rec)
        })
        .collect();
    res.into_iter().collect()
}

fn stage7(w: &Witness, prev: &Store, exact: &Configuration<TowerElement>) -> Result<Vec<DerivationRecord>, PipelineError> {
    let bits = w.bits;
    let k = exact.transform(Frame::K)?;
    let ids = ["P_xA", "P_xB", "P_xC", "P_xD", "P_xE", "P_xF"];
    let mut out: Vec<DerivationRecord> = ids
        .par_iter()
        .map(|&id| -> Result<DerivationRecord, PipelineError> {
            let coord = &id[2..];
            let p = tower_minpoly(&k, coord)?;
            let mut rec = Rec::new(7, id, "x-coordinate minimal polynomial after the shift by −xJ")
                .inputs(&["P_T"])
                .tool("exact construction over Q(T)[√3]")
                .tool("shift by −xJ")
                .tool("characteristic polynomial of multiplication")
                .univariate(coord, &p);
            golden_tag(&mut rec, id, &p);
            Ok(rec)
        })
        .collect::<Result<_, _>>()?;

    // xG through the mirrored frame: U-coordinates of G and F
    let pxf = out.iter().find(|r| r.id == "P_xF").and_then(|r| r.univariate()).expect("P_xF");
    let vars = ["U", "y"];
    let rel = parse("-3 + 4U^2 - 4U*y + 4y^2", &vars).map(|c| c.a.clone());
    let pm: MultiPoly<BigInt> = MultiPoly::from_poly(&vars, "y", &pxf);
    let r = resultant(&rel, &pm, "y").map_err(|e| PipelineError::Algebra(e.to_string()))?;
    let u = r.to_poly(0).expect("univariate");
    let ug = w.k("xG");
    let (p, degs) = select_univariate("P_xG", &u, ug.clone(), bits)?;
    let check = tower_minpoly(&k, "xG")?;
    let mut rec = Rec::new(7, "P_xG", "x-coordinate of G via the mirrored frame")
        .inputs(&["P_xF"])
        .tool("resultant in the mirrored coordinate of F")
        .tool("factor_z")
        .tool("select")
        .witness(fmt_point(&["U"], &[ug]))
        .univariate("xG", &p);
    rec.extra.insert("factor_degrees".into(), format!("{degs:?}"));
    rec.extra.insert("tower_cross_check".into(), if check == p { "agree" } else { "DISAGREE" }.into());
    golden_tag(&mut rec, "P_xG", &p);
    out.push(rec);
    let _ = prev;
    Ok(out)
}

// ---------- orchestration ----------

/// All records so far, by id.
#[derive(Default, Clone, Debug)]
pub struct Store {
    pub by_stage: BTreeMap<u8, Vec<DerivationRecord>>,
}

impl Store {
    pub fn get(&self, id: &str) -> &DerivationRecord {
        self.find(id).unwrap_or_else(|| panic!("record {id} missing"))
    }

    pub fn find(&self, id: &str) -> Option<&DerivationRecord> {
        self.by_stage.values().flatten().find(|r| r.id == id)
    }

    pub fn all(&self) -> impl Iterator<Item = &DerivationRecord> {
        self.by_stage.values().flatten()
    }
}

pub struct Pipeline {
    pub bits: u32,
    pub cache: Option<PathBuf>,
    pub store: Store,
    witness: OnceLock<Witness>,
    exact: OnceLock<Configuration<TowerElement>>,
}

impl Pipeline {
    pub fn new(bits: u32, cache: Option<PathBuf>) -> Self {
        Pipeline { bits, cache, store: Store::default(), witness: OnceLock::new(), exact: OnceLock::new() }
    }

    pub fn witness(&self) -> Result<&Witness, PipelineError> {
        if let Some(w) = self.witness.get() {
            return Ok(w);
        }
        let w = Witness::new(self.bits)?;
        Ok(self.witness.get_or_init(|| w))
    }

    /// The exact configuration at the root of the derived P_T.
    pub fn exact(&self) -> Result<&Configuration<TowerElement>, PipelineError> {
        if let Some(c) = self.exact.get() {
            return Ok(c);
        }
        let pt = self.store.find("P_T").and_then(|r| r.univariate()).ok_or(PipelineError::StageDependencyMissing(6, 5))?;
        let c = exact_configuration(&pt)?;
        Ok(self.exact.get_or_init(|| c))
    }

    fn key(&self, n: u8) -> Result<String, PipelineError> {
        let prior: Vec<&Vec<DerivationRecord>> = self.store.by_stage.range(..n).map(|(_, v)| v).collect();
        let mut h = Sha256::new();
        h.update(format!("stage={n};bits={};version={};schema={CACHE_SCHEMA}", self.bits, env!("CARGO_PKG_VERSION")));
        h.update(serde_json::to_vec(&prior)?);
        Ok(h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect())
    }

    fn cache_path(&self, n: u8) -> Result<Option<PathBuf>, PipelineError> {
        Ok(match &self.cache {
            Some(dir) => Some(dir.join(format!("stage{n}-{}.json", self.key(n)?))),
            None => None,
        })
    }

    /// Run one stage; earlier stages must already be present.
    pub fn run_stage(&mut self, n: u8) -> Result<&[DerivationRecord], PipelineError> {
        if !(1..=7).contains(&n) {
            return Err(PipelineError::NoSuchStage(n));
        }
        if let Some(missing) = (1..n).find(|k| !self.store.by_stage.contains_key(k)) {
            return Err(PipelineError::StageDependencyMissing(n, missing));
        }
        if !self.store.by_stage.contains_key(&n) {
            let path = self.cache_path(n)?;
            let cached = path.as_ref().and_then(|p| std::fs::read_to_string(p).ok()).and_then(|s| serde_json::from_str::<Vec<DerivationRecord>>(&s).ok());
            let recs = match cached {
                Some(r) => r,
                None => {
                    let r = self.compute(n)?;
                    if let Some(p) = &path {
                        std::fs::create_dir_all(p.parent().expect("cache dir"))?;
                        std::fs::write(p, serde_json::to_string_pretty(&r)? + "\n")?;
                    }
                    r
                }
            };
            self.store.by_stage.insert(n, recs);
        }
        Ok(&self.store.by_stage[&n])
    }

    /// Stages 1 through `n` in order.
    pub fn run_through(&mut self, n: u8) -> Result<(), PipelineError> {
        if !(1..=7).contains(&n) {
            return Err(PipelineError::NoSuchStage(n));
        }
        for k in 1..=n {
            self.run_stage(k)?;
        }
        Ok(())
    }

    fn compute(&self, n: u8) -> Result<Vec<DerivationRecord>, PipelineError> {
        let w = self.witness()?;
        let s = &self.store;
        match n {
            1 => stage1(w),
            2 => stage2(w, s),
            3 => stage3(w),
            4 => stage4(w, s),
            5 => stage5(w, s),
            6 => stage6(w, s, self.exact()?),
            7 => stage7(w, s, self.exact()?),
            _ => Err(PipelineError::NoSuchStage(n)),
        }
    }

    /// Coordinate minimal polynomials derived so far, in report order.
    pub fn minpolys(&self) -> Vec<(String, ZPoly)> {
        crate::golden::MINPOLY_NAMES.iter().filter_map(|n| self.store.find(n).and_then(|r| r.univariate()).map(|p| (n.to_string(), p))).collect()
    }
}

/// Enclosure of T at `bits`, as used by every stage.
pub fn t_enclosure(bits: u32) -> DyadicInterval {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << bits);
    solve_t(&tol)
}

pub fn dyadic_mid(iv: &DyadicInterval) -> Dyadic {
    iv.mid()
}
