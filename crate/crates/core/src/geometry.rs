//! Circle-circle construction of the crucial vertices A…J, generic over the
//! scalar type: certified intervals for numerics, tower elements for exact work.

use harborth_algebra::algnum::{AlgebraicNumber, BaseField, LElem, Tower, TowerElement, TowerError};
use harborth_algebra::dyadic::sqrt3_interval;
use harborth_algebra::DyadicInterval;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("circles do not intersect")]
    NoIntersection,
    #[error("circles are tangent within the working precision")]
    TangentDegenerate,
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("degenerate construction: division by zero")]
    Degenerate,
    #[error("frame change needs point {0}")]
    MissingAnchor(char),
}

/// Field operations plus a branch-aware square root.
pub trait Scalar: Clone {
    /// A rational constant living in the same context as `self`.
    fn rational(&self, q: &BigRational) -> Self;
    fn sqrt3(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, GeomError>;
    /// `sign · √self`.
    fn sqrt_branch(&self, sign: i32) -> Result<Self, GeomError>;
    fn enclosure(&self, prec: u32) -> DyadicInterval;

    /// `self` re-expressed in a context at least as large as `o`'s.
    fn join(&self, _o: &Self) -> Self {
        self.clone()
    }

    fn int(&self, n: i64) -> Self {
        self.rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }
}

/// Interval scalar. With `tangent_ok`, a radicand straddling zero is read as
/// a tangency and its root enclosed from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num {
    pub iv: DyadicInterval,
    pub tangent_ok: bool,
}

impl Num {
    pub fn new(iv: DyadicInterval) -> Self {
        Num { iv, tangent_ok: false }
    }

    pub fn tolerant(iv: DyadicInterval) -> Self {
        Num { iv, tangent_ok: true }
    }

    fn wrap(&self, iv: DyadicInterval, o: &Num) -> Num {
        Num { iv, tangent_ok: self.tangent_ok || o.tangent_ok }
    }

    pub fn mid_f64(&self) -> f64 {
        self.iv.mid_f64()
    }
}

impl Scalar for Num {
    fn rational(&self, q: &BigRational) -> Self {
        Num { iv: DyadicInterval::from_rational(q, self.iv.precision()), tangent_ok: self.tangent_ok }
    }
    fn sqrt3(&self) -> Self {
        Num { iv: sqrt3_interval(self.iv.precision()), tangent_ok: self.tangent_ok }
    }
    fn add(&self, o: &Self) -> Self {
        self.wrap(self.iv.add(&o.iv), o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.wrap(self.iv.sub(&o.iv), o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.wrap(self.iv.mul(&o.iv), o)
    }
    fn neg(&self) -> Self {
        Num { iv: self.iv.neg(), tangent_ok: self.tangent_ok }
    }
    fn div(&self, o: &Self) -> Result<Self, GeomError> {
        Ok(self.wrap(self.iv.div(&o.iv).map_err(|_| GeomError::Degenerate)?, o))
    }
    fn sqrt_branch(&self, sign: i32) -> Result<Self, GeomError> {
        if self.iv.is_negative() {
            return Err(GeomError::NoIntersection);
        }
        if self.iv.contains_zero() && !self.tangent_ok {
            return Err(GeomError::TangentDegenerate);
        }
        let r = self.iv.sqrt().map_err(|_| GeomError::NoIntersection)?;
        Ok(Num { iv: if sign < 0 { r.neg() } else { r }, tangent_ok: self.tangent_ok })
    }
    fn enclosure(&self, _prec: u32) -> DyadicInterval {
        self.iv.clone()
    }
}

impl Scalar for TowerElement {
    fn rational(&self, q: &BigRational) -> Self {
        TowerElement::from_rational(self.tower(), q.clone())
    }
    fn sqrt3(&self) -> Self {
        TowerElement::from_base(self.tower(), LElem::sqrt3(self.tower().base()))
    }
    fn add(&self, o: &Self) -> Self {
        TowerElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        TowerElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        TowerElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        TowerElement::neg(self)
    }
    fn div(&self, o: &Self) -> Result<Self, GeomError> {
        TowerElement::div(self, o).map_err(|_| GeomError::Degenerate)
    }
    fn sqrt_branch(&self, sign: i32) -> Result<Self, GeomError> {
        self.sqrt(sign).map_err(|e| match e {
            TowerError::NegativeRadicand(s) => GeomError::NegativeRadicand(s),
            TowerError::Indeterminate => GeomError::TangentDegenerate,
            TowerError::NotInvertible => GeomError::Degenerate,
        })
    }
    fn enclosure(&self, prec: u32) -> DyadicInterval {
        self.interval(prec)
    }
    fn join(&self, o: &Self) -> Self {
        self.add(&o.scale(&BigRational::from_integer(0.into())))
    }
}

#[derive(Clone, Debug)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Point::new(self.x.sub(&o.x), self.y.sub(&o.y))
    }

    pub fn add(&self, o: &Self) -> Self {
        Point::new(self.x.add(&o.x), self.y.add(&o.y))
    }

    pub fn scale(&self, k: &S) -> Self {
        Point::new(self.x.mul(k), self.y.mul(k))
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.mul(&o.x).add(&self.y.mul(&o.y))
    }

    pub fn dist2(&self, o: &Self) -> S {
        let d = self.sub(o);
        d.dot(&d)
    }
}

/// Which intersection point: `Left` lies counterclockwise of the ray c1 → c2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Branch {
    Left,
    Right,
}

impl Branch {
    fn sign(self) -> i32 {
        match self {
            Branch::Left => 1,
            Branch::Right => -1,
        }
    }
}

/// Intersection of `|P − c1|² = r1sq` and `|P − c2|² = r2sq` on the given side.
pub fn circ_circ<S: Scalar>(c1: &Point<S>, r1sq: &BigRational, c2: &Point<S>, r2sq: &BigRational, branch: Branch) -> Result<Point<S>, GeomError> {
    let v = c2.sub(c1);
    let d2 = v.dot(&v);
    let k = d2.add(&d2.rational(&(r1sq - r2sq)));
    let disc = d2.mul(&d2.rational(&(r1sq * BigRational::from_integer(4.into())))).sub(&k.square());
    let root = disc.sqrt_branch(1)?;
    let two_d2 = d2.add(&d2);
    let a = k.div(&two_d2)?;
    let h = root.div(&two_d2)?;
    let h = if branch.sign() < 0 { h.neg() } else { h };
    Ok(Point::new(c1.x.add(&a.mul(&v.x)).sub(&h.mul(&v.y)), c1.y.add(&a.mul(&v.y)).add(&h.mul(&v.x))))
}

/// One circle-circle step: new point, the two centers with squared radii, side.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct BranchStep {
    pub point: char,
    pub c1: char,
    pub r1sq: i64,
    pub c2: char,
    pub r2sq: i64,
    pub branch: Branch,
}

/// Frozen side choices: ABEF convex, G outside the quadrangle DEF, H above
/// the line DG, J between F and G on the side of A.
pub const BRANCHES: [BranchStep; 4] = [
    BranchStep { point: 'F', c1: 'A', r1sq: 1, c2: 'E', r2sq: 1, branch: Branch::Left },
    BranchStep { point: 'G', c1: 'F', r1sq: 1, c2: 'D', r2sq: 4, branch: Branch::Left },
    BranchStep { point: 'H', c1: 'D', r1sq: 4, c2: 'G', r2sq: 4, branch: Branch::Right },
    BranchStep { point: 'J', c1: 'F', r1sq: 1, c2: 'G', r2sq: 1, branch: Branch::Left },
];

pub const POINT_NAMES: [char; 9] = ['A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'J'];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Frame {
    /// A at the origin, C on the positive x-axis.
    A,
    /// F at the origin, D on the positive x-axis.
    F,
    /// A-frame shifted by −x_J; H and J on the y-axis.
    K,
    /// Mirrored: J at the origin, H on the positive x-axis.
    JMirror,
}

#[derive(Clone, Debug)]
pub struct Configuration<S> {
    pub frame: Frame,
    pub t: S,
    pub points: BTreeMap<char, Point<S>>,
}

impl<S: Scalar> Configuration<S> {
    pub fn point(&self, name: char) -> Result<&Point<S>, GeomError> {
        self.points.get(&name).ok_or(GeomError::MissingAnchor(name))
    }

    fn map(&self, frame: Frame, f: impl Fn(&Point<S>) -> Result<Point<S>, GeomError>) -> Result<Self, GeomError> {
        let mut points = BTreeMap::new();
        for (k, p) in &self.points {
            points.insert(*k, f(p)?);
        }
        Ok(Configuration { frame, t: self.t.clone(), points })
    }

    /// Rigid motion putting `origin` at (0,0) and `axis` on the positive x-axis.
    fn align(&self, frame: Frame, origin: char, axis: char) -> Result<Self, GeomError> {
        let o = self.point(origin)?.clone();
        let d = self.point(axis)?.sub(&o);
        // new radicals must extend the deepest context in use
        let mut r = d.dot(&d);
        for p in self.points.values() {
            r = r.join(&p.x).join(&p.y);
        }
        let n = r.sqrt_branch(1)?;
        self.map(frame, |p| {
            let q = p.sub(&o);
            Ok(Point::new(d.x.mul(&q.x).add(&d.y.mul(&q.y)).div(&n)?, d.x.mul(&q.y).sub(&d.y.mul(&q.x)).div(&n)?))
        })
    }

    fn to_a(&self) -> Result<Self, GeomError> {
        match self.frame {
            Frame::A => Ok(self.clone()),
            Frame::K => {
                let xa = self.point('A')?.x.clone();
                self.map(Frame::A, |p| Ok(Point::new(p.x.sub(&xa), p.y.clone())))
            }
            Frame::JMirror => {
                let a = self.point('A')?.clone();
                self.map(Frame::A, |p| Ok(Point::new(p.y.sub(&a.y), p.x.sub(&a.x))))
            }
            Frame::F => self.align(Frame::A, 'A', 'C'),
        }
    }

    /// Exact change of frame (up to interval rounding for numeric scalars).
    pub fn transform(&self, target: Frame) -> Result<Self, GeomError> {
        let a = self.to_a()?;
        match target {
            Frame::A => Ok(a),
            Frame::K => {
                let xj = a.point('J')?.x.clone();
                a.map(Frame::K, |p| Ok(Point::new(p.x.sub(&xj), p.y.clone())))
            }
            Frame::JMirror => {
                let j = a.point('J')?.clone();
                a.map(Frame::JMirror, |p| Ok(Point::new(p.y.sub(&j.y), p.x.sub(&j.x))))
            }
            Frame::F => a.align(Frame::F, 'F', 'D'),
        }
    }

    /// The fourteen defining constraints, written frame-invariantly so that
    /// in the A-frame they are literally the published equations.
    pub fn constraints(&self) -> Result<Vec<(&'static str, S)>, GeomError> {
        let p = |c| self.point(c);
        let (a, b, c, d, e) = (p('A')?, p('B')?, p('C')?, p('D')?, p('E')?);
        let (f, g, h, j) = (p('F')?, p('G')?, p('H')?, p('J')?);
        let k = |n: i64| self.t.int(n);
        let half3 = self.t.rational(&BigRational::new(3.into(), 2.into()));
        Ok(vec![
            ("|AB|^2 = 1", a.dist2(b).sub(&k(1))),
            ("(B-C).(D-C) = 3/2", b.sub(c).dot(&d.sub(c)).sub(&half3)),
            ("|CD|^2 = 9", c.dist2(d).sub(&k(9))),
            ("(C-B).(E-B) = -1", c.sub(b).dot(&e.sub(b)).add(&k(1))),
            ("|BE|^2 = 4", b.dist2(e).sub(&k(4))),
            ("|AF|^2 = 1", a.dist2(f).sub(&k(1))),
            ("|EF|^2 = 1", e.dist2(f).sub(&k(1))),
            ("|FG|^2 = 1", f.dist2(g).sub(&k(1))),
            ("|DG|^2 = 4", d.dist2(g).sub(&k(4))),
            ("|DH|^2 = 4", d.dist2(h).sub(&k(4))),
            ("|GH|^2 = 4", g.dist2(h).sub(&k(4))),
            ("|FJ|^2 = 1", f.dist2(j).sub(&k(1))),
            ("|GJ|^2 = 1", g.dist2(j).sub(&k(1))),
            ("(H-J).(C-A) = 0", h.sub(j).dot(&c.sub(a))),
        ])
    }
}

/// B − C rotated by −60°, the common direction of CD and BE.
fn trapezoid_dir<S: Scalar>(b: &Point<S>, c: &Point<S>) -> Point<S> {
    let v = b.sub(c);
    let half = v.x.rational(&BigRational::new(1.into(), 2.into()));
    let s3 = v.x.sqrt3();
    Point::new(v.x.add(&s3.mul(&v.y)).mul(&half), v.y.sub(&s3.mul(&v.x)).mul(&half))
}

/// The A-frame configuration for the height `t_param` of B.
pub fn build<S: Scalar>(t_param: &S) -> Result<Configuration<S>, GeomError> {
    let big_t = t_param.clone();
    let zero = big_t.int(0);
    let t = big_t.int(1).sub(&big_t.square()).sqrt_branch(1)?;
    let mut pts: BTreeMap<char, Point<S>> = BTreeMap::new();
    let a = Point::new(zero.clone(), zero.clone());
    let b = Point::new(t.clone(), big_t.clone());
    let c = Point::new(t.add(&t), zero.clone());
    let dir = trapezoid_dir(&b, &c);
    let d = c.add(&dir.scale(&big_t.int(3)));
    let e = b.add(&dir.scale(&big_t.int(2)));
    pts.insert('A', a);
    pts.insert('B', b);
    pts.insert('C', c);
    pts.insert('D', d);
    pts.insert('E', e);
    for st in BRANCHES {
        let c1 = pts[&st.c1].clone();
        let c2 = pts[&st.c2].clone();
        let r1 = BigRational::from_integer(st.r1sq.into());
        let r2 = BigRational::from_integer(st.r2sq.into());
        let p = circ_circ(&c1, &r1, &c2, &r2, st.branch)?;
        pts.insert(st.point, p);
    }
    Ok(Configuration { frame: Frame::A, t: big_t, points: pts })
}

/// Numeric A-frame configuration with every operation carried at `prec` bits.
pub fn build_config(t: &DyadicInterval, prec: u32) -> Result<Configuration<Num>, GeomError> {
    build(&Num::new(t.with_precision(prec)))
}

/// Exact configuration over `Q(T, √3)` and whatever square roots do not fold.
pub fn tower_build(t_root: &AlgebraicNumber) -> Result<Configuration<TowerElement>, GeomError> {
    let field = BaseField::new(t_root.clone());
    let tower = Tower::new(&field);
    build(&TowerElement::from_base(&tower, LElem::gen(&field)))
}

/// Exact configuration at a rational height.
pub fn tower_build_rational(t: &BigRational) -> Result<Configuration<TowerElement>, GeomError> {
    tower_build(&AlgebraicNumber::from_rational(t.clone()))
}
