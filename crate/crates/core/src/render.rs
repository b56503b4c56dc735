//! Deterministic SVG of the crucial vertices and their three mirror images.

use crate::geometry::{build, Configuration, Frame, GeomError, Num, Point, Scalar, POINT_NAMES};
use harborth_algebra::algnum::AlgebraicNumber;
use harborth_algebra::dyadic::format_decimal;
use harborth_algebra::{DyadicInterval, ZPoly};
use num_rational::BigRational;
use std::fmt::Write as _;
use std::path::Path;

/// Bars of the quarter with their lengths in unit edges.
pub const BARS: [(char, char, u32); 13] = [
    ('A', 'B', 1),
    ('B', 'C', 1),
    ('C', 'D', 3),
    ('B', 'E', 2),
    ('D', 'E', 1),
    ('A', 'F', 1),
    ('E', 'F', 1),
    ('F', 'G', 1),
    ('D', 'G', 2),
    ('D', 'H', 2),
    ('G', 'H', 2),
    ('F', 'J', 1),
    ('G', 'J', 1),
];

#[derive(Clone, Debug)]
pub struct Vertex {
    pub label: String,
    pub x: DyadicInterval,
    pub y: DyadicInterval,
}

#[derive(Clone, Debug, Default)]
pub struct Drawing {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
}

impl Drawing {
    /// Index of `v`, reusing a vertex whose enclosure overlaps it (points on the mirror axes).
    fn add(&mut self, v: Vertex) -> usize {
        if let Some(i) = self.vertices.iter().position(|w| w.x.intersect(&v.x).is_some() && w.y.intersect(&v.y).is_some()) {
            return i;
        }
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        let e = (a.min(b), a.max(b));
        if a != b && !self.edges.contains(&e) {
            self.edges.push(e);
        }
    }
}

/// The K-frame configuration at the root of `pt` in (0.12, 0.13).
pub fn k_configuration(pt: &ZPoly, bits: u32) -> Result<Configuration<Num>, GeomError> {
    let t = AlgebraicNumber::root_in(pt, &BigRational::new(12.into(), 100.into()), &BigRational::new(13.into(), 100.into())).map_err(|_| GeomError::Degenerate)?;
    build(&Num::new(t.enclosure(bits)))?.transform(Frame::K)
}

fn reflect(p: &Point<Num>, sx: i64, sy: i64) -> Point<Num> {
    Point::new(p.x.mul(&p.x.int(sx)), p.y.mul(&p.y.int(sy)))
}

/// Quarter plus reflections, mapped into `frame`.
pub fn drawing(k: &Configuration<Num>, frame: Frame) -> Result<Drawing, GeomError> {
    let a = k.transform(Frame::A)?;
    let xj = a.point('J')?.x.clone();
    // A-frame → F-frame: translate by F, rotate FD onto the x-axis
    let f0 = a.point('F')?.clone();
    let fd = a.point('D')?.sub(&f0);
    let len = fd.dot(&fd).sqrt_branch(1)?;
    let u = Point::new(fd.x.div(&len)?, fd.y.div(&len)?);
    let place = |p: &Point<Num>| -> Point<Num> {
        match frame {
            Frame::K | Frame::JMirror => p.clone(),
            Frame::A => Point::new(p.x.add(&xj), p.y.clone()),
            Frame::F => {
                let q = Point::new(p.x.add(&xj), p.y.clone()).sub(&f0);
                Point::new(q.dot(&u), q.y.mul(&u.x).sub(&q.x.mul(&u.y)))
            }
        }
    };
    let mut d = Drawing::default();
    let images = [(1, 1, ""), (-1, 1, "'"), (1, -1, "''"), (-1, -1, "'''")];
    for (sx, sy, mark) in images {
        let mut index = std::collections::BTreeMap::new();
        for n in POINT_NAMES {
            let p = place(&reflect(k.point(n)?, sx, sy));
            index.insert(n, d.add(Vertex { label: format!("{n}{mark}"), x: p.x.iv, y: p.y.iv }));
        }
        for (p, q, n) in BARS {
            let (ip, iq) = (index[&p], index[&q]);
            let mut prev = ip;
            for s in 1..n {
                let r = BigRational::new((s as i64).into(), (n as i64).into());
                let (vp, vq) = (d.vertices[ip].clone(), d.vertices[iq].clone());
                let x = vp.x.add(&vq.x.sub(&vp.x).scale_rational(&r));
                let y = vp.y.add(&vq.y.sub(&vp.y).scale_rational(&r));
                let v = d.add(Vertex { label: String::new(), x, y });
                d.edge(prev, v);
                prev = v;
            }
            d.edge(prev, iq);
        }
    }
    // remaining unit pairs, certified by enclosure
    let one = DyadicInterval::from_int(1, 64);
    for i in 0..d.vertices.len() {
        for j in i + 1..d.vertices.len() {
            let (p, q) = (&d.vertices[i], &d.vertices[j]);
            let (dx, dy) = (p.x.sub(&q.x), p.y.sub(&q.y));
            let r = dx.mul(&dx).add(&dy.mul(&dy)).sub(&one);
            if r.contains_zero() && r.width_at_most_pow2(-40) {
                d.edge(i, j);
            }
        }
    }
    Ok(d)
}

fn fmt(iv: &DyadicInterval, digits: usize) -> String {
    let s = format_decimal(&iv.mid().to_rational(), digits);
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// SVG text; depends only on the drawing and `digits`.
pub fn svg(d: &Drawing, digits: usize) -> String {
    let mut out = String::new();
    let span = |f: &dyn Fn(&Vertex) -> f64| {
        let lo = d.vertices.iter().map(f).fold(f64::MAX, f64::min);
        let hi = d.vertices.iter().map(f).fold(f64::MIN, f64::max);
        ((lo - 0.5).floor(), (hi + 0.5).ceil())
    };
    let (x0, x1) = span(&|v| v.x.mid_f64());
    let (y0, y1) = span(&|v| v.y.mid_f64());
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{x0} {y0} {} {}">"#,
        ((x1 - x0) * 80.0) as i64,
        ((y1 - y0) * 80.0) as i64,
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1) translate(0,{})" stroke-linecap="round">"#, -(y0 + y1));
    let _ = writeln!(out, r##"<g stroke="#222" stroke-width="0.02" fill="none">"##);
    for (a, b) in &d.edges {
        let (p, q) = (&d.vertices[*a], &d.vertices[*b]);
        let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, fmt(&p.x, digits), fmt(&p.y, digits), fmt(&q.x, digits), fmt(&q.y, digits));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g fill="#fff" stroke="#222" stroke-width="0.015">"##);
    for v in &d.vertices {
        let r = if v.label.is_empty() { "0.04" } else { "0.06" };
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{r}"/>"#, fmt(&v.x, digits), fmt(&v.y, digits));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g font-family="monospace" font-size="0.14" fill="#a00">"##);
    for v in d.vertices.iter().filter(|v| !v.label.is_empty()) {
        let y = y0 + y1 - v.y.mid_f64() - 0.08;
        let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}">{}</text>"#, v.x.mid_f64() + 0.06, y, v.label);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

pub fn render_svg(pt: &ZPoly, frame: Frame, digits: usize, bits: u32, path: &Path) -> Result<String, std::io::Error> {
    let k = k_configuration(pt, bits).map_err(|e| std::io::Error::other(e.to_string()))?;
    let d = drawing(&k, frame).map_err(|e| std::io::Error::other(e.to_string()))?;
    let s = svg(&d, digits);
    std::fs::write(path, &s)?;
    Ok(s)
}
