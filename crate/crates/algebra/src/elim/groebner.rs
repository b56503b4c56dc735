use super::{EliminationStep, Tool};
use crate::multi::{Monomial, MultiPoly};
use crate::ring::{Field, Ring};

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn deg(m: &[u32]) -> u32 {
    m.iter().sum()
}

fn lm<R: Ring>(p: &MultiPoly<R>) -> Monomial {
    p.leading().expect("nonzero").0.clone()
}

fn monic<R: Field>(p: &MultiPoly<R>) -> MultiPoly<R> {
    match p.leading() {
        Some((_, c)) => {
            let inv = c.inv().expect("nonzero leading coefficient");
            p.scale(&inv)
        }
        None => p.clone(),
    }
}

/// Fully reduced remainder of `f` modulo `basis`.
pub fn normal_form<R: Field>(f: &MultiPoly<R>, basis: &[MultiPoly<R>]) -> MultiPoly<R> {
    let heads: Vec<(Monomial, R)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading().unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    let live: Vec<&MultiPoly<R>> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = f.zero_like();
    while let Some((m, c)) = p.leading() {
        let (m, c) = (m.clone(), c.clone());
        match heads.iter().position(|(h, _)| divides(h, &m)) {
            Some(k) => {
                let q = c.div_exact(&heads[k].1).expect("field division");
                p = p.sub(&live[k].mul_term(&diff(&m, &heads[k].0), &q));
            }
            None => {
                p.add_term(m.clone(), c.neg());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_poly<R: Field>(f: &MultiPoly<R>, g: &MultiPoly<R>) -> MultiPoly<R> {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = lcm(mf, mg);
    let a = f.mul_term(&diff(&l, mf), &cf.inv().unwrap());
    let b = g.mul_term(&diff(&l, mg), &cg.inv().unwrap());
    a.sub(&b)
}

struct Pair {
    i: usize,
    j: usize,
    sugar: u32,
    lcm: Monomial,
}

/// Reduced lex Gröbner basis; `order` lists the variables greatest first and
/// must cover every variable occurring in `gens`. Output is monic, sorted by
/// increasing leading monomial. The zero ideal gives an empty basis.
pub fn groebner<R: Field>(gens: &[MultiPoly<R>], order: &[&str]) -> Vec<MultiPoly<R>> {
    let mut basis: Vec<MultiPoly<R>> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();

    let add = |h: MultiPoly<R>, s: u32, basis: &mut Vec<MultiPoly<R>>, sugar: &mut Vec<u32>, pairs: &mut Vec<Pair>, alive: &mut Vec<bool>| {
        let h = monic(&h);
        let mh = lm(&h);
        let n = basis.len();
        for k in 0..n {
            if !alive[k] {
                continue;
            }
            let mk = lm(&basis[k]);
            let l = lcm(&mk, &mh);
            let s_pair = (sugar[k] + deg(&diff(&l, &mk))).max(s + deg(&diff(&l, &mh)));
            pairs.push(Pair { i: k, j: n, sugar: s_pair, lcm: l });
        }
        basis.push(h);
        sugar.push(s);
        alive.push(true);
    };

    for g in gens {
        let g = g.with_vars(order);
        let h = normal_form(&g, &live(&basis, &alive));
        if !h.is_zero() {
            let s = g.total_degree();
            add(h, s, &mut basis, &mut sugar, &mut pairs, &mut alive);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| pairs[a].sugar.cmp(&pairs[b].sugar).then_with(|| pairs[a].lcm.cmp(&pairs[b].lcm)))
            .unwrap();
        let Pair { i, j, sugar: s, lcm: l } = pairs.swap_remove(best);
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        // product criterion
        if mi.iter().zip(&mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion: some k with head dividing lcm whose pairs with i and j are done
        let pending = |a: usize, b: usize| pairs.iter().any(|p| (p.i == a.min(b)) && (p.j == a.max(b)));
        let chain = (0..basis.len()).any(|k| k != i && k != j && divides(&lm(&basis[k]), &l) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        let h = normal_form(&s_poly(&basis[i], &basis[j]), &live(&basis, &alive));
        if !h.is_zero() {
            add(h, s, &mut basis, &mut sugar, &mut pairs, &mut alive);
        }
    }
    reduce_basis(live(&basis, &alive))
}

fn live<R: Ring>(basis: &[MultiPoly<R>], alive: &[bool]) -> Vec<MultiPoly<R>> {
    basis.iter().zip(alive).filter(|(_, a)| **a).map(|(b, _)| b.clone()).collect()
}

fn reduce_basis<R: Field>(g: Vec<MultiPoly<R>>) -> Vec<MultiPoly<R>> {
    let heads: Vec<Monomial> = g.iter().map(lm).collect();
    let mut min: Vec<MultiPoly<R>> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let redundant = heads.iter().enumerate().any(|(j, h)| j != k && divides(h, &heads[k]) && (h != &heads[k] || j < k));
        if !redundant {
            min.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(min.len());
    for k in 0..min.len() {
        let others: Vec<MultiPoly<R>> = min.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p.clone()).collect();
        let (m, c) = min[k].leading().unwrap();
        let (m, c) = (m.clone(), c.clone());
        let mut tail = min[k].clone();
        tail.add_term(m.clone(), c.neg());
        let mut r = normal_form(&tail, &others);
        r.add_term(m, c);
        out.push(monic(&r));
    }
    out.sort_by_key(lm);
    out
}

/// True when every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<R: Field>(basis: &[MultiPoly<R>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&s_poly(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Gröbner basis under `order`, keeping the elements free of `drop`.
pub fn eliminate<R: Field>(gens: &[MultiPoly<R>], order: &[&str], drop: &[&str]) -> EliminationStep<R> {
    let basis = groebner(gens, order);
    let idx: Vec<usize> = drop.iter().filter_map(|v| order.iter().position(|w| w == v)).collect();
    let output = basis.into_iter().filter(|p| idx.iter().all(|&i| !p.involves(i))).collect();
    EliminationStep {
        inputs: gens.to_vec(),
        tool: Tool::Groebner,
        eliminated: drop.iter().map(|s| s.to_string()).collect(),
        order: order.iter().map(|s| s.to_string()).collect(),
        output,
    }
}
