//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parknot::ring::{LaurentPoly, Matrix, Monomial, Ring, Var, VarSet};
use parknot::{parse_gauss_file, parse_surface_file, DiagramCode, GaussDiagram, QuotientRing, SurfaceDiagram};

pub const TORUS: &str = include_str!("../../../../data/torus.surf");
pub const VIRTUAL: &str = include_str!("../../../../data/virtual.gauss");

pub fn torus(name: &str) -> SurfaceDiagram {
    parse_surface_file(TORUS).into_iter().map(Result::unwrap).find(|d| d.name() == name).expect("fixture")
}

pub fn virtual_knot(name: &str) -> GaussDiagram {
    parse_gauss_file(VIRTUAL).into_iter().map(Result::unwrap).find(|d| d.name() == name).expect("fixture")
}

/// Reference matrices for the torus pair, entries expanded (`(1-t)x_1` is written `x1 - t*x1`).
pub const M_112: [[&str; 4]; 4] = [
    ["-1", "x1 - t*x1", "0", "t*x1^-1"],
    ["-x1^-1", "t + x1 - t*x1", "0", "0"],
    ["0", "1 - t - x1", "t", "0"],
    ["0", "0", "t", "x1^-1 - t*x1^-1 - 1"],
];

pub const M_113BAR: [[&str; 5]; 5] = [
    ["t", "-1", "0", "0", "1 - t"],
    ["0", "-1", "0", "t*x1", "x1 - t*x1"],
    ["0", "0", "t", "0", "1 - t - x1"],
    ["1 - t", "0", "t", "-1", "0"],
    ["1 - t - x1^-1", "0", "0", "0", "t"],
];

pub const S_112: &str =
    "-2*t + 4*t^2 - t^3 + t^2*x1^-2 - t^3*x1^-2 + t*x1^-1 - 4*t^2*x1^-1 + 2*t^3*x1^-1 + t*x1 - t^2*x1";
pub const S_113BAR: &str =
    "-2*t + 4*t^2 - t^3 + t*x1^-1 - t^2*x1^-1 + t*x1 - 4*t^2*x1 + 2*t^3*x1 + t^2*x1^2 - t^3*x1^2";

/// Laplace expansion along the first row.
pub fn cofactor_det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let n = m.rows();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    fn go<R: Ring>(ring: &R, m: &Matrix<R::Elem>, rows: &[usize], cols: &[usize]) -> R::Elem {
        if rows.is_empty() {
            return ring.one();
        }
        let mut acc = ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = m.get(rows[0], c);
            if ring.is_zero(e) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = ring.mul(e, &go(ring, m, &rows[1..], &rest));
            acc = if k % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
        }
        acc
    }
    go(ring, m, &rows, &cols)
}

/// A bare sparse polynomial over the fixed variable order (t, p, q, extra...).
pub type Sparse = BTreeMap<Vec<i32>, BigInt>;

const T: usize = 0;
const P: usize = 1;
const Q: usize = 2;

fn order(vars: &VarSet) -> Vec<Var> {
    let mut out = vec![Var::T, Var::P, Var::Q];
    out.extend(vars.vars().iter().copied().filter(|v| !matches!(v, Var::T | Var::P | Var::Q)));
    out
}

pub fn to_sparse(f: &LaurentPoly, width_vars: &VarSet) -> Sparse {
    let ord = order(width_vars);
    let mut out = Sparse::new();
    for (m, c) in f.terms() {
        let mut e = vec![0; ord.len()];
        for (i, v) in f.vars().vars().iter().enumerate() {
            let j = ord.iter().position(|w| w == v).expect("known variable");
            e[j] = m.exps()[i];
        }
        add_term(&mut out, e, c.clone());
    }
    out
}

fn add_term(f: &mut Sparse, e: Vec<i32>, c: BigInt) {
    let slot = f.entry(e.clone()).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        f.remove(&e);
    }
}

fn add(f: &Sparse, g: &Sparse, k: i64) -> Sparse {
    let mut out = f.clone();
    for (e, c) in g {
        add_term(&mut out, e.clone(), c * k);
    }
    out
}

fn shift(f: &Sparse, i: usize, k: i32) -> Sparse {
    f.iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e[i] += k;
            (e, c.clone())
        })
        .collect()
}

/// Rewrite `q² → (1−t)(1−p)` and `q·p → q·t` until nothing applies; returns
/// the q-free part and the coefficient of q.
pub fn rewrite_to_fixpoint(f: &Sparse) -> (Sparse, Sparse) {
    let mut cur = f.clone();
    loop {
        let hit = cur.iter().find(|(e, _)| e[Q] >= 2 || (e[Q] == 1 && e[P] != 0)).map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = hit else { break };
        cur.remove(&e);
        let mut base = e.clone();
        if e[Q] >= 2 {
            base[Q] -= 2;
            // c·m·(1 − t − p + tp)
            for (dt, dp, s) in [(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)] {
                let mut x = base.clone();
                x[T] += dt;
                x[P] += dp;
                add_term(&mut cur, x, &c * s);
            }
        } else {
            base[T] += base[P];
            base[P] = 0;
            add_term(&mut cur, base, c);
        }
    }
    let mut a = Sparse::new();
    let mut b = Sparse::new();
    for (mut e, c) in cur {
        let q = e[Q];
        e[Q] = 0;
        if q == 0 {
            add_term(&mut a, e, c);
        } else {
            add_term(&mut b, e, c);
        }
    }
    (a, b)
}

/// Exact division by `x_i − c` where `c` is 1 or `x_j`; `None` if there is a remainder.
fn div_linear(f: &Sparse, i: usize, c: Option<usize>) -> Option<Sparse> {
    if f.is_empty() {
        return Some(Sparse::new());
    }
    let low = f.keys().map(|e| e[i]).min().unwrap();
    let f = shift(f, i, -low);
    let mut by: BTreeMap<i32, Sparse> = BTreeMap::new();
    for (e, v) in &f {
        let mut e2 = e.clone();
        e2[i] = 0;
        add_term(by.entry(e[i]).or_default(), e2, v.clone());
    }
    let top = *by.keys().max().unwrap();
    let times_c = |g: &Sparse| match c {
        None => g.clone(),
        Some(j) => shift(g, j, 1),
    };
    let mut quotient = Sparse::new();
    let mut carry = Sparse::new();
    for k in (0..=top).rev() {
        let fk = by.get(&k).cloned().unwrap_or_default();
        let cur = add(&fk, &times_c(&carry), 1);
        if k == 0 {
            return if cur.is_empty() { Some(shift(&quotient, i, low)) } else { None };
        }
        for (e, v) in &cur {
            let mut e2 = e.clone();
            e2[i] = k - 1;
            add_term(&mut quotient, e2, v.clone());
        }
        carry = cur;
    }
    unreachable!()
}

/// Whether `f` lies in the ideal generated by (t−1)(p−1)(p−t).
pub fn in_hidden_ideal(f: &Sparse) -> bool {
    div_linear(f, P, None).and_then(|g| div_linear(&g, P, Some(T))).and_then(|g| div_linear(&g, T, None)).is_some()
}

pub fn sub(f: &Sparse, g: &Sparse) -> Sparse {
    add(f, g, -1)
}

/// A random raw polynomial over `ring.vars_with_q()` with small exponents.
pub fn random_raw(rng: &mut impl rand::Rng, ring: &QuotientRing, terms: usize) -> LaurentPoly {
    let vars = ring.vars_with_q();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let exps: Vec<i32> = vars
            .vars()
            .iter()
            .map(|v| match v {
                Var::Q => rng.gen_range(0..=3),
                Var::T | Var::P => rng.gen_range(-2..=2),
                _ => rng.gen_range(-1..=1),
            })
            .collect();
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            out.push((Monomial::new(exps), BigInt::from(c)));
        }
    }
    LaurentPoly::from_terms(vars, out)
}

pub fn is_one(f: &Sparse) -> bool {
    f.len() == 1 && f.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
}
