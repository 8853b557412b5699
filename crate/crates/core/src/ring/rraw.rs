//! The ring R over t±, p±, q, s±, r±, w, handled by term rewriting only.
//!
//! Rules, tried in this order on each term until none applies:
//!
//! ```text
//! q·p^k  -> q·t^k            q²   -> (1−t)(1−p)
//! w·s^k  -> w                w·r^k -> w·t^k
//! w·p^k  -> w·t^k            w·q  -> w·(1−t)
//! w²     -> (1−t)(1−rs)      q·rs -> q − (1−t)(1−rs)
//! ```
//!
//! The last rule is the difference of the two w² relations. The system is
//! not known to be confluent, so reduced forms are used for export only and
//! never for deciding equality.

use num_bigint::BigInt;

use super::poly::{LaurentPoly, Monomial, Var, VarSet};
use super::quotient::{QElement, QuotientRing};
use super::Ring;
use crate::error::RingError;

const T: usize = 0;
const P: usize = 1;
const Q: usize = 2;
const S: usize = 3;
const R: usize = 4;
const W: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRawRing {
    vars: VarSet,
}

impl Default for RRawRing {
    fn default() -> Self {
        Self::new()
    }
}

type Exps = [i32; 6];

/// `(coefficient, exponent delta)` pairs of a small polynomial factor.
type Factor = &'static [(i64, Exps)];

const ONE_MINUS_T_ONE_MINUS_P: Factor =
    &[(1, [0; 6]), (-1, [1, 0, 0, 0, 0, 0]), (-1, [0, 1, 0, 0, 0, 0]), (1, [1, 1, 0, 0, 0, 0])];
const ONE_MINUS_T: Factor = &[(1, [0; 6]), (-1, [1, 0, 0, 0, 0, 0])];
const ONE_MINUS_T_ONE_MINUS_RS: Factor =
    &[(1, [0; 6]), (-1, [1, 0, 0, 0, 0, 0]), (-1, [0, 0, 0, 1, 1, 0]), (1, [1, 0, 0, 1, 1, 0])];
// q − 1 + t + rs − trs
const QRS_IMAGE: Factor = &[
    (1, [0, 0, 1, 0, 0, 0]),
    (-1, [0; 6]),
    (1, [1, 0, 0, 0, 0, 0]),
    (1, [0, 0, 0, 1, 1, 0]),
    (-1, [1, 0, 0, 1, 1, 0]),
];

enum Rewrite {
    Move { from: usize, to: usize },
    Drop(usize),
    Expand { take: Exps, factor: Factor },
}

fn first_rule(e: &Exps) -> Option<Rewrite> {
    if e[Q] >= 1 && e[P] != 0 {
        return Some(Rewrite::Move { from: P, to: T });
    }
    if e[Q] >= 2 {
        return Some(Rewrite::Expand { take: [0, 0, 2, 0, 0, 0], factor: ONE_MINUS_T_ONE_MINUS_P });
    }
    if e[W] >= 1 {
        if e[S] != 0 {
            return Some(Rewrite::Drop(S));
        }
        if e[R] != 0 {
            return Some(Rewrite::Move { from: R, to: T });
        }
        if e[P] != 0 {
            return Some(Rewrite::Move { from: P, to: T });
        }
        if e[Q] >= 1 {
            return Some(Rewrite::Expand { take: [0, 0, 1, 0, 0, 0], factor: ONE_MINUS_T });
        }
        if e[W] >= 2 {
            return Some(Rewrite::Expand { take: [0, 0, 0, 0, 0, 2], factor: ONE_MINUS_T_ONE_MINUS_RS });
        }
    }
    if e[Q] >= 1 && e[R] >= 1 && e[S] >= 1 {
        return Some(Rewrite::Expand { take: [0, 0, 1, 1, 1, 0], factor: QRS_IMAGE });
    }
    None
}

impl RRawRing {
    pub fn new() -> Self {
        RRawRing { vars: VarSet::new(vec![Var::T, Var::P, Var::Q, Var::S, Var::R, Var::W]) }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Rewrite to a fixpoint of the rule list.
    pub fn reduce(&self, f: &LaurentPoly) -> LaurentPoly {
        let f = if f.vars() == &self.vars { f.clone() } else { f.with_vars(&self.vars).expect("R variables") };
        let mut work: Vec<(Exps, BigInt)> = f
            .terms()
            .map(|(m, c)| {
                let mut e = [0; 6];
                e.copy_from_slice(m.exps());
                (e, c.clone())
            })
            .collect();
        let mut done = Vec::new();
        while let Some((mut e, c)) = work.pop() {
            match first_rule(&e) {
                None => done.push((Monomial::new(e.to_vec()), c)),
                Some(Rewrite::Move { from, to }) => {
                    e[to] += e[from];
                    e[from] = 0;
                    work.push((e, c));
                }
                Some(Rewrite::Drop(i)) => {
                    e[i] = 0;
                    work.push((e, c));
                }
                Some(Rewrite::Expand { take, factor }) => {
                    for k in 0..6 {
                        e[k] -= take[k];
                    }
                    for (k, d) in factor {
                        let mut e2 = e;
                        for j in 0..6 {
                            e2[j] += d[j];
                        }
                        work.push((e2, &c * k));
                    }
                }
            }
        }
        LaurentPoly::from_terms(&self.vars, done)
    }

    pub fn is_reduced(&self, f: &LaurentPoly) -> bool {
        f.terms().all(|(m, _)| {
            let mut e = [0; 6];
            e.copy_from_slice(m.exps());
            first_rule(&e).is_none()
        })
    }

    /// Image under w -> 0, r -> s⁻¹, which maps R onto R'.
    pub fn specialize(&self, f: &LaurentPoly, target: &QuotientRing) -> Result<QElement, RingError> {
        let g = f.set_zero(Var::W).merge_var(Var::R, Var::S, -1);
        target.normalize(&g)
    }
}

impl Ring for RRawRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(&self.vars)
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(&self.vars)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        self.reduce(&a.mul(b))
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn red(s: &str) -> String {
        let r = RRawRing::new();
        r.reduce(&parse_poly(r.vars(), s).unwrap()).to_string()
    }

    #[test]
    fn listed_examples() {
        assert_eq!(red("w*s"), "w");
        assert_eq!(red("w*p"), "t*w");
        assert_eq!(red("w*q"), "w - t*w");
        assert_eq!(red("q*p^-2"), "t^-2*q");
        assert_eq!(red("q^2"), "1 - p - t + t*p");
    }

    #[test]
    fn idempotent() {
        let r = RRawRing::new();
        let f = parse_poly(r.vars(), "w^3*q*r^2*s^-1 + q^3*p*r*s + w*q*p^-1 - 4*q*r*s^2").unwrap();
        let g = r.reduce(&f);
        assert!(r.is_reduced(&g));
        assert_eq!(r.reduce(&g), g);
    }
}
