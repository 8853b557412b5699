//! The rings G = Z[t±, q, p±, x±]/(q(p−t), q² − (1−t)(1−p)) and R' (same with
//! `s` in place of the `x` variables).
//!
//! Every element is A + B·q with B free of p, but A is only determined modulo
//! (1−t)(1−p)(p−t): multiplying q² − (1−t)(1−p) by (p−t) and using q(p−t) = 0
//! kills that product. The three evaluations A(t,1), A(t,t), A(1,p) separate
//! the residues exactly (the ideal is the intersection of the three prime
//! ideals (p−1), (p−t), (t−1)), so an element is stored as
//!
//! ```text
//! u = A(t, p=1),  v = A(t, p=t),  w = A(t=1, p),  b = B
//! ```
//!
//! and the product becomes componentwise:
//! (u₁u₂, v₁v₂ + (1−t)²b₁b₂, w₁w₂, v₁b₂ + v₂b₁).

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::poly::{LaurentPoly, Monomial, Var, VarSet};
use super::Ring;
use crate::error::RingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    G { genus: u32 },
    RPrime,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::G { genus } => write!(f, "G(genus {genus})"),
            RingKind::RPrime => f.write_str("R'"),
        }
    }
}

/// Element of G or R'; see the module docs for the meaning of the fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QElement {
    u: LaurentPoly,
    v: LaurentPoly,
    w: LaurentPoly,
    b: LaurentPoly,
}

impl QElement {
    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.w.is_zero() && self.b.is_zero()
    }

    /// Evaluation components `(A(t,1), A(t,t), A(1,p), B)`.
    pub fn components(&self) -> [&LaurentPoly; 4] {
        [&self.u, &self.v, &self.w, &self.b]
    }

    /// True when A vanishes at p = 1 and at t = 1; only such elements can be
    /// multiples of q.
    pub fn in_q_ideal_shape(&self) -> bool {
        self.u.is_zero() && self.w.is_zero()
    }
}

/// `sign · t^t · p^p · q^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitRecord {
    pub sign: i8,
    pub t: i32,
    pub p: i32,
    pub q: u32,
}

impl UnitRecord {
    pub const ONE: UnitRecord = UnitRecord { sign: 1, t: 0, p: 0, q: 0 };

    fn inverse(self) -> UnitRecord {
        debug_assert_eq!(self.q, 0);
        UnitRecord { sign: self.sign, t: -self.t, p: -self.p, q: 0 }
    }

    fn then(self, o: UnitRecord) -> UnitRecord {
        UnitRecord { sign: self.sign * o.sign, t: self.t + o.t, p: self.p + o.p, q: self.q + o.q }
    }
}

impl fmt::Display for UnitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [("t", self.t), ("p", self.p), ("q", self.q as i32)]
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let sign = if self.sign < 0 { "-" } else { "" };
        if factors.is_empty() {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}{}", factors.join("*"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// `first = unit · second`, or `second = unit · first` when `swapped`.
    EquivalentUpToUnits {
        unit: UnitRecord,
        swapped: bool,
    },
    Distinct,
    /// Both searches failed, but a relation through q^γ with γ ≥ 2 is not ruled out.
    Inconclusive,
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::EquivalentUpToUnits { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    kind: RingKind,
    vars: VarSet,
    qvars: VarSet,
}

impl QuotientRing {
    pub fn g(genus: u32) -> Self {
        Self::with_vars(RingKind::G { genus }, VarSet::for_genus(genus))
    }

    pub fn r_prime() -> Self {
        Self::with_vars(RingKind::RPrime, VarSet::new(vec![Var::T, Var::P, Var::S]))
    }

    fn with_vars(kind: RingKind, vars: VarSet) -> Self {
        let mut q = vars.vars().to_vec();
        q.push(Var::Q);
        QuotientRing { kind, vars, qvars: VarSet::new(q) }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Variables of the A and B parts (no q).
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Variables of the rendered form A + B·q.
    pub fn vars_with_q(&self) -> &VarSet {
        &self.qvars
    }

    fn poly(&self, p: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if p.vars() == &self.vars {
            Ok(p.clone())
        } else {
            p.with_vars(&self.vars)
        }
    }

    fn lift(&self, a: LaurentPoly, b: LaurentPoly) -> QElement {
        QElement {
            u: a.set_one(Var::P),
            v: a.merge_var(Var::P, Var::T, 1),
            w: a.set_one(Var::T),
            b: b.merge_var(Var::P, Var::T, 1),
        }
    }

    /// The class of `a + b·q`; `a`, `b` must avoid q.
    pub fn from_pair(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<QElement, RingError> {
        Ok(self.lift(self.poly(a)?, self.poly(b)?))
    }

    pub fn embed(&self, a: &LaurentPoly) -> Result<QElement, RingError> {
        Ok(self.lift(self.poly(a)?, LaurentPoly::zero(&self.vars)))
    }

    /// `c · prod v^e` for variables of `vars()`.
    pub fn monomial(&self, c: i64, powers: &[(Var, i32)]) -> QElement {
        self.lift(LaurentPoly::monomial(&self.vars, c, powers), LaurentPoly::zero(&self.vars))
    }

    pub fn q(&self) -> QElement {
        self.lift(LaurentPoly::zero(&self.vars), LaurentPoly::one(&self.vars))
    }

    /// Normal form of an arbitrary polynomial in t, p, q and the extra variables.
    pub fn normalize(&self, raw: &LaurentPoly) -> Result<QElement, RingError> {
        let raw = if raw.vars() == &self.qvars { raw.clone() } else { raw.with_vars(&self.qvars)? };
        let qi = self.qvars.index_of(Var::Q).expect("q present");
        let mut by_q: Vec<Vec<(Monomial, BigInt)>> = Vec::new();
        for (m, c) in raw.terms() {
            let e = m.exps()[qi];
            if e < 0 {
                return Err(RingError::UnexpectedVariable("negative power of q".into()));
            }
            let rest: Vec<i32> = m.exps().iter().enumerate().filter(|&(i, _)| i != qi).map(|(_, &x)| x).collect();
            if by_q.len() <= e as usize {
                by_q.resize(e as usize + 1, Vec::new());
            }
            by_q[e as usize].push((Monomial::new(rest), c.clone()));
        }
        let q = self.q();
        let mut qpow = self.one();
        let mut acc = self.zero();
        for terms in by_q {
            let part = self.embed(&LaurentPoly::from_terms(&self.vars, terms))?;
            acc = self.add(&acc, &self.mul(&part, &qpow));
            qpow = self.mul(&qpow, &q);
        }
        Ok(acc)
    }

    /// A representative `(A, B)` with `A + B·q` equal to `e`. When `e` came from
    /// a p-free A (e.g. a determinant over an even diagram), this is that A.
    pub fn representative(&self, e: &QElement) -> (LaurentPoly, LaurentPoly) {
        let vs = &self.vars;
        let t = LaurentPoly::var(vs, Var::T);
        let p = LaurentPoly::var(vs, Var::P);
        let one = LaurentPoly::one(vs);
        let r1 = e.v.sub(&e.u).div_by_var_minus_one(Var::T).expect("A(t,t) - A(t,1) vanishes at t = 1");
        let r0 = e.u.sub(&r1);
        let rest = e.w.sub(&r0.set_one(Var::T)).sub(&r1.set_one(Var::T).mul(&p));
        let quad = rest
            .div_by_var_minus_one(Var::P)
            .and_then(|x| x.div_by_var_minus_one(Var::P))
            .expect("consistent evaluation data");
        let a = r0.add(&r1.mul(&p)).add(&quad.mul(&p.sub(&one)).mul(&p.sub(&t)));
        (a, e.b.clone())
    }

    /// `A + B·q` as one polynomial over `vars_with_q()`.
    pub fn to_poly(&self, e: &QElement) -> LaurentPoly {
        let (a, b) = self.representative(e);
        let a = a.with_vars(&self.qvars).expect("subset");
        let b = b.with_vars(&self.qvars).expect("subset").shift(&[(Var::Q, 1)]);
        a.add(&b)
    }

    pub fn render(&self, e: &QElement) -> String {
        self.to_poly(e).to_string()
    }

    pub fn mul_unit(&self, e: &QElement, unit: UnitRecord) -> QElement {
        let s = BigInt::from(unit.sign);
        let sh = |p: &LaurentPoly, v: Var, k: i32| p.shift(&[(v, k)]).scale(&s);
        let mut out = QElement {
            u: sh(&e.u, Var::T, unit.t),
            v: sh(&e.v, Var::T, unit.t + unit.p),
            w: sh(&e.w, Var::P, unit.p),
            b: sh(&e.b, Var::T, unit.t + unit.p),
        };
        for _ in 0..unit.q {
            out = self.mul(&self.q(), &out);
        }
        out
    }

    /// Canonical representative of the orbit of `e` under ±t^α p^β, and the
    /// unit that maps `e` onto it.
    ///
    /// p only moves `w`, t only moves `u`, and t·p moves `v` and `b` together,
    /// so: β fixes the lowest p-power of `w`, α the lowest t-power of `u`, and
    /// whatever freedom is left fixes the lowest t-power of `v` and `b`. The
    /// sign makes the first coefficient (components in order u, v, w, b) positive.
    pub fn normalize_units(&self, e: &QElement) -> (QElement, UnitRecord) {
        let low_vb = [e.v.min_exp(Var::T), e.b.min_exp(Var::T)].into_iter().flatten().min();
        let beta_w = e.w.min_exp(Var::P).map(|m| -m);
        let alpha_u = e.u.min_exp(Var::T).map(|m| -m);
        let (alpha, beta) = match (alpha_u, beta_w, low_vb) {
            (Some(a), Some(b), _) => (a, b),
            (Some(a), None, Some(m)) => (a, -m - a),
            (None, Some(b), Some(m)) => (-m - b, b),
            (None, None, Some(m)) => (-m, 0),
            (a, b, None) => (a.unwrap_or(0), b.unwrap_or(0)),
        };
        let first = [&e.u, &e.v, &e.w, &e.b].into_iter().find_map(|p| p.leading_coeff().cloned());
        let sign = if first.map(|c| c.is_negative()).unwrap_or(false) { -1 } else { 1 };
        let unit = UnitRecord { sign, t: alpha, p: beta, q: 0 };
        (self.mul_unit(e, unit), unit)
    }

    /// Decide `a = ±t^α p^β q^γ · b` (or the reverse) with γ ∈ {0, 1}.
    pub fn compare(&self, a: &QElement, b: &QElement) -> Verdict {
        let (ca, ua) = self.normalize_units(a);
        let (cb, ub) = self.normalize_units(b);
        if ca == cb {
            return Verdict::EquivalentUpToUnits { unit: ua.inverse().then(ub), swapped: false };
        }
        let q1 = UnitRecord { q: 1, ..UnitRecord::ONE };
        let (cqb, uqb) = self.normalize_units(&self.mul(&self.q(), b));
        if ca == cqb {
            return Verdict::EquivalentUpToUnits { unit: ua.inverse().then(uqb).then(q1), swapped: false };
        }
        let (cqa, uqa) = self.normalize_units(&self.mul(&self.q(), a));
        if cb == cqa {
            return Verdict::EquivalentUpToUnits { unit: ub.inverse().then(uqa).then(q1), swapped: true };
        }
        let maybe_higher = |x: &QElement| !x.is_zero() && x.in_q_ideal_shape();
        if maybe_higher(a) || maybe_higher(b) {
            Verdict::Inconclusive
        } else {
            Verdict::Distinct
        }
    }
}

impl Ring for QuotientRing {
    type Elem = QElement;

    fn zero(&self) -> QElement {
        let z = LaurentPoly::zero(&self.vars);
        QElement { u: z.clone(), v: z.clone(), w: z.clone(), b: z }
    }

    fn one(&self) -> QElement {
        self.monomial(1, &[])
    }

    fn add(&self, x: &QElement, y: &QElement) -> QElement {
        QElement { u: x.u.add(&y.u), v: x.v.add(&y.v), w: x.w.add(&y.w), b: x.b.add(&y.b) }
    }

    fn neg(&self, x: &QElement) -> QElement {
        QElement { u: x.u.neg(), v: x.v.neg(), w: x.w.neg(), b: x.b.neg() }
    }

    fn mul(&self, x: &QElement, y: &QElement) -> QElement {
        let bb = x.b.mul(&y.b);
        let v = if bb.is_zero() {
            x.v.mul(&y.v)
        } else {
            let one_minus_t = LaurentPoly::one(&self.vars).sub(&LaurentPoly::var(&self.vars, Var::T));
            x.v.mul(&y.v).add(&bb.mul(&one_minus_t.mul(&one_minus_t)))
        };
        QElement { u: x.u.mul(&y.u), v, w: x.w.mul(&y.w), b: x.v.mul(&y.b).add(&y.v.mul(&x.b)) }
    }

    fn is_zero(&self, x: &QElement) -> bool {
        x.is_zero()
    }

    fn eq(&self, x: &QElement, y: &QElement) -> bool {
        x == y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn g1() -> QuotientRing {
        QuotientRing::g(1)
    }

    fn el(r: &QuotientRing, s: &str) -> QElement {
        r.normalize(&parse_poly(r.vars_with_q(), s).unwrap()).unwrap()
    }

    #[test]
    fn defining_relations() {
        let r = g1();
        assert_eq!(el(&r, "q*p"), el(&r, "q*t"));
        assert_eq!(el(&r, "q^2"), el(&r, "1 - t - p + t*p"));
        assert!(el(&r, "q*p - q*t").is_zero());
    }

    #[test]
    fn hidden_relation_is_zero() {
        // (1-t)(1-p)(p-t) = q^2 (p - t) = 0
        let r = g1();
        assert!(r.mul(&el(&r, "1 - t - p + t*p"), &el(&r, "p - t")).is_zero());
        assert!(!el(&r, "p - t").is_zero());
        assert!(!el(&r, "1 - p").is_zero());
    }

    #[test]
    fn representative_of_p_free_element_is_itself() {
        let r = g1();
        let a = parse_poly(r.vars(), "-2*t + 4*t^2 - t^3*x1^-1 + 5*x1").unwrap();
        let e = r.embed(&a).unwrap();
        assert_eq!(r.representative(&e).0, a);
    }

    #[test]
    fn representative_round_trips() {
        let r = g1();
        let raw = parse_poly(r.vars_with_q(), "p^3*t - 2*p^-2*x1 + q*p^2 + 3*q^2*t + q^3").unwrap();
        let e = r.normalize(&raw).unwrap();
        let back = r.normalize(&r.to_poly(&e)).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn units_normalize_consistently() {
        let r = g1();
        let e = el(&r, "3*t^2 - p*t^5*x1 + q*t^-3 + p^4");
        let (c, u) = r.normalize_units(&e);
        let moved = r.mul_unit(&e, UnitRecord { sign: -1, t: 4, p: -7, q: 0 });
        let (c2, _) = r.normalize_units(&moved);
        assert_eq!(c, c2);
        assert_eq!(r.mul_unit(&e, u), c);
    }

    #[test]
    fn compare_finds_q_multiples() {
        let r = g1();
        let b = el(&r, "1 + t*x1");
        let a = r.mul_unit(&r.mul(&r.q(), &b), UnitRecord { sign: -1, t: 2, p: 1, q: 0 });
        match r.compare(&a, &b) {
            Verdict::EquivalentUpToUnits { unit, swapped: false } => {
                assert_eq!(r.mul_unit(&b, unit), a);
                assert_eq!(unit.q, 1);
            }
            v => panic!("{v:?}"),
        }
        assert!(r.compare(&b, &a).is_equivalent());
        assert_eq!(r.compare(&el(&r, "1 + t"), &el(&r, "1 + t^2")), Verdict::Distinct);
    }

    #[test]
    fn zero_divisor_makes_zero_equivalent() {
        // q (p - t) = 0
        let r = g1();
        assert!(r.compare(&r.zero(), &el(&r, "p - t")).is_equivalent());
        assert_eq!(r.compare(&r.zero(), &el(&r, "1")), Verdict::Distinct);
    }
}
