//! Coefficient rings: Laurent polynomials, the quotient rings `G` and `R'`,
//! the raw rewriting ring `R`, and a division-free determinant over any of them.

mod det;
mod poly;
mod quotient;
mod rraw;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use det::{det, Matrix};
pub use poly::{parse_poly, LaurentPoly, Monomial, Var, VarSet};
pub use quotient::{QElement, QuotientRing, RingKind, UnitRecord, Verdict};
pub use rraw::RRawRing;

/// A commutative ring given as a context object; elements are plain values.
pub trait Ring {
    type Elem: Clone + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

/// The free Laurent polynomial ring on a variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentRing {
    pub vars: VarSet,
}

impl Ring for LaurentRing {
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
        a.mul(b)
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
}

/// Canonical text form of ring elements (used by the CLI and fixtures).
pub trait Render: Ring {
    fn render(&self, e: &Self::Elem) -> String;
}

impl Render for Integers {
    fn render(&self, e: &BigInt) -> String {
        e.to_string()
    }
}

impl Render for LaurentRing {
    fn render(&self, e: &LaurentPoly) -> String {
        e.to_string()
    }
}

impl Render for RRawRing {
    fn render(&self, e: &LaurentPoly) -> String {
        e.to_string()
    }
}

impl Render for QuotientRing {
    fn render(&self, e: &QElement) -> String {
        QuotientRing::render(self, e)
    }
}
