//! The polynomial invariants `s(K) = det M(K)` and `n'(K) = det N''(K)`,
//! normalized so that values differing by ±t^α p^β print identically.

use serde::Serialize;

use crate::diagram::DiagramCode;
use crate::error::RingError;
use crate::matrix::{build_m, build_n, build_npp, InvariantMatrix};
use crate::parity::{parity, types};
use crate::ring::{QElement, QuotientRing, RRawRing, RingKind, UnitRecord, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InvariantKind {
    S,
    NPrime,
}

#[derive(Clone, Debug)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub ring: QuotientRing,
    /// The determinant as computed.
    pub raw: QElement,
    /// `unit · raw`, the canonical representative of the unit orbit.
    pub canonical: QElement,
    pub unit: UnitRecord,
    /// Size of the matrix the determinant was taken of.
    pub matrix_size: usize,
}

impl InvariantValue {
    fn new(kind: InvariantKind, ring: QuotientRing, raw: QElement, matrix_size: usize) -> Self {
        let (canonical, unit) = ring.normalize_units(&raw);
        InvariantValue { kind, ring, raw, canonical, unit, matrix_size }
    }

    pub fn ring_kind(&self) -> RingKind {
        self.ring.kind()
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn render(&self) -> String {
        self.ring.render(&self.canonical)
    }

    pub fn render_raw(&self) -> String {
        self.ring.render(&self.raw)
    }
}

/// `s(K)` for a diagram on a surface (genus 0 codes work too).
pub fn s_invariant<D: DiagramCode + ?Sized>(d: &D) -> InvariantValue {
    let m = build_m(d, &parity(d));
    let raw = m.det().expect("square");
    InvariantValue::new(InvariantKind::S, m.ring, raw, m.matrix.rows())
}

/// `n'(K)` for a virtual knot. Side tokens, if any, are ignored.
pub fn nprime_invariant<D: DiagramCode + ?Sized>(d: &D) -> InvariantValue {
    let m = build_npp(d, &types(d));
    let raw = m.det().expect("square");
    InvariantValue::new(InvariantKind::NPrime, m.ring, raw, m.matrix.rows())
}

/// The presentation of the module N(K) over R, for export. Equality in R is
/// not decided, so nothing is computed from it.
pub fn n_presentation<D: DiagramCode + ?Sized>(d: &D) -> InvariantMatrix<RRawRing> {
    build_n(d, &types(d))
}

/// Decide whether `a = u·b` for a unit u = ±t^α p^β q^γ (see [`Verdict`]).
/// Values of different kinds or over different rings are never compared.
pub fn compare(a: &InvariantValue, b: &InvariantValue) -> Result<Verdict, RingError> {
    if a.ring != b.ring || a.kind != b.kind {
        return Err(RingError::RingMismatch {
            left: format!("{:?} over {}", a.kind, a.ring.kind()),
            right: format!("{:?} over {}", b.kind, b.ring.kind()),
        });
    }
    Ok(a.ring.compare(&a.raw, &b.raw))
}
