//! Parity-aware polynomial invariants of knots in thickened surfaces and of
//! virtual knots.
//!
//! A diagram is given as a signed Gauss code, optionally with side tokens
//! recording where the curve crosses the sides of the fundamental polygon.
//! From it we build a relation matrix over a quotient of a Laurent ring and
//! take its determinant:
//!
//! ```
//! use parknot::{parse_gauss, s_invariant, nprime_invariant};
//!
//! let k = parse_gauss("vt: O1+ O2+ U1+ U2+").unwrap();
//! assert_eq!(nprime_invariant(&k).render(), "1");
//! println!("{}", s_invariant(&k).render());
//! ```

pub mod diagram;
pub mod error;
pub mod invariant;
pub mod matrix;
pub mod moves;
pub mod parity;
pub mod ring;

pub use diagram::{
    parse_gauss, parse_gauss_file, parse_surface, parse_surface_file, CrossingId, DiagramCode, GaussDiagram, Sign,
    Strand, SurfaceDiagram, Token,
};
pub use error::{MatrixError, MoveError, ParseError, RingError};
pub use invariant::{compare, n_presentation, nprime_invariant, s_invariant, InvariantKind, InvariantValue};
pub use matrix::{build_m, build_m_subdivided, build_n, build_npp, InvariantMatrix, RenderedMatrix};
pub use moves::verify::{verify_invariance, VerifyConfig, VerifyReport, Which};
pub use moves::{apply, apply_gauss, Move, MoveKind};
pub use parity::{parity, short_arcs, types, ChordData, CrossingType, Parity, ParityMap, TypeMap};
pub use ring::{QElement, QuotientRing, Ring, RingKind, UnitRecord, Verdict};
