//! Relation matrices: M(K) over G, N''(K) over R', and the presentation N(K) over R.
//!
//! Every crossing contributes one row; each arc meeting the crossing adds a
//! local label times the monomial accumulated along the arc from its origin
//! (x-variables for side crossings, s for type-0 passages):
//!
//! | role                           | even / type 2 | odd / type 1 |
//! |--------------------------------|---------------|--------------|
//! | over                           | 1 − t         | q            |
//! | under, left of the over strand | t             | p            |
//! | under, right of it             | −1            | −1           |
//!
//! Looking along the over strand, the incoming under-arc is on the left at a
//! positive crossing and on the right at a negative one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{walk, Arc, DiagramCode, Role, Sign, Step, Strand, Token};
use crate::error::MatrixError;
use crate::parity::{short_arcs, CrossingType, Parity, ParityMap, TypeMap};
use crate::ring::{det, LaurentPoly, Matrix, QElement, QuotientRing, RRawRing, Render, Ring, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatrix<R: Ring> {
    pub ring: R,
    pub matrix: Matrix<R::Elem>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl<R: Ring> InvariantMatrix<R> {
    pub fn det(&self) -> Result<R::Elem, MatrixError> {
        det(&self.ring, &self.matrix)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderedMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl<R: Render> InvariantMatrix<R> {
    pub fn render(&self) -> RenderedMatrix {
        let entries =
            (0..self.matrix.rows()).map(|i| self.matrix.row(i).iter().map(|e| self.ring.render(e)).collect()).collect();
        RenderedMatrix { rows: self.row_labels.clone(), cols: self.col_labels.clone(), entries }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Local {
    MinusOne,
    T,
    OneMinusT,
    P,
    Q,
}

fn local(role: Role, sign: Sign, odd: bool) -> Local {
    let left = match (role, sign) {
        (Role::Over, _) => return if odd { Local::Q } else { Local::OneMinusT },
        (Role::Incoming, Sign::Pos) | (Role::Outgoing, Sign::Neg) => true,
        _ => false,
    };
    match (left, odd) {
        (true, false) => Local::T,
        (true, true) => Local::P,
        (false, _) => Local::MinusOne,
    }
}

fn q_entry(ring: &QuotientRing, l: Local, shift: &[(Var, i32)]) -> QElement {
    let with = |extra: Option<Var>| {
        let mut pw = shift.to_vec();
        pw.extend(extra.map(|v| (v, 1)));
        pw
    };
    match l {
        Local::MinusOne => ring.monomial(-1, shift),
        Local::T => ring.monomial(1, &with(Some(Var::T))),
        Local::P => ring.monomial(1, &with(Some(Var::P))),
        Local::OneMinusT => ring.sub(&ring.monomial(1, shift), &ring.monomial(1, &with(Some(Var::T)))),
        Local::Q => ring.mul(&ring.q(), &ring.monomial(1, shift)),
    }
}

fn x_shift(label: &[i32]) -> Vec<(Var, i32)> {
    label.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (Var::X(i as u8 + 1), e)).collect()
}

fn s_shift(label: &[i32]) -> Vec<(Var, i32)> {
    if label[0] == 0 {
        Vec::new()
    } else {
        vec![(Var::S, label[0])]
    }
}

/// M(K) over G: rows are crossings, columns are arcs (arc k leaves crossing k).
pub fn build_m<D: DiagramCode + ?Sized>(d: &D, parity: &ParityMap) -> InvariantMatrix<QuotientRing> {
    build_m_subdivided(d, parity, &[]).expect("no gaps to check")
}

/// M(K) with extra degree-2 vertices inserted before the tokens at positions
/// `gaps` (position `len` means the end of the word). Each vertex adds an arc
/// and a row `t·x^λ (incoming) − t (outgoing)`.
pub fn build_m_subdivided<D: DiagramCode + ?Sized>(
    d: &D,
    parity: &ParityMap,
    gaps: &[usize],
) -> Result<InvariantMatrix<QuotientRing>, MatrixError> {
    let tokens = d.tokens();
    if let Some(&g) = gaps.iter().find(|&&g| g > tokens.len()) {
        return Err(MatrixError::GapOutOfRange { gap: g, len: tokens.len() });
    }
    let ring = QuotientRing::g(d.genus());
    let crossings = d.crossings();
    let n = crossings.len();
    let index: BTreeMap<_, _> = crossings.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut sorted_gaps = gaps.to_vec();
    sorted_gaps.sort_unstable();

    let mut steps = Vec::with_capacity(tokens.len() + gaps.len());
    let mut vertex = n;
    let mut gi = 0;
    for pos in 0..=tokens.len() {
        while gi < sorted_gaps.len() && sorted_gaps[gi] == pos {
            steps.push(Step::Cut(vertex));
            vertex += 1;
            gi += 1;
        }
        if let Some(t) = tokens.get(pos) {
            steps.push(match t {
                Token::Passage(p) if p.strand == Strand::Under => Step::Cut(index[&p.crossing]),
                Token::Passage(p) => Step::Over(index[&p.crossing]),
                Token::Side(s) => Step::Shift(s.side as usize - 1, s.sign.value()),
            });
        }
    }
    let size = n + gaps.len();
    let arcs = walk(&steps, 2 * d.genus() as usize, size);
    let signs: Vec<Sign> = crossings.iter().map(|c| d.sign_of(*c).expect("crossing present")).collect();
    let odd: Vec<bool> = crossings.iter().map(|c| parity.get(c) == Some(&Parity::Odd)).collect();

    let mut m = Matrix::filled(size, size, ring.zero());
    for (col, arc) in arcs.iter().enumerate() {
        for inc in &arc.incidences {
            let shift = x_shift(&inc.label);
            let e = if inc.node < n {
                q_entry(&ring, local(inc.role, signs[inc.node], odd[inc.node]), &shift)
            } else if inc.role == Role::Incoming {
                let mut pw = shift;
                pw.push((Var::T, 1));
                ring.monomial(1, &pw)
            } else {
                ring.monomial(-1, &[(Var::T, 1)])
            };
            let cell = m.get_mut(inc.node, col);
            *cell = ring.add(cell, &e);
        }
    }
    let mut row_labels: Vec<String> = crossings.iter().map(|c| format!("c{c}")).collect();
    row_labels.extend((1..=gaps.len()).map(|k| format!("v{k}")));
    let col_labels = row_labels.iter().map(|r| format!("a[{r}]")).collect();
    Ok(InvariantMatrix { ring, matrix: m, row_labels, col_labels })
}

/// N''(K) over R': rows are type-1/2 crossings, columns are short arcs.
pub fn build_npp<D: DiagramCode + ?Sized>(d: &D, types: &TypeMap) -> InvariantMatrix<QuotientRing> {
    let ring = QuotientRing::r_prime();
    let table = short_arcs(d, types);
    let n = table.crossings.len();
    let signs: Vec<Sign> = table.crossings.iter().map(|c| d.sign_of(*c).expect("crossing present")).collect();
    let odd: Vec<bool> = table.crossings.iter().map(|c| types[c] == CrossingType::Type1).collect();
    let mut m = Matrix::filled(n, n, ring.zero());
    for (col, arc) in table.arcs.iter().enumerate() {
        for inc in &arc.incidences {
            let e = q_entry(&ring, local(inc.role, signs[inc.node], odd[inc.node]), &s_shift(&inc.label));
            let cell = m.get_mut(inc.node, col);
            *cell = ring.add(cell, &e);
        }
    }
    let row_labels: Vec<String> = table.crossings.iter().map(|c| format!("c{c}")).collect();
    let col_labels = row_labels.iter().map(|r| format!("a[{r}]")).collect();
    InvariantMatrix { ring, matrix: m, row_labels, col_labels }
}

/// Presentation of the module N(K) over R.
///
/// Arcs break at every under-passage and also at the over-passage of every
/// type-0 crossing. A type-1/2 crossing gives its usual row; a type-0 crossing
/// of sign ε expresses both outgoing arcs through the incoming ones:
///
/// ```text
/// under_out = s^ε · under_in + w · over_in
/// over_out  = w · under_in + r^ε · over_in
/// ```
///
/// Setting w = 0 and r = s⁻¹ recovers the s-shifts of N''.
pub fn build_n<D: DiagramCode + ?Sized>(d: &D, types: &TypeMap) -> InvariantMatrix<RRawRing> {
    let ring = RRawRing::new();
    let vs = ring.vars().clone();
    let crossings = d.crossings();
    let n = crossings.len();
    let index: BTreeMap<_, _> = crossings.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let zero_type: Vec<usize> = (0..n).filter(|&i| types[&crossings[i]] == CrossingType::Type0).collect();
    let over_node: BTreeMap<usize, usize> = zero_type.iter().enumerate().map(|(k, &i)| (i, n + k)).collect();
    let steps: Vec<Step> = d
        .tokens()
        .iter()
        .filter_map(|t| t.passage())
        .map(|p| {
            let i = index[&p.crossing];
            match (p.strand, over_node.get(&i)) {
                (Strand::Under, _) => Step::Cut(i),
                (Strand::Over, Some(&o)) => Step::Cut(o),
                (Strand::Over, None) => Step::Over(i),
            }
        })
        .collect();
    let size = n + zero_type.len();
    let arcs: Vec<Arc> = walk(&steps, 0, size);
    // the arc ending at each node
    let mut incoming = vec![usize::MAX; size];
    for (k, arc) in arcs.iter().enumerate() {
        let last = arc.incidences.last().expect("arc ends somewhere");
        incoming[last.node] = k;
    }

    let mono = |c: i64, pw: &[(Var, i32)]| LaurentPoly::monomial(&vs, c, pw);
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::new();
    let mut row_labels = Vec::new();
    for (i, c) in crossings.iter().enumerate() {
        let sign = d.sign_of(*c).expect("crossing present");
        let mut row = vec![LaurentPoly::zero(&vs); size];
        match types[c] {
            CrossingType::Type0 => {
                let e = sign.value();
                let o = over_node[&i];
                let mut second = vec![LaurentPoly::zero(&vs); size];
                row[i] = row[i].add(&mono(-1, &[]));
                row[incoming[i]] = row[incoming[i]].add(&mono(1, &[(Var::S, e)]));
                row[incoming[o]] = row[incoming[o]].add(&mono(1, &[(Var::W, 1)]));
                second[o] = second[o].add(&mono(-1, &[]));
                second[incoming[i]] = second[incoming[i]].add(&mono(1, &[(Var::W, 1)]));
                second[incoming[o]] = second[incoming[o]].add(&mono(1, &[(Var::R, e)]));
                rows.push(row);
                rows.push(second);
                row_labels.push(format!("c{c}.under"));
                row_labels.push(format!("c{c}.over"));
                continue;
            }
            ty => {
                let odd = ty == CrossingType::Type1;
                for (k, arc) in arcs.iter().enumerate() {
                    for inc in arc.incidences.iter().filter(|inc| inc.node == i) {
                        let l = match local(inc.role, sign, odd) {
                            Local::MinusOne => mono(-1, &[]),
                            Local::T => mono(1, &[(Var::T, 1)]),
                            Local::P => mono(1, &[(Var::P, 1)]),
                            Local::Q => mono(1, &[(Var::Q, 1)]),
                            Local::OneMinusT => mono(1, &[]).sub(&mono(1, &[(Var::T, 1)])),
                        };
                        row[k] = row[k].add(&l);
                    }
                }
            }
        }
        rows.push(row);
        row_labels.push(format!("c{c}"));
    }
    let rows: Vec<Vec<LaurentPoly>> = rows.into_iter().map(|r| r.iter().map(|e| ring.reduce(e)).collect()).collect();
    let mut col_labels: Vec<String> = crossings.iter().map(|c| format!("a[u{c}]")).collect();
    col_labels.extend(zero_type.iter().map(|&i| format!("a[o{}]", crossings[i])));
    let matrix = if rows.is_empty() { Matrix::filled(0, 0, ring.zero()) } else { Matrix::from_rows(rows) };
    InvariantMatrix { ring, matrix, row_labels, col_labels }
}
