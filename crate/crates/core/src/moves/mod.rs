//! Generalized Reidemeister moves on codes, a random diagram generator, and
//! the randomized invariance harness.
//!
//! Moves keep crossing ids: inserted crossings get fresh ids above the
//! current maximum and removals leave the other ids alone, so parity and type
//! of untouched crossings can be compared directly.

pub mod r3;
pub mod random;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{CrossingId, DiagramCode, GaussDiagram, Sign, Strand, SurfaceDiagram, Token};
use crate::error::MoveError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Add a kink before the token at `gap`.
    R1Insert {
        gap: usize,
        over_first: bool,
        sign: Sign,
    },
    R1Remove {
        crossing: CrossingId,
    },
    /// Add a bigon: the over pair goes before token `over_gap`, the under pair
    /// before `under_gap` (over pair first if the gaps coincide). The first
    /// new crossing has `sign`, the second the opposite one.
    R2Insert {
        over_gap: usize,
        under_gap: usize,
        over_swapped: bool,
        under_swapped: bool,
        sign: Sign,
    },
    R2Remove {
        crossings: [CrossingId; 2],
    },
    /// Swap the tokens of each of the three adjacent pairs.
    R3 {
        segments: [[usize; 2]; 3],
    },
    /// Pass a crossing through a side: each `[passage, side token]` pair is swapped.
    SidePass {
        swaps: [[usize; 2]; 2],
    },
    SideBigonInsert {
        gap: usize,
        side: u32,
        sign: Sign,
    },
    /// Remove the side tokens at `at` and the next position.
    SideBigonRemove {
        at: usize,
    },
    /// Add a degree-2 vertex; the code is unchanged, only the matrix grows.
    Subdivide {
        gap: usize,
    },
    /// Move the base point by `rotation` tokens and renumber crossings.
    Relabel {
        rotation: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    R1Insert,
    R1Remove,
    R2Insert,
    R2Remove,
    R3,
    SidePass,
    SideBigonInsert,
    SideBigonRemove,
    Subdivide,
    Relabel,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::R1Insert => "R1+",
            MoveKind::R1Remove => "R1-",
            MoveKind::R2Insert => "R2+",
            MoveKind::R2Remove => "R2-",
            MoveKind::R3 => "R3",
            MoveKind::SidePass => "SidePass",
            MoveKind::SideBigonInsert => "SideBigon+",
            MoveKind::SideBigonRemove => "SideBigon-",
            MoveKind::Subdivide => "Subdivide",
            MoveKind::Relabel => "Relabel",
        })
    }
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Insert { .. } => MoveKind::R1Insert,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Insert { .. } => MoveKind::R2Insert,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
            Move::SidePass { .. } => MoveKind::SidePass,
            Move::SideBigonInsert { .. } => MoveKind::SideBigonInsert,
            Move::SideBigonRemove { .. } => MoveKind::SideBigonRemove,
            Move::Subdivide { .. } => MoveKind::Subdivide,
            Move::Relabel { .. } => MoveKind::Relabel,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.kind(), self)
    }
}

fn next_id(tokens: &[Token]) -> u32 {
    tokens.iter().filter_map(Token::crossing).map(|c| c.0).max().unwrap_or(0) + 1
}

/// Cyclically adjacent position pairs `(i, i+1)`.
fn adjacent_pairs(len: usize) -> Vec<(usize, usize)> {
    match len {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1), (1, 0)],
        _ => (0..len).map(|i| (i, (i + 1) % len)).collect(),
    }
}

fn passage_positions(tokens: &[Token]) -> BTreeMap<(CrossingId, Strand), usize> {
    tokens.iter().enumerate().filter_map(|(i, t)| t.passage().map(|p| ((p.crossing, p.strand), i))).collect()
}

fn signs(tokens: &[Token]) -> BTreeMap<CrossingId, Sign> {
    tokens.iter().filter_map(Token::passage).map(|p| (p.crossing, p.sign)).collect()
}

fn is_over(t: &Token) -> bool {
    matches!(t, Token::Passage(p) if p.strand == Strand::Over)
}

fn is_under(t: &Token) -> bool {
    matches!(t, Token::Passage(p) if p.strand == Strand::Under)
}

pub fn r1_remove_sites(tokens: &[Token]) -> Vec<Move> {
    let mut out: Vec<Move> = Vec::new();
    for (i, j) in adjacent_pairs(tokens.len()) {
        if let (Some(a), Some(b)) = (tokens[i].crossing(), tokens[j].crossing()) {
            let m = Move::R1Remove { crossing: a };
            if a == b && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

pub fn r2_remove_sites(tokens: &[Token]) -> Vec<Move> {
    let sg = signs(tokens);
    let pairs: Vec<(usize, usize)> = adjacent_pairs(tokens.len())
        .into_iter()
        .filter(|&(i, j)| matches!((tokens[i].crossing(), tokens[j].crossing()), (Some(a), Some(b)) if a != b))
        .collect();
    let mut out: Vec<Move> = Vec::new();
    for &(i, j) in &pairs {
        if !(is_over(&tokens[i]) && is_over(&tokens[j])) {
            continue;
        }
        let (a, b) = (tokens[i].crossing().unwrap(), tokens[j].crossing().unwrap());
        if sg[&a] == sg[&b] {
            continue;
        }
        let unders_adjacent = pairs.iter().any(|&(k, l)| {
            is_under(&tokens[k]) && is_under(&tokens[l]) && {
                let (x, y) = (tokens[k].crossing().unwrap(), tokens[l].crossing().unwrap());
                (x, y) == (a, b) || (x, y) == (b, a)
            }
        });
        let m = Move::R2Remove { crossings: [a.min(b), a.max(b)] };
        if unders_adjacent && !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

pub fn r3_sites(tokens: &[Token]) -> Vec<Move> {
    let n = tokens.len();
    let pos = passage_positions(tokens);
    let sg = signs(tokens);
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(n) {
        if !(is_over(&tokens[i]) && is_over(&tokens[j])) {
            continue;
        }
        let (a, b) = (tokens[i].crossing().unwrap(), tokens[j].crossing().unwrap());
        if a == b {
            continue;
        }
        for (tm, tb, t_first) in [(a, b, true), (b, a, false)] {
            let u_tm = pos[&(tm, Strand::Under)];
            let u_tb = pos[&(tb, Strand::Under)];
            for (nb, m_first) in [((u_tm + 1) % n, true), ((u_tm + n - 1) % n, false)] {
                let Some(mb) = tokens[nb].crossing() else { continue };
                if !is_over(&tokens[nb]) || mb == tm || mb == tb {
                    continue;
                }
                let u_mb = pos[&(mb, Strand::Under)];
                let b_first = if u_mb == (u_tb + 1) % n {
                    true
                } else if u_mb == (u_tb + n - 1) % n {
                    false
                } else {
                    continue;
                };
                let seg_t = if t_first { [i, j] } else { [j, i] };
                let seg_m = if m_first { [u_tm, nb] } else { [nb, u_tm] };
                let seg_b = if b_first { [u_tb, u_mb] } else { [u_mb, u_tb] };
                let mut all = [seg_t, seg_m, seg_b].concat();
                all.sort_unstable();
                all.dedup();
                if all.len() < 6 {
                    continue;
                }
                let pat =
                    (t_first, m_first, b_first, sg[&tm].value() as i8, sg[&tb].value() as i8, sg[&mb].value() as i8);
                let mv = Move::R3 { segments: [seg_t, seg_m, seg_b] };
                if r3::is_valid(&pat) && !out.contains(&mv) {
                    out.push(mv);
                }
            }
        }
    }
    out
}

/// Crossings that can be pushed through a side: both passages have a token
/// of the same side next to them, on the same side of the crossing.
///
/// A token right after a passage with sign e puts the crossing in region −e
/// relative to that side; a token right before it puts it in region e.
pub fn side_pass_sites(tokens: &[Token]) -> Vec<Move> {
    let n = tokens.len();
    let mut by_crossing: BTreeMap<CrossingId, Vec<usize>> = BTreeMap::new();
    for (i, t) in tokens.iter().enumerate() {
        if let Some(c) = t.crossing() {
            by_crossing.entry(c).or_default().push(i);
        }
    }
    let mut out: Vec<Move> = Vec::new();
    for idx in by_crossing.values() {
        let options: Vec<Vec<(usize, usize, u32, i32)>> = idx
            .iter()
            .map(|&p| {
                [((p + 1) % n, true), ((p + n - 1) % n, false)]
                    .into_iter()
                    .filter_map(|(nb, after)| match tokens[nb] {
                        Token::Side(s) => {
                            let e = s.sign.value();
                            Some((p, nb, s.side, if after { -e } else { e }))
                        }
                        Token::Passage(_) => None,
                    })
                    .collect()
            })
            .collect();
        for a in &options[0] {
            for b in &options[1] {
                if a.2 == b.2 && a.3 == b.3 && a.1 != b.1 {
                    let mv = Move::SidePass { swaps: [[a.0, a.1], [b.0, b.1]] };
                    if !out.contains(&mv) {
                        out.push(mv);
                    }
                }
            }
        }
    }
    out
}

pub fn side_bigon_remove_sites(tokens: &[Token]) -> Vec<Move> {
    let mut out: Vec<Move> = Vec::new();
    for (i, j) in adjacent_pairs(tokens.len()) {
        if let (Token::Side(a), Token::Side(b)) = (tokens[i], tokens[j]) {
            let mv = Move::SideBigonRemove { at: i };
            if a.side == b.side && a.sign != b.sign && !out.contains(&mv) {
                out.push(mv);
            }
        }
    }
    out
}

/// Moves with a definite site: R1-, R2-, R3, side passes and side-bigon removals.
pub fn local_sites<D: DiagramCode + ?Sized>(d: &D) -> Vec<Move> {
    let t = d.tokens();
    let mut out = r1_remove_sites(t);
    out.extend(r2_remove_sites(t));
    out.extend(r3_sites(t));
    out.extend(side_pass_sites(t));
    out.extend(side_bigon_remove_sites(t));
    out
}

/// Moves that can be done anywhere: every R1+/R2+ insertion, side-bigon
/// insertion, subdivision and base-point change.
pub fn insertion_sites<D: DiagramCode + ?Sized>(d: &D) -> Vec<Move> {
    let len = d.tokens().len();
    let mut out = Vec::new();
    for gap in 0..=len {
        for over_first in [true, false] {
            for sign in [Sign::Pos, Sign::Neg] {
                out.push(Move::R1Insert { gap, over_first, sign });
            }
        }
    }
    for over_gap in 0..=len {
        for under_gap in 0..=len {
            for over_swapped in [false, true] {
                for under_swapped in [false, true] {
                    for sign in [Sign::Pos, Sign::Neg] {
                        out.push(Move::R2Insert { over_gap, under_gap, over_swapped, under_swapped, sign });
                    }
                }
            }
        }
    }
    for gap in 0..=len {
        for side in 1..=2 * d.genus() {
            for sign in [Sign::Pos, Sign::Neg] {
                out.push(Move::SideBigonInsert { gap, side, sign });
            }
        }
        out.push(Move::Subdivide { gap });
    }
    out.extend((0..len.max(1)).map(|rotation| Move::Relabel { rotation }));
    out
}

pub fn applicable<D: DiagramCode + ?Sized>(d: &D) -> Vec<Move> {
    let mut out = local_sites(d);
    out.extend(insertion_sites(d));
    out
}

fn not_applicable(m: &Move) -> MoveError {
    MoveError::NotApplicable(m.to_string())
}

/// Apply a move to a token word of a genus-`genus` diagram.
pub fn apply_tokens(tokens: &[Token], genus: u32, m: &Move) -> Result<Vec<Token>, MoveError> {
    let len = tokens.len();
    let check_gap = |g: usize| if g <= len { Ok(()) } else { Err(not_applicable(m)) };
    let present = |sites: Vec<Move>| if sites.contains(m) { Ok(()) } else { Err(not_applicable(m)) };
    Ok(match m {
        Move::R1Insert { gap, over_first, sign } => {
            check_gap(*gap)?;
            let c = next_id(tokens);
            let (o, u) = (Token::over(c, *sign), Token::under(c, *sign));
            let pair = if *over_first { [o, u] } else { [u, o] };
            let mut out = tokens.to_vec();
            out.splice(gap..gap, pair);
            out
        }
        Move::R1Remove { crossing } => {
            present(r1_remove_sites(tokens))?;
            tokens.iter().filter(|t| t.crossing() != Some(*crossing)).copied().collect()
        }
        Move::R2Insert { over_gap, under_gap, over_swapped, under_swapped, sign } => {
            check_gap(*over_gap)?;
            check_gap(*under_gap)?;
            let a = next_id(tokens);
            let b = a + 1;
            let (sa, sb) = (*sign, sign.flip());
            let mut over = vec![Token::over(a, sa), Token::over(b, sb)];
            let mut under = vec![Token::under(a, sa), Token::under(b, sb)];
            if *over_swapped {
                over.reverse();
            }
            if *under_swapped {
                under.reverse();
            }
            let mut out = Vec::with_capacity(len + 4);
            for (i, t) in tokens.iter().map(Some).chain([None]).enumerate() {
                if i == *over_gap {
                    out.extend(&over);
                }
                if i == *under_gap {
                    out.extend(&under);
                }
                out.extend(t);
            }
            out
        }
        Move::R2Remove { crossings } => {
            present(r2_remove_sites(tokens))?;
            tokens.iter().filter(|t| !t.crossing().is_some_and(|c| crossings.contains(&c))).copied().collect()
        }
        Move::R3 { segments } => {
            present(r3_sites(tokens))?;
            let mut out = tokens.to_vec();
            for [i, j] in segments {
                out.swap(*i, *j);
            }
            out
        }
        Move::SidePass { swaps } => {
            present(side_pass_sites(tokens))?;
            let mut out = tokens.to_vec();
            for [i, j] in swaps {
                out.swap(*i, *j);
            }
            out
        }
        Move::SideBigonInsert { gap, side, sign } => {
            check_gap(*gap)?;
            if *side == 0 || *side > 2 * genus {
                return Err(not_applicable(m));
            }
            let mut out = tokens.to_vec();
            out.splice(gap..gap, [Token::side(*side, *sign), Token::side(*side, sign.flip())]);
            out
        }
        Move::SideBigonRemove { at } => {
            present(side_bigon_remove_sites(tokens))?;
            let next = (at + 1) % len;
            tokens.iter().enumerate().filter(|(i, _)| i != at && *i != next).map(|(_, t)| *t).collect()
        }
        Move::Subdivide { gap } => {
            check_gap(*gap)?;
            tokens.to_vec()
        }
        Move::Relabel { rotation } => {
            if *rotation >= len.max(1) {
                return Err(not_applicable(m));
            }
            let mut out = tokens.to_vec();
            out.rotate_left(*rotation);
            let tmp = SurfaceDiagram::new("", genus, out).map_err(|e| MoveError::NotApplicable(e.to_string()))?;
            tmp.renumbered().tokens().to_vec()
        }
    })
}

pub fn apply(d: &SurfaceDiagram, m: &Move) -> Result<SurfaceDiagram, MoveError> {
    let tokens = apply_tokens(d.tokens(), d.genus(), m)?;
    SurfaceDiagram::new(d.name(), d.genus(), tokens).map_err(|e| MoveError::NotApplicable(e.to_string()))
}

pub fn apply_gauss(d: &GaussDiagram, m: &Move) -> Result<GaussDiagram, MoveError> {
    let tokens = apply_tokens(d.tokens(), 0, m)?;
    GaussDiagram::new(d.name(), tokens).map_err(|e| MoveError::NotApplicable(e.to_string()))
}
