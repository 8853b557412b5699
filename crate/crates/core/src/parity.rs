//! Gaussian parity and the type refinement used by the `n'` invariant.
//!
//! A crossing is odd when its chord in the Gauss diagram meets an odd number of
//! other chords. Odd crossings are type 0. Making them virtual (deleting their
//! chords) and recomputing parity splits the even crossings into type 1 (now
//! odd) and type 2 (still even).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{walk, Arc, CrossingId, DiagramCode, Step, Strand, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossingType {
    Type0,
    Type1,
    Type2,
}

impl CrossingType {
    pub fn index(self) -> u8 {
        match self {
            CrossingType::Type0 => 0,
            CrossingType::Type1 => 1,
            CrossingType::Type2 => 2,
        }
    }
}

/// Chord endpoints: positions of the two passages of each crossing in the
/// passage-only word (side tokens dropped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordData {
    pub chords: BTreeMap<CrossingId, (usize, usize)>,
}

impl ChordData {
    pub fn of<D: DiagramCode + ?Sized>(d: &D) -> Self {
        let mut chords: BTreeMap<CrossingId, (usize, usize)> = BTreeMap::new();
        for (i, c) in d.tokens().iter().filter_map(Token::crossing).enumerate() {
            chords.entry(c).and_modify(|e| e.1 = i).or_insert((i, usize::MAX));
        }
        ChordData { chords }
    }

    pub fn interlaced(&self, a: CrossingId, b: CrossingId) -> bool {
        let (a0, a1) = self.chords[&a];
        let (b0, b1) = self.chords[&b];
        (a0 < b0 && b0 < a1) != (a0 < b1 && b1 < a1)
    }

    /// Number of other chords meeting the chord of `c`.
    pub fn interlacement(&self, c: CrossingId) -> usize {
        self.chords.keys().filter(|&&d| d != c && self.interlaced(c, d)).count()
    }

    fn parity_among(&self, live: &[CrossingId]) -> BTreeMap<CrossingId, Parity> {
        live.iter()
            .map(|&c| {
                let k = live.iter().filter(|&&d| d != c && self.interlaced(c, d)).count();
                (c, if k % 2 == 0 { Parity::Even } else { Parity::Odd })
            })
            .collect()
    }
}

pub type ParityMap = BTreeMap<CrossingId, Parity>;
pub type TypeMap = BTreeMap<CrossingId, CrossingType>;

pub fn parity<D: DiagramCode + ?Sized>(d: &D) -> ParityMap {
    let cd = ChordData::of(d);
    let all: Vec<_> = cd.chords.keys().copied().collect();
    cd.parity_among(&all)
}

pub fn types<D: DiagramCode + ?Sized>(d: &D) -> TypeMap {
    let cd = ChordData::of(d);
    let all: Vec<_> = cd.chords.keys().copied().collect();
    let first = cd.parity_among(&all);
    let even: Vec<_> = all.iter().copied().filter(|c| first[c] == Parity::Even).collect();
    let second = cd.parity_among(&even);
    all.iter()
        .map(|c| {
            let t = match (first[c], second.get(c)) {
                (Parity::Odd, _) => CrossingType::Type0,
                (Parity::Even, Some(Parity::Odd)) => CrossingType::Type1,
                _ => CrossingType::Type2,
            };
            (*c, t)
        })
        .collect()
}

/// Arcs broken only at type-1/2 under-passages. The single label coordinate is
/// the `s`-exponent: a type-0 crossing of sign e adds `e` to the under strand
/// and `-e` to the over strand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortArcTable {
    /// The type-1/2 crossings, in id order; arc `k` starts at the k-th of them.
    pub crossings: Vec<CrossingId>,
    pub arcs: Vec<Arc>,
}

pub fn short_arcs<D: DiagramCode + ?Sized>(d: &D, types: &TypeMap) -> ShortArcTable {
    let crossings: Vec<_> = types.iter().filter(|(_, t)| **t != CrossingType::Type0).map(|(c, _)| *c).collect();
    let index: BTreeMap<_, _> = crossings.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let steps: Vec<Step> = d
        .tokens()
        .iter()
        .map(|t| match t {
            Token::Side(_) => Step::Skip,
            Token::Passage(p) => match (index.get(&p.crossing), p.strand) {
                (Some(&i), Strand::Under) => Step::Cut(i),
                (Some(&i), Strand::Over) => Step::Over(i),
                (None, Strand::Under) => Step::Shift(0, p.sign.value()),
                (None, Strand::Over) => Step::Shift(0, -p.sign.value()),
            },
        })
        .collect();
    let arcs = walk(&steps, 1, crossings.len());
    ShortArcTable { crossings, arcs }
}
