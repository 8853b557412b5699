//! Gauss codes and surface codes, plus the arc walks used by the matrix builders.
//!
//! A code is a cyclic word of tokens. `O3+` / `U3+` are the over/under passages
//! of crossing 3 (sign = local writhe), `x2-` records that the curve crosses
//! side `a_2` of the fundamental polygon in the negative direction.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strand {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingPassage {
    pub crossing: CrossingId,
    pub strand: Strand,
    pub sign: Sign,
}

/// Crossing of side `a_side` (1-based) of the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SideToken {
    pub side: u32,
    pub sign: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Token {
    Passage(CrossingPassage),
    Side(SideToken),
}

impl Token {
    pub fn over(c: u32, sign: Sign) -> Token {
        Token::Passage(CrossingPassage { crossing: CrossingId(c), strand: Strand::Over, sign })
    }

    pub fn under(c: u32, sign: Sign) -> Token {
        Token::Passage(CrossingPassage { crossing: CrossingId(c), strand: Strand::Under, sign })
    }

    pub fn side(side: u32, sign: Sign) -> Token {
        Token::Side(SideToken { side, sign })
    }

    pub fn passage(&self) -> Option<&CrossingPassage> {
        match self {
            Token::Passage(p) => Some(p),
            Token::Side(_) => None,
        }
    }

    pub fn crossing(&self) -> Option<CrossingId> {
        self.passage().map(|p| p.crossing)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Passage(p) => {
                let s = if p.strand == Strand::Over { 'O' } else { 'U' };
                write!(f, "{}{}{}", s, p.crossing.0, p.sign.symbol())
            }
            Token::Side(s) => write!(f, "x{}{}", s.side, s.sign.symbol()),
        }
    }
}

/// Anything that carries a cyclic token word.
pub trait DiagramCode {
    fn name(&self) -> &str;
    fn genus(&self) -> u32;
    fn tokens(&self) -> &[Token];

    /// Crossing ids in increasing order.
    fn crossings(&self) -> Vec<CrossingId> {
        let mut ids: Vec<_> = self
            .tokens()
            .iter()
            .filter_map(|t| t.passage())
            .filter(|p| p.strand == Strand::Over)
            .map(|p| p.crossing)
            .collect();
        ids.sort_unstable();
        ids
    }

    fn crossing_count(&self) -> usize {
        self.tokens().iter().filter(|t| t.passage().is_some()).count() / 2
    }

    fn sign_of(&self, c: CrossingId) -> Option<Sign> {
        self.tokens().iter().filter_map(|t| t.passage()).find(|p| p.crossing == c).map(|p| p.sign)
    }

    /// Homology class of the closed curve: net number of crossings of each side.
    fn homology(&self) -> Vec<i32> {
        let mut h = vec![0; 2 * self.genus() as usize];
        for t in self.tokens() {
            if let Token::Side(s) = t {
                h[s.side as usize - 1] += s.sign.value();
            }
        }
        h
    }
}

/// Virtual knot diagram given by a signed Gauss code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussDiagram {
    name: String,
    tokens: Vec<Token>,
}

/// Diagram of a knot in a thickened genus-g surface, drawn in the 4g-gon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceDiagram {
    name: String,
    genus: u32,
    tokens: Vec<Token>,
}

impl DiagramCode for GaussDiagram {
    fn name(&self) -> &str {
        &self.name
    }
    fn genus(&self) -> u32 {
        0
    }
    fn tokens(&self) -> &[Token] {
        &self.tokens
    }
}

impl DiagramCode for SurfaceDiagram {
    fn name(&self) -> &str {
        &self.name
    }
    fn genus(&self) -> u32 {
        self.genus
    }
    fn tokens(&self) -> &[Token] {
        &self.tokens
    }
}

impl GaussDiagram {
    /// Validates the word; crossing ids are kept as given.
    pub fn new(name: impl Into<String>, tokens: Vec<Token>) -> Result<Self, ParseError> {
        if tokens.iter().any(|t| matches!(t, Token::Side(_))) {
            return Err(ParseError::SideTokenInGaussCode);
        }
        validate(&tokens, 0)?;
        Ok(GaussDiagram { name: name.into(), tokens })
    }

    pub fn passages(&self) -> impl Iterator<Item = &CrossingPassage> + '_ {
        self.tokens.iter().filter_map(|t| t.passage())
    }

    pub fn renumbered(&self) -> Self {
        GaussDiagram { name: self.name.clone(), tokens: renumber(&self.tokens) }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn to_surface(&self) -> SurfaceDiagram {
        SurfaceDiagram { name: self.name.clone(), genus: 0, tokens: self.tokens.clone() }
    }
}

impl SurfaceDiagram {
    pub fn new(name: impl Into<String>, genus: u32, tokens: Vec<Token>) -> Result<Self, ParseError> {
        validate(&tokens, genus)?;
        Ok(SurfaceDiagram { name: name.into(), genus, tokens })
    }

    pub fn renumbered(&self) -> Self {
        SurfaceDiagram { name: self.name.clone(), genus: self.genus, tokens: renumber(&self.tokens) }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Forget the surface; fails if the curve meets a side.
    pub fn to_gauss(&self) -> Result<GaussDiagram, ParseError> {
        GaussDiagram::new(self.name.clone(), self.tokens.clone())
    }
}

impl From<GaussDiagram> for SurfaceDiagram {
    fn from(d: GaussDiagram) -> Self {
        SurfaceDiagram { name: d.name, genus: 0, tokens: d.tokens }
    }
}

fn validate(tokens: &[Token], genus: u32) -> Result<(), ParseError> {
    // (over count, under count, sign)
    let mut seen: BTreeMap<u32, (u8, u8, Sign)> = BTreeMap::new();
    for t in tokens {
        match t {
            Token::Side(s) => {
                if s.side == 0 || s.side > 2 * genus {
                    return Err(ParseError::SideOutOfRange { side: s.side, genus });
                }
            }
            Token::Passage(p) => {
                let e = seen.entry(p.crossing.0).or_insert((0, 0, p.sign));
                if e.2 != p.sign {
                    return Err(ParseError::SignMismatch { crossing: p.crossing.0 });
                }
                match p.strand {
                    Strand::Over => e.0 += 1,
                    Strand::Under => e.1 += 1,
                }
                if e.0 > 1 {
                    return Err(ParseError::CrossingSeenTwiceSameStrand { crossing: p.crossing.0, strand: "over" });
                }
                if e.1 > 1 {
                    return Err(ParseError::CrossingSeenTwiceSameStrand { crossing: p.crossing.0, strand: "under" });
                }
            }
        }
    }
    for (&c, &(o, u, _)) in &seen {
        if o + u != 2 {
            return Err(ParseError::CrossingSeenOnce { crossing: c });
        }
    }
    Ok(())
}

fn renumber(tokens: &[Token]) -> Vec<Token> {
    let mut map = BTreeMap::new();
    let mut next = 1;
    for t in tokens {
        if let Token::Passage(p) = t {
            map.entry(p.crossing.0).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
    }
    tokens
        .iter()
        .map(|t| match *t {
            Token::Passage(mut p) => {
                p.crossing = CrossingId(map[&p.crossing.0]);
                Token::Passage(p)
            }
            s => s,
        })
        .collect()
}

fn parse_token(word: &str, position: usize) -> Result<Token, ParseError> {
    let bad = || ParseError::MalformedToken { token: word.to_string(), position };
    let mut chars = word.chars();
    let head = chars.next().ok_or_else(bad)?;
    let sign = match word.chars().last() {
        Some('+') => Sign::Pos,
        Some('-') => Sign::Neg,
        _ => return Err(bad()),
    };
    let digits = &word[1..word.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: u32 = digits.parse().map_err(|_| bad())?;
    match head {
        'O' | 'o' if n > 0 => Ok(Token::over(n, sign)),
        'U' | 'u' if n > 0 => Ok(Token::under(n, sign)),
        'x' | 'X' => Ok(Token::side(n, sign)),
        _ => Err(bad()),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn split_named(line: &str) -> Result<(String, Vec<Token>), ParseError> {
    let (name, body) = line.split_once(':').ok_or_else(|| ParseError::MissingName { line: line.trim().to_string() })?;
    let name = name.trim();
    if name.is_empty() {
        return Err(ParseError::MissingName { line: line.trim().to_string() });
    }
    let tokens = body.split_whitespace().enumerate().map(|(i, w)| parse_token(w, i)).collect::<Result<Vec<_>, _>>()?;
    Ok((name.to_string(), tokens))
}

/// Parses one `name: O1+ U2- ...` line; crossings are renumbered by first appearance.
pub fn parse_gauss(line: &str) -> Result<GaussDiagram, ParseError> {
    let (name, tokens) = split_named(strip_comment(line))?;
    Ok(GaussDiagram::new(name, tokens)?.renumbered())
}

/// Parses a surface code, either `genus g; name: ...` or `name: ...` with the genus supplied.
pub fn parse_surface(line: &str, default_genus: u32) -> Result<SurfaceDiagram, ParseError> {
    let line = strip_comment(line);
    let (genus, rest) = match take_header(line)? {
        Some((g, rest)) => (g, rest),
        None => (default_genus, line),
    };
    let (name, tokens) = split_named(rest)?;
    Ok(SurfaceDiagram::new(name, genus, tokens)?.renumbered())
}

fn take_header(line: &str) -> Result<Option<(u32, &str)>, ParseError> {
    let trimmed = line.trim_start();
    let Some(after) = trimmed.strip_prefix("genus") else {
        return Ok(None);
    };
    let bad = || ParseError::MalformedHeader { line: line.trim().to_string() };
    let (num, rest) = after.split_once(';').ok_or_else(bad)?;
    let g = num.trim().parse().map_err(|_| bad())?;
    Ok(Some((g, rest)))
}

fn at_line(line: usize) -> impl Fn(ParseError) -> ParseError {
    move |e| ParseError::AtLine { line, source: Box::new(e) }
}

/// Every non-blank line of a Gauss code file, in order. Errors carry 1-based line numbers.
pub fn parse_gauss_file(text: &str) -> Vec<Result<GaussDiagram, ParseError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !strip_comment(l).trim().is_empty())
        .map(|(i, l)| parse_gauss(l).map_err(at_line(i + 1)))
        .collect()
}

/// Surface code file: a `genus g;` line sets the genus for the lines after it.
pub fn parse_surface_file(text: &str) -> Vec<Result<SurfaceDiagram, ParseError>> {
    let mut genus = 0;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        match take_header(line) {
            Err(e) => out.push(Err(at_line(i + 1)(e))),
            Ok(Some((g, rest))) => {
                genus = g;
                if !rest.trim().is_empty() {
                    out.push(parse_surface(rest, g).map_err(at_line(i + 1)));
                }
            }
            Ok(None) => out.push(parse_surface(line, genus).map_err(at_line(i + 1))),
        }
    }
    out
}

fn write_tokens(f: &mut fmt::Formatter<'_>, tokens: &[Token]) -> fmt::Result {
    for t in tokens {
        write!(f, " {t}")?;
    }
    Ok(())
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.name)?;
        write_tokens(f, &self.tokens)
    }
}

impl fmt::Display for SurfaceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "genus {}; {}:", self.genus, self.name)?;
        write_tokens(f, &self.tokens)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// The arc leaves this crossing (it starts at the under-passage).
    Outgoing,
    /// The arc ends here, at the under-passage.
    Incoming,
    /// The arc passes over this crossing.
    Over,
}

/// A place where an arc meets a relation, with the label accumulated from the
/// arc's origin up to that point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub node: usize,
    pub role: Role,
    pub label: Vec<i32>,
}

/// One arc: from an under-passage (or vertex) to the next one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub origin: usize,
    pub incidences: Vec<Incidence>,
}

/// What the walker sees at each step of the cyclic word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    /// Breaks the arc: under-passage of a relation node, or a degree-2 vertex.
    Cut(usize),
    /// An arc passes over relation node.
    Over(usize),
    /// Label increment in one coordinate.
    Shift(usize, i32),
    Skip,
}

/// Walk the cyclic step word and collect arcs. Arc `k` of the result starts at
/// the k-th node, so the output is indexed by node.
pub(crate) fn walk(steps: &[Step], dim: usize, node_count: usize) -> Vec<Arc> {
    let Some(start) = steps.iter().position(|s| matches!(s, Step::Cut(_))) else {
        return Vec::new();
    };
    let mut arcs: Vec<Option<Arc>> = vec![None; node_count];
    let len = steps.len();
    let Step::Cut(mut origin) = steps[start] else { unreachable!() };
    let mut cur =
        Arc { origin, incidences: vec![Incidence { node: origin, role: Role::Outgoing, label: vec![0; dim] }] };
    let mut label = vec![0; dim];
    for k in 1..=len {
        match &steps[(start + k) % len] {
            Step::Cut(n) => {
                cur.incidences.push(Incidence { node: *n, role: Role::Incoming, label: label.clone() });
                arcs[origin] = Some(cur);
                origin = *n;
                label = vec![0; dim];
                cur = Arc {
                    origin,
                    incidences: vec![Incidence { node: origin, role: Role::Outgoing, label: label.clone() }],
                };
            }
            Step::Over(n) => cur.incidences.push(Incidence { node: *n, role: Role::Over, label: label.clone() }),
            Step::Shift(i, d) => label[*i] += d,
            Step::Skip => {}
        }
    }
    arcs.into_iter().map(|a| a.expect("every node starts exactly one arc")).collect()
}

/// Arcs of a diagram, split at every under-passage. Arc `k` starts at the k-th
/// crossing in id order; labels are homology coordinates (one per side).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcTable {
    pub crossings: Vec<CrossingId>,
    pub arcs: Vec<Arc>,
}

pub fn arcs<D: DiagramCode + ?Sized>(d: &D) -> ArcTable {
    let crossings = d.crossings();
    let index: BTreeMap<_, _> = crossings.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let steps: Vec<Step> = d
        .tokens()
        .iter()
        .map(|t| match t {
            Token::Passage(p) if p.strand == Strand::Under => Step::Cut(index[&p.crossing]),
            Token::Passage(p) => Step::Over(index[&p.crossing]),
            Token::Side(s) => Step::Shift(s.side as usize - 1, s.sign.value()),
        })
        .collect();
    let arcs = walk(&steps, 2 * d.genus() as usize, crossings.len());
    ArcTable { crossings, arcs }
}
