//! Randomized invariance check: apply moves to random codes and compare the
//! invariants and the parity/type bookkeeping before and after.
//!
//! Moves whose source or target has an empty relation matrix (no crossings
//! for `s`, no type-1/2 crossings for `n'`) are reported separately: the
//! determinant of the empty matrix is 1, while a single kink or bigon on such
//! a diagram produces a matrix whose rows sum to zero, so the value drops to
//! 0. That boundary is a property of the definition, not of the move code.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::{plant_r3, plant_side_pass, random_gauss, random_surface};
use super::{apply, local_sites, Move, MoveKind};
use crate::diagram::{CrossingId, DiagramCode, Sign, SurfaceDiagram};
use crate::invariant::{nprime_invariant, s_invariant, InvariantValue};
use crate::matrix::build_m_subdivided;
use crate::parity::{parity, types, CrossingType, Parity};
use crate::ring::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Which {
    S,
    NPrime,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub max_crossings: usize,
    pub max_genus: u32,
    pub seed: u64,
    pub which: Which,
    /// Random R1+/R2+ insertions tried per diagram (each kind).
    pub insertions: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 100, max_crossings: 8, max_genus: 2, seed: 0, which: Which::Both, insertions: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    /// What failed: `s`, `n'`, `parity` or `type`.
    pub check: String,
    pub move_kind: MoveKind,
    pub before: String,
    pub after: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub trials: usize,
    /// Number of invariant comparisons per (suite, move kind).
    pub checked: BTreeMap<String, usize>,
    /// Sorted type triples of the R3 moves that were checked, e.g. "0,0,1".
    pub r3_type_cases: BTreeMap<String, usize>,
    pub counterexamples: Vec<Finding>,
    pub axiom_violations: Vec<Finding>,
    pub boundary_events: Vec<Finding>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.axiom_violations.is_empty()
    }

    fn merge(&mut self, other: VerifyReport) {
        self.trials += other.trials;
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        for (k, v) in other.r3_type_cases {
            *self.r3_type_cases.entry(k).or_default() += v;
        }
        self.counterexamples.extend(other.counterexamples);
        self.axiom_violations.extend(other.axiom_violations);
        self.boundary_events.extend(other.boundary_events);
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Suite {
    S,
    NPrime,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::S => "s",
            Suite::NPrime => "n'",
        }
    }

    fn value(self, d: &SurfaceDiagram) -> InvariantValue {
        match self {
            Suite::S => s_invariant(d),
            Suite::NPrime => nprime_invariant(d),
        }
    }
}

pub fn verify_invariance(cfg: &VerifyConfig) -> VerifyReport {
    let suites: Vec<Suite> = match cfg.which {
        Which::S => vec![Suite::S],
        Which::NPrime => vec![Suite::NPrime],
        Which::Both => vec![Suite::S, Suite::NPrime],
    };
    let mut report = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rep = VerifyReport { trials: 1, ..Default::default() };
            for &suite in &suites {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(trial as u64 * 2 + (suite == Suite::NPrime) as u64);
                let d = random_diagram(&mut rng, cfg, suite);
                check_diagram(&mut rng, &d, suite, cfg.insertions, &mut rep);
            }
            rep
        })
        .reduce(VerifyReport::default, |mut a, b| {
            a.merge(b);
            a
        });
    report.counterexamples.sort_by(|a, b| (&a.before, &a.after).cmp(&(&b.before, &b.after)));
    report.boundary_events.sort_by(|a, b| (&a.before, &a.after).cmp(&(&b.before, &b.after)));
    report.axiom_violations.sort_by(|a, b| (&a.before, &a.after).cmp(&(&b.before, &b.after)));
    report
}

fn random_diagram(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, suite: Suite) -> SurfaceDiagram {
    let max = cfg.max_crossings.max(1);
    // most trials get a planted triangle so that R3 is exercised
    let plant = max >= 4 && rng.gen_bool(0.7);
    let n = rng.gen_range(1..=if plant { max - 3 } else { max });
    let genus = if suite == Suite::S { rng.gen_range(0..=cfg.max_genus) } else { 0 };
    let mut d = match suite {
        Suite::S => random_surface(rng, n, genus),
        Suite::NPrime => random_gauss(rng, n).to_surface(),
    };
    if plant {
        let tokens = plant_r3(rng, d.tokens());
        d = SurfaceDiagram::new("random", genus, tokens).expect("valid");
    }
    if genus > 0 && rng.gen_bool(0.5) {
        d = plant_side_pass(rng, &d);
    }
    d.renumbered().with_name(format!("trial-{}", rng.gen::<u32>()))
}

fn sampled_moves(rng: &mut ChaCha8Rng, d: &SurfaceDiagram, suite: Suite, insertions: usize) -> Vec<Move> {
    let len = d.tokens().len();
    let sign = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    let mut out = local_sites(d);
    for _ in 0..insertions {
        out.push(Move::R1Insert { gap: rng.gen_range(0..=len), over_first: rng.gen_bool(0.5), sign: sign(rng) });
        out.push(Move::R2Insert {
            over_gap: rng.gen_range(0..=len),
            under_gap: rng.gen_range(0..=len),
            over_swapped: rng.gen_bool(0.5),
            under_swapped: rng.gen_bool(0.5),
            sign: sign(rng),
        });
    }
    if d.genus() > 0 {
        let side = rng.gen_range(1..=2 * d.genus());
        out.push(Move::SideBigonInsert { gap: rng.gen_range(0..=len), side, sign: sign(rng) });
    }
    match suite {
        Suite::S => {
            let mut gaps: Vec<usize> = (0..=len).collect();
            gaps.shuffle(rng);
            out.extend(gaps.into_iter().take(2).map(|gap| Move::Subdivide { gap }));
        }
        Suite::NPrime => {}
    }
    if len > 1 {
        out.push(Move::Relabel { rotation: rng.gen_range(1..len) });
    }
    out
}

fn type_case(ty: &BTreeMap<CrossingId, CrossingType>, cs: &[CrossingId]) -> Vec<u8> {
    let mut v: Vec<u8> = cs.iter().map(|c| ty[c].index()).collect();
    v.sort_unstable();
    v
}

const R3_CASES: [[u8; 3]; 4] = [[2, 2, 2], [0, 0, 1], [0, 0, 2], [1, 1, 2]];

/// Crossings involved in a move (ids in the diagram where they exist).
fn touched(d: &SurfaceDiagram, e: &SurfaceDiagram, m: &Move) -> Vec<CrossingId> {
    let before = d.crossings();
    let after = e.crossings();
    match m {
        Move::R1Insert { .. } | Move::R2Insert { .. } => after.into_iter().filter(|c| !before.contains(c)).collect(),
        Move::R1Remove { .. } | Move::R2Remove { .. } => before.into_iter().filter(|c| !after.contains(c)).collect(),
        Move::R3 { segments } => {
            let mut cs: Vec<CrossingId> = segments.iter().flatten().filter_map(|&i| d.tokens()[i].crossing()).collect();
            cs.sort_unstable();
            cs.dedup();
            cs
        }
        _ => Vec::new(),
    }
}

fn check_axioms(d: &SurfaceDiagram, e: &SurfaceDiagram, m: &Move, rep: &mut VerifyReport) {
    let finding = |check: &str, detail: String| Finding {
        check: check.into(),
        move_kind: m.kind(),
        before: d.to_string(),
        after: e.to_string(),
        detail,
    };
    let (p0, p1) = (parity(d), parity(e));
    let (t0, t1) = (types(d), types(e));
    if let Move::Relabel { .. } = m {
        let count = |t: &BTreeMap<CrossingId, CrossingType>| {
            let mut v: Vec<u8> = t.values().map(|x| x.index()).collect();
            v.sort_unstable();
            v
        };
        if count(&t0) != count(&t1) {
            rep.axiom_violations.push(finding("type", "relabeling changed the type multiset".into()));
        }
        return;
    }
    if d.homology() != e.homology() {
        rep.axiom_violations.push(finding("homology", format!("{:?} became {:?}", d.homology(), e.homology())));
    }
    let moved = touched(d, e, m);
    // untouched crossings keep parity and type
    for (c, p) in &p0 {
        if moved.contains(c) {
            continue;
        }
        if p1.get(c) != Some(p) {
            rep.axiom_violations.push(finding("parity", format!("crossing {c} changed parity")));
        }
        if t1.get(c) != t0.get(c) {
            rep.axiom_violations.push(finding("type", format!("crossing {c} changed type")));
        }
    }
    let (pm, tm) = match m {
        Move::R1Insert { .. } | Move::R2Insert { .. } => (&p1, &t1),
        _ => (&p0, &t0),
    };
    match m.kind() {
        MoveKind::R1Insert | MoveKind::R1Remove => {
            let c = moved[0];
            if pm[&c] != Parity::Even {
                rep.axiom_violations.push(finding("parity", format!("kink crossing {c} is odd")));
            }
            if tm[&c] != CrossingType::Type2 {
                rep.axiom_violations.push(finding("type", format!("kink crossing {c} is not type 2")));
            }
        }
        MoveKind::R2Insert | MoveKind::R2Remove => {
            let (a, b) = (moved[0], moved[1]);
            if pm[&a] != pm[&b] {
                rep.axiom_violations.push(finding("parity", "bigon crossings differ in parity".into()));
            }
            if tm[&a] != tm[&b] {
                rep.axiom_violations.push(finding("type", "bigon crossings differ in type".into()));
            }
        }
        MoveKind::R3 => {
            for (p, t) in [(&p0, &t0), (&p1, &t1)] {
                let odd = moved.iter().filter(|c| p[c] == Parity::Odd).count();
                if odd % 2 != 0 {
                    rep.axiom_violations.push(finding("parity", "triangle has an odd number of odd crossings".into()));
                }
                let case = type_case(t, &moved);
                if !R3_CASES.iter().any(|c| c[..] == case[..]) {
                    rep.axiom_violations.push(finding("type", format!("triangle types {case:?}")));
                }
            }
            let case = type_case(&t0, &moved);
            let key = case.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            *rep.r3_type_cases.entry(key).or_default() += 1;
        }
        _ => {}
    }
}

fn check_diagram(rng: &mut ChaCha8Rng, d: &SurfaceDiagram, suite: Suite, insertions: usize, rep: &mut VerifyReport) {
    let before = suite.value(d);
    for m in sampled_moves(rng, d, suite, insertions) {
        let e = match apply(d, &m) {
            Ok(e) => e,
            Err(err) => {
                rep.axiom_violations.push(Finding {
                    check: "apply".into(),
                    move_kind: m.kind(),
                    before: d.to_string(),
                    after: String::new(),
                    detail: err.to_string(),
                });
                continue;
            }
        };
        check_axioms(d, &e, &m, rep);
        let after = match (&m, suite) {
            (Move::Subdivide { gap }, Suite::S) => {
                let mm = build_m_subdivided(d, &parity(d), &[*gap]).expect("gap in range");
                let raw = mm.det().expect("square");
                let ring = mm.ring;
                let (canonical, unit) = ring.normalize_units(&raw);
                InvariantValue { kind: before.kind, ring, raw, canonical, unit, matrix_size: mm.matrix.rows() }
            }
            _ => suite.value(&e),
        };
        *rep.checked.entry(format!("{} {}", suite.name(), m.kind())).or_default() += 1;
        let verdict = crate::invariant::compare(&before, &after).expect("same ring on both sides of a move");
        if verdict.is_equivalent() {
            continue;
        }
        let f = Finding {
            check: suite.name().into(),
            move_kind: m.kind(),
            before: d.to_string(),
            after: e.to_string(),
            detail: format!(
                "{} vs {} ({})",
                before.render(),
                after.render(),
                if verdict == Verdict::Inconclusive { "inconclusive" } else { "distinct" }
            ),
        };
        if before.matrix_size == 0 || after.matrix_size == 0 {
            rep.boundary_events.push(f);
        } else {
            rep.counterexamples.push(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let cfg =
            VerifyConfig { trials: 12, max_crossings: 5, max_genus: 1, seed: 3, which: Which::Both, insertions: 1 };
        let a = verify_invariance(&cfg);
        assert!(a.passed(), "{:#?}", a.counterexamples);
        let b = verify_invariance(&cfg);
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.boundary_events, b.boundary_events);
    }
}
