//! `parknot`: parity, invariants, comparisons and move checks for knot codes.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use parknot::{
    build_m, build_npp, compare, n_presentation, nprime_invariant, parity, parse_surface_file, s_invariant, types,
    ChordData, DiagramCode, InvariantValue, RenderedMatrix, SurfaceDiagram, UnitRecord, Verdict, VerifyConfig, Which,
};
use serde::Serialize;

const GRAMMAR: &str = "\
input grammar (one diagram per line, '#' starts a comment):
  line    := [ 'genus' G ';' ] name ':' token*
  token   := ('O' | 'U') id ('+' | '-')      passage of crossing id, over or under, with its sign
           | 'x' m ('+' | '-')               crossing of side m (1 <= m <= 2G), '+' through the selected copy
  a line holding only 'genus G;' sets the genus for the lines that follow";

#[derive(Parser)]
#[command(
    name = "parknot",
    version,
    about = "Parity-aware polynomial invariants of virtual knots and knots in thickened surfaces"
)]
struct Cli {
    /// Report malformed input lines and skip them instead of stopping.
    #[arg(long, global = true)]
    lenient: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    S,
    Nprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    /// M(K) over G, the matrix behind s
    S,
    /// N''(K) over R', the matrix behind n'
    Nprime,
    /// the presentation of N(K) over R (rewritten, not decided)
    N,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suites {
    S,
    Nprime,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Interlacement count, parity and type of every crossing.
    Parity {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Canonical value of s or n' for every diagram in a file.
    Invariant {
        #[arg(long = "type", value_enum, default_value = "s")]
        kind: Invariant,
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also print the matrix the determinant was taken of.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Decide whether two diagrams of a file have unit-equivalent invariants.
    Compare {
        file: PathBuf,
        first: String,
        second: String,
        #[arg(long = "type", value_enum, default_value = "s")]
        kind: Invariant,
        #[arg(long)]
        json: bool,
        /// Exit with status 2 unless the values are equivalent.
        #[arg(long)]
        expect_equivalent: bool,
    },
    /// Apply random moves to random codes and check that the invariants survive.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        /// Largest genus of the random surface codes.
        #[arg(long, default_value_t = 2)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "both")]
        invariant: Suites,
        /// Random R1/R2 insertions tried per diagram.
        #[arg(long, default_value_t = 2)]
        insertions: usize,
        /// Write the full report as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print relation matrices, one row per line, tab-separated.
    DumpMatrix {
        file: PathBuf,
        #[arg(long = "type", value_enum, default_value = "s")]
        kind: MatrixKind,
        /// Only this diagram.
        #[arg(long)]
        name: Option<String>,
        /// (row, col, entry) triples of the nonzero entries as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn load(path: &Path, lenient: bool) -> Result<Vec<SurfaceDiagram>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    for r in parse_surface_file(&text) {
        match r {
            Ok(d) => out.push(d),
            Err(e) if lenient => eprintln!("warning: {}: {e}; line skipped", path.display()),
            Err(e) => bail!("{}: {e}\n\n{GRAMMAR}", path.display()),
        }
    }
    Ok(out)
}

fn find<'a>(ds: &'a [SurfaceDiagram], name: &str) -> Result<&'a SurfaceDiagram> {
    ds.iter().find(|d| d.name() == name).with_context(|| format!("no diagram named {name:?}"))
}

fn value(d: &SurfaceDiagram, kind: Invariant) -> InvariantValue {
    match kind {
        Invariant::S => s_invariant(d),
        Invariant::Nprime => nprime_invariant(d),
    }
}

fn label(kind: Invariant) -> &'static str {
    match kind {
        Invariant::S => "s",
        Invariant::Nprime => "n'",
    }
}

struct CrossingRow {
    crossing: u32,
    sign: i32,
    interlacement: usize,
    parity: &'static str,
    ty: u8,
}

/// The stable machine-readable record for one diagram.
#[derive(Serialize)]
struct Record {
    name: String,
    ring: String,
    invariant: Option<&'static str>,
    canonical: Option<String>,
    unit_record: Option<UnitRecord>,
    parity: BTreeMap<String, &'static str>,
    types: BTreeMap<String, u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<RenderedMatrix>,
}

fn parity_word(p: parknot::Parity) -> &'static str {
    match p {
        parknot::Parity::Even => "even",
        parknot::Parity::Odd => "odd",
    }
}

fn record(d: &SurfaceDiagram, v: Option<(Invariant, &InvariantValue)>) -> Record {
    Record {
        name: d.name().to_string(),
        ring: v.map(|(_, v)| v.ring_kind().to_string()).unwrap_or_default(),
        invariant: v.map(|(k, _)| label(k)),
        canonical: v.map(|(_, v)| v.render()),
        unit_record: v.map(|(_, v)| v.unit),
        parity: parity(d).into_iter().map(|(c, p)| (c.to_string(), parity_word(p))).collect(),
        types: types(d).into_iter().map(|(c, t)| (c.to_string(), t.index())).collect(),
        matrix: None,
    }
}

fn render_matrix(d: &SurfaceDiagram, kind: MatrixKind) -> (String, RenderedMatrix) {
    match kind {
        MatrixKind::S => {
            let m = build_m(d, &parity(d));
            (m.ring.kind().to_string(), m.render())
        }
        MatrixKind::Nprime => {
            let m = build_npp(d, &types(d));
            (m.ring.kind().to_string(), m.render())
        }
        MatrixKind::N => {
            let m = n_presentation(d);
            ("R".to_string(), m.render())
        }
    }
}

fn print_matrix(name: &str, ring: &str, m: &RenderedMatrix) {
    println!("# {name}: {}x{} over {ring}", m.rows.len(), m.cols.len());
    println!("\t{}", m.cols.join("\t"));
    for (label, row) in m.rows.iter().zip(&m.entries) {
        println!("{label}\t{}", row.join("\t"));
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Parity { file, json } => {
            let ds = load(&file, cli.lenient)?;
            if json {
                let recs: Vec<Record> = ds.iter().map(|d| record(d, None)).collect();
                println!("{}", to_json(&recs)?);
                return Ok(());
            }
            for d in &ds {
                println!("{}", d.name());
                let chords = ChordData::of(d);
                let (p, t) = (parity(d), types(d));
                for c in d.crossings() {
                    let row = CrossingRow {
                        crossing: c.0,
                        sign: d.sign_of(c).map(|s| s.value()).unwrap_or(0),
                        interlacement: chords.interlacement(c),
                        parity: parity_word(p[&c]),
                        ty: t[&c].index(),
                    };
                    println!(
                        "  c{}\tsign {:+}\tinterlaced {}\t{}\ttype {}",
                        row.crossing, row.sign, row.interlacement, row.parity, row.ty
                    );
                }
            }
        }
        Cmd::Invariant { kind, file, json, dump_matrix } => {
            let ds = load(&file, cli.lenient)?;
            let mut recs = Vec::new();
            for d in &ds {
                let v = value(d, kind);
                let mut rec = record(d, Some((kind, &v)));
                if dump_matrix {
                    let mk = match kind {
                        Invariant::S => MatrixKind::S,
                        Invariant::Nprime => MatrixKind::Nprime,
                    };
                    let (ring, m) = render_matrix(d, mk);
                    if !json {
                        print_matrix(d.name(), &ring, &m);
                    }
                    rec.matrix = Some(m);
                }
                if !json {
                    println!("{}: {} = {}", d.name(), label(kind), v.render());
                }
                recs.push(rec);
            }
            if json {
                println!("{}", to_json(&recs)?);
            }
        }
        Cmd::Compare { file, first, second, kind, json, expect_equivalent } => {
            let ds = load(&file, cli.lenient)?;
            let (a, b) = (find(&ds, &first)?, find(&ds, &second)?);
            let (va, vb) = (value(a, kind), value(b, kind));
            let verdict = compare(&va, &vb).with_context(|| format!("cannot compare {first} with {second}"))?;
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    first: Record,
                    second: Record,
                    verdict: &'a Verdict,
                }
                let out = Out {
                    first: record(a, Some((kind, &va))),
                    second: record(b, Some((kind, &vb))),
                    verdict: &verdict,
                };
                println!("{}", to_json(&out)?);
            } else {
                println!("{first}: {} = {}", label(kind), va.render());
                println!("{second}: {} = {}", label(kind), vb.render());
                match verdict {
                    Verdict::EquivalentUpToUnits { unit, swapped: false } => {
                        println!("Equivalent: {first} = ({unit}) * {second}")
                    }
                    Verdict::EquivalentUpToUnits { unit, swapped: true } => {
                        println!("Equivalent: {second} = ({unit}) * {first}")
                    }
                    Verdict::Distinct => println!("Distinct"),
                    Verdict::Inconclusive => println!("Inconclusive"),
                }
            }
            if expect_equivalent && !verdict.is_equivalent() {
                return Err(Failure::Check(format!("{first} and {second} are not equivalent")));
            }
        }
        Cmd::Verify { trials, max_crossings, genus, seed, invariant, insertions, report } => {
            let which = match invariant {
                Suites::S => Which::S,
                Suites::Nprime => Which::NPrime,
                Suites::Both => Which::Both,
            };
            let cfg = VerifyConfig { trials, max_crossings, max_genus: genus, seed, which, insertions };
            let rep = parknot::verify_invariance(&cfg);
            println!("trials: {}", rep.trials);
            for (k, n) in &rep.checked {
                println!("checked {k}: {n}");
            }
            for (k, n) in &rep.r3_type_cases {
                println!("R3 type case ({k}): {n}");
            }
            println!("counterexamples: {}", rep.counterexamples.len());
            println!("axiom violations: {}", rep.axiom_violations.len());
            println!("empty-matrix boundary events: {}", rep.boundary_events.len());
            for f in rep.counterexamples.iter().chain(&rep.axiom_violations) {
                println!("FAIL {} {}: {} -> {} ({})", f.check, f.move_kind, f.before, f.after, f.detail);
            }
            if let Some(path) = report {
                fs::write(&path, to_json(&rep)?).with_context(|| format!("cannot write {}", path.display()))?;
            }
            if !rep.passed() {
                return Err(Failure::Check("counterexamples found".into()));
            }
        }
        Cmd::DumpMatrix { file, kind, name, json } => {
            let ds = load(&file, cli.lenient)?;
            let chosen: Vec<&SurfaceDiagram> = match &name {
                Some(n) => vec![find(&ds, n)?],
                None => ds.iter().collect(),
            };
            #[derive(Serialize)]
            struct Dump {
                name: String,
                ring: String,
                rows: Vec<String>,
                cols: Vec<String>,
                entries: Vec<(usize, usize, String)>,
            }
            let mut dumps = Vec::new();
            for d in chosen {
                let (ring, m) = render_matrix(d, kind);
                if json {
                    let entries = m
                        .entries
                        .iter()
                        .enumerate()
                        .flat_map(|(i, row)| {
                            row.iter().enumerate().filter(|(_, e)| *e != "0").map(move |(j, e)| (i, j, e.clone()))
                        })
                        .collect();
                    dumps.push(Dump { name: d.name().to_string(), ring, rows: m.rows, cols: m.cols, entries });
                } else {
                    print_matrix(d.name(), &ring, &m);
                }
            }
            if json {
                println!("{}", to_json(&dumps)?);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
