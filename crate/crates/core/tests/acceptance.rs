//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use parknot::ring::{det, parse_poly, LaurentRing, Matrix, Ring};
use parknot::{
    build_m, compare, nprime_invariant, parity, s_invariant, verify_invariance, DiagramCode, Parity, QElement,
    QuotientRing, Verdict, VerifyConfig, VerifyReport, Which,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn reference_matrix<const N: usize>(ring: &QuotientRing, rows: &[[&str; N]; N]) -> Matrix<QElement> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| ring.embed(&parse_poly(ring.vars(), s).unwrap()).unwrap()).collect())
            .collect(),
    )
}

fn torus_pair() -> Outcome {
    let start = Instant::now();
    let d112 = torus("1.12");
    let d113 = torus("1.13bar");
    let ring = QuotientRing::g(1);
    let plain = LaurentRing { vars: ring.vars().clone() };
    for (d, reference, s_text, size) in
        [(&d112, reference_matrix(&ring, &M_112), S_112, 4), (&d113, reference_matrix(&ring, &M_113BAR), S_113BAR, 5)]
    {
        let m = build_m(d, &parity(d));
        ensure(m.matrix.rows() == size, format!("{}: matrix is {}x{}", d.name(), m.matrix.rows(), m.matrix.cols()))?;
        for i in 0..size {
            for j in 0..size {
                ensure(
                    m.matrix.get(i, j) == reference.get(i, j),
                    format!(
                        "{}: entry ({},{}) is {} but reference {}",
                        d.name(),
                        i + 1,
                        j + 1,
                        ring.render(m.matrix.get(i, j)),
                        ring.render(reference.get(i, j))
                    ),
                )?;
            }
        }
        // the reference polynomial is the determinant of the reference matrix
        let expected = parse_poly(ring.vars(), s_text).unwrap();
        let laurent = reference.map(|e| ring.representative(e).0);
        ensure(cofactor_det(&plain, &laurent) == expected, format!("{}: reference det mismatch", d.name()))?;
        let s = s_invariant(d);
        let (canon, _) = ring.normalize_units(&ring.embed(&expected).unwrap());
        ensure(s.canonical == canon, format!("{}: s = {} differs from the reference value", d.name(), s.render()))?;
    }
    let verdict = compare(&s_invariant(&d112), &s_invariant(&d113)).unwrap();
    ensure(verdict == Verdict::Distinct, format!("compare gave {verdict:?}"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), format!("took {took:?}"))?;
    Ok(format!("both matrices entry-for-entry, both polynomials exact, Distinct, {took:.2?}"))
}

fn fixture_parity() -> Outcome {
    for name in ["1.12", "1.13bar"] {
        let d = torus(name);
        let p = parity(&d);
        ensure(p.values().all(|&x| x == Parity::Even), format!("{name}: {p:?}"))?;
    }
    Ok("all crossings of 1.12 and 1.13bar are even".into())
}

fn summarize(r: &VerifyReport) -> String {
    let total: usize = r.checked.values().sum();
    let kinds: Vec<String> = r.checked.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!(
        "{} trials, {} moves checked [{}], {} empty-matrix boundary events",
        r.trials,
        total,
        kinds.join(" "),
        r.boundary_events.len()
    )
}

fn suite(which: Which, seed: u64, limit: Duration) -> (VerifyReport, Outcome) {
    let cfg = VerifyConfig { trials: 500, max_crossings: 8, max_genus: 2, seed, which, insertions: 2 };
    let start = Instant::now();
    let report = verify_invariance(&cfg);
    let took = start.elapsed();
    let outcome = if let Some(c) = report.counterexamples.first() {
        Err(format!(
            "{} counterexamples, first: {} {} -> {}: {}",
            report.counterexamples.len(),
            c.move_kind,
            c.before,
            c.after,
            c.detail
        ))
    } else if took > limit {
        Err(format!("took {took:?}"))
    } else {
        Ok(format!("{} in {took:.1?}", summarize(&report)))
    };
    (report, outcome)
}

fn axioms(reports: &[&VerifyReport]) -> Outcome {
    let mut cases = std::collections::BTreeMap::new();
    for r in reports {
        if let Some(v) = r.axiom_violations.first() {
            return Err(format!(
                "{} violations, first: {} {} ({})",
                r.axiom_violations.len(),
                v.move_kind,
                v.before,
                v.detail
            ));
        }
        for (k, n) in &r.r3_type_cases {
            *cases.entry(k.clone()).or_insert(0) += n;
        }
    }
    let seen: Vec<String> = cases.iter().map(|(k, n)| format!("({k}):{n}")).collect();
    ensure(cases.len() == 4, format!("only R3 type cases {} were exercised", seen.join(" ")))?;
    Ok(format!("no violations; R3 type cases {}", seen.join(" ")))
}

fn ring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for ring in [QuotientRing::g(1), QuotientRing::r_prime()] {
        for i in 0..1000 {
            let [a, b, c] = [0; 3].map(|_| ring.normalize(&random_raw(&mut rng, &ring, 4)).unwrap());
            let assoc = ring.mul(&ring.mul(&a, &b), &c) == ring.mul(&a, &ring.mul(&b, &c));
            let add_assoc = ring.add(&ring.add(&a, &b), &c) == ring.add(&a, &ring.add(&b, &c));
            let dist = ring.mul(&a, &ring.add(&b, &c)) == ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c));
            let comm = ring.mul(&a, &b) == ring.mul(&b, &a);
            ensure(assoc && add_assoc && dist && comm, format!("{} triple {i} fails", ring.kind()))?;
        }
    }
    let ring = QuotientRing::g(1);
    for i in 0..200 {
        let raw = random_raw(&mut rng, &ring, 6);
        let got = ring.normalize(&raw).unwrap();
        let (a, b) = ring.representative(&got);
        let (oa, ob) = rewrite_to_fixpoint(&to_sparse(&raw, ring.vars_with_q()));
        ensure(to_sparse(&b, ring.vars_with_q()) == ob, format!("q-part differs for sample {i}: {raw}"))?;
        ensure(
            in_hidden_ideal(&sub(&oa, &to_sparse(&a, ring.vars_with_q()))),
            format!("q-free part differs for sample {i}: {raw}"),
        )?;
    }
    Ok("1000 triples each in G and R'; 200 normal forms match the rewrite oracle".into())
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: &QuotientRing, n: usize) -> Matrix<QElement> {
    Matrix::from_rows(
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            ring.zero()
                        } else {
                            ring.normalize(&random_raw(rng, ring, 2)).unwrap()
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

fn determinants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let ring = QuotientRing::g(1);
    for k in 0..100 {
        let n = 1 + k % 6;
        let m = random_matrix(&mut rng, &ring, n);
        ensure(det(&ring, &m).unwrap() == cofactor_det(&ring, &m), format!("matrix {k} ({n}x{n}) disagrees"))?;
    }
    for n in 0..=8 {
        let id = Matrix::from_rows(
            (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()).collect(),
        );
        ensure(det(&ring, &id).unwrap() == ring.one(), format!("det of {n}x{n} identity"))?;
    }
    for k in 0..20 {
        let m = random_matrix(&mut rng, &ring, 5);
        let mut s = m.clone();
        let (a, b) = (k % 5, (k / 5 + 1 + k % 5) % 5);
        s.swap_rows(a, b);
        ensure(
            det(&ring, &s).unwrap() == ring.neg(&det(&ring, &m).unwrap()),
            format!("row swap {a}<->{b} on sample {k}"),
        )?;
    }
    Ok("100 random matrices (1x1..6x6) match cofactor expansion; identities 0..8; 20 row swaps".into())
}

fn sanity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut found = 0;
    while found < 200 {
        let n = rng.gen_range(1..=8);
        let d = parknot::moves::random::random_gauss(&mut rng, n);
        if parity(&d).values().any(|&p| p == Parity::Odd) {
            continue;
        }
        found += 1;
        ensure(s_invariant(&d).is_zero(), format!("s({d}) = {}", s_invariant(&d).render()))?;
    }
    ensure(nprime_invariant(&virtual_knot("trefoil")).is_zero(), "n'(trefoil) is not 0")?;
    let vt = nprime_invariant(&virtual_knot("vtrefoil"));
    ensure(vt.render() == "1", format!("n'(vtrefoil) = {}", vt.render()))?;
    let u = s_invariant(&parknot::parse_gauss("unknot:").unwrap());
    ensure(u.render() == "1", format!("s(unknot) = {}", u.render()))?;
    Ok("200 all-even genus-0 codes give s = 0; n'(trefoil) = 0; n'(vtrefoil) = 1; s(unknot) = 1".into())
}

fn main() -> ExitCode {
    let mut ok = true;
    let mut report = |n: u32, title: &str, r: Outcome| match &r {
        Ok(d) => println!("criterion {n} PASS  {title}: {d}"),
        Err(e) => {
            ok = false;
            println!("criterion {n} FAIL  {title}: {e}")
        }
    };
    report(1, "torus pair 1.12 vs 1.13bar", torus_pair());
    report(2, "fixture parity", fixture_parity());
    let (rs, out) = suite(Which::S, 2024, Duration::from_secs(300));
    report(3, "invariance of s", out);
    let (rn, out) = suite(Which::NPrime, 4202, Duration::from_secs(300));
    report(4, "invariance of n'", out);
    report(5, "parity and type axioms", axioms(&[&rs, &rn]));
    report(6, "ring correctness", ring_axioms());
    report(7, "determinant correctness", determinants());
    report(8, "analytic sanity", sanity());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
