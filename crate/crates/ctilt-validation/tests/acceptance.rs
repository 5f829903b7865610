//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! when any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use ctilt_core::classify::{classify, verify_table_row, Classification, RowStatus};
use ctilt_core::fixtures;
use ctilt_core::invariants::{associated_polynomial, asymmetry, normalize_text};
use ctilt_core::linalg::{mat_mul_int, transpose};
use ctilt_core::mutation_class::DynkinType;
use ctilt_core::relations::synthesize;
use ctilt_core::tilting::{build_mutation_complex, Algebra, Verdict};
use ctilt_core::Quiver;

const TYPES: [DynkinType; 3] = [DynkinType::E6, DynkinType::E7, DynkinType::E8];

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome { pass, summary: summary.into(), details: Vec::new() }
    }
}

fn criterion_1(cs: &[(Classification, f64)]) -> Outcome {
    let expected = [(67, Some(21)), (416, None), (1574, None)];
    let mut pass = true;
    let mut parts = Vec::new();
    for ((c, secs), (members, orbits)) in cs.iter().zip(expected) {
        let ok = c.class.len() == members && orbits.is_none_or(|o| c.class.orbits().len() == o);
        pass &= ok;
        parts.push(format!(
            "{} {} members / {} orbits (classified in {secs:.1}s)",
            c.dynkin,
            c.class.len(),
            c.class.orbits().len()
        ));
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion_2(e6: &Classification) -> Outcome {
    let fx = fixtures::e6_cartans().expect("E6 fixtures parse");
    let mut details = Vec::new();
    let mut orbits = std::collections::BTreeSet::new();
    for f in &fx {
        match e6.labels.get(&f.label) {
            None => details.push(format!("{}: no member reproduces the printed matrix", f.label)),
            Some(found) => {
                for m in found {
                    orbits.insert(e6.class.orbit_of(m.member));
                    if Algebra::new(&m.quiver).map(|a| a.cartan) != Ok(f.cartan.clone()) {
                        details.push(format!("{}: relabeled quiver {} disagrees", f.label, m.quiver));
                    }
                }
            }
        }
    }
    if orbits.len() != 21 {
        details.push(format!("fixtures cover {} orbits instead of 21", orbits.len()));
    }
    let mut o = Outcome::new(
        details.is_empty() && fx.len() == 21,
        format!("{} printed matrices, {} matched, {} orbits covered", fx.len(), fx.len() - details.len().min(fx.len()), orbits.len()),
    );
    o.details = details;
    o
}

fn criterion_3() -> Outcome {
    let parse = |s: &str| Quiver::parse_tuples(s, None).expect("valid tuples");
    let q = parse("(1,2), (2,3), (4,3), (5,4), (6,3)");
    let q1 = parse("(2,1), (1,3), (3,2), (4,3), (5,4), (6,3)");
    let q2 = parse("(2,3), (3,1), (3,4), (3,6), (4,2), (6,2), (5,4)");
    let c = vec![
        vec![1, 1, 1, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![0, 0, 1, 1, 0, 0],
        vec![0, 0, 1, 1, 1, 0],
        vec![0, 0, 1, 0, 0, 1],
    ];
    let c1 = vec![
        vec![1, 0, 1, 0, 0, 0],
        vec![1, 1, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![0, 1, 1, 1, 0, 0],
        vec![0, 1, 1, 1, 1, 0],
        vec![0, 1, 1, 0, 0, 1],
    ];
    let c2 = vec![
        vec![1, 0, 0, 0, 0, 0],
        vec![1, 1, 1, 0, 0, 0],
        vec![1, 1, 1, 1, 0, 1],
        vec![0, 1, 0, 1, 0, 0],
        vec![0, 1, 0, 1, 1, 0],
        vec![0, 1, 0, 0, 0, 1],
    ];
    let mut details = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            details.push(what.to_string());
        }
    };
    check(q.mutate(1).ok() == Some(q1.clone()), "mu_2(Q) differs from Q'");
    check(q1.mutate(2).ok() == Some(q2.clone()), "mu_3(Q') differs from Q''");
    let cartan = |x: &Quiver| Algebra::new(x).map(|a| a.cartan).ok();
    check(cartan(&q) == Some(c), "Cartan matrix of Q");
    check(cartan(&q1) == Some(c1.clone()), "Cartan matrix of Q'");
    check(cartan(&q2) == Some(c2.clone()), "Cartan matrix of Q''");
    let counts = |x: &Quiver| synthesize(x).map(|r| (r.zeros.len(), r.comms.len())).ok();
    check(counts(&q1) == Some((3, 0)), "relations of Q': expected 3 zero relations");
    check(counts(&q2) == Some((4, 1)), "relations of Q'': expected 4 zero and 1 commutativity relation");
    let mut p: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| i64::from(i == j)).collect()).collect();
    p[2] = vec![1, 0, -1, 1, 0, 1];
    check(mat_mul_int(&mat_mul_int(&p, &c1), &transpose(&p)) == c2, "P C' P^T differs from C''");
    let built = Algebra::new(&q1).and_then(|a| build_mutation_complex(&a, 2)).map(|t| t.p_matrix).ok();
    check(built == Some(p), "K0 matrix of T^(3) over Q'");
    let mut o = Outcome::new(details.is_empty(), "quivers, Cartan matrices C, C', C'', relation counts, P C' P^T = C''");
    o.details = details;
    o
}

fn criterion_4(cs: &[(Classification, f64)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (c, _) in cs {
        let table = fixtures::class_table(c.dynkin).expect("class table parses");
        let expected: BTreeMap<String, usize> = table.iter().map(|r| (r.polynomial.clone(), r.count)).collect();
        let got: BTreeMap<String, usize> =
            c.groups.iter().map(|g| (normalize_text(&g.polynomial), g.members.len())).collect();
        let ok = expected == got && table.len() == expected.len();
        pass &= ok;
        parts.push(format!("{} {} classes", c.dynkin, got.len()));
        if !ok {
            for (p, n) in &expected {
                if got.get(p) != Some(n) {
                    details.push(format!("{}: {p} expected {n}, got {:?}", c.dynkin, got.get(p)));
                }
            }
            for p in got.keys().filter(|p| !expected.contains_key(*p)) {
                details.push(format!("{}: unexpected polynomial {p}", c.dynkin));
            }
        }
    }
    let mut o = Outcome::new(pass, parts.join(", "));
    o.details = details;
    o
}

fn criterion_5(cs: &[(Classification, f64)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (c, _) in cs {
        let rows = fixtures::good_mutation_rows(c.dynkin).expect("rows parse");
        let mut counts = [0usize; 3];
        for row in &rows {
            let check = match verify_table_row(&c.class, &c.labels, row) {
                Ok(check) => check,
                Err(e) => {
                    counts[2] += 1;
                    details.push(format!("{} {}: error {e}", c.dynkin, row.describe()));
                    continue;
                }
            };
            match check.status {
                RowStatus::Verified => counts[0] += 1,
                RowStatus::Unverifiable => {
                    counts[1] += 1;
                    details.push(format!("{} {}: unverifiable ({})", c.dynkin, check.row, check.detail));
                }
                RowStatus::Failed => {
                    counts[2] += 1;
                    details.push(format!("{} {}: FAILED ({})", c.dynkin, check.row, check.detail));
                }
            }
        }
        for l in &c.labels.unmatched {
            details.push(format!("{} label {l}: reference quiver is not a member of the class", c.dynkin));
        }
        pass &= counts[1] == 0 && counts[2] == 0 && c.labels.unmatched.is_empty();
        parts.push(format!(
            "{} {}/{} verified, {} unverifiable, {} failed, {} unmatched labels",
            c.dynkin,
            counts[0],
            rows.len(),
            counts[1],
            counts[2],
            c.labels.unmatched.len()
        ));
    }
    let mut o = Outcome::new(pass, parts.join("; "));
    o.details = details;
    o
}

fn criterion_6(cs: &[(Classification, f64)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for ((c, _), expected) in cs.iter().zip([6, 14, 15]) {
        let t = &c.theorem;
        let ok = t.pass && t.components == expected && t.polynomial_groups == expected;
        pass &= ok;
        parts.push(format!("{} {} = {} components", c.dynkin, t.polynomial_groups, t.components));
        for g in &t.split_groups {
            details.push(format!("{}: group {g} splits into several components", c.dynkin));
        }
        for e in &t.crossing_edges {
            details.push(format!("{}: good edge {e:?} joins different polynomials", c.dynkin));
        }
    }
    let mut o = Outcome::new(pass, parts.join(", "));
    o.details = details;
    o
}

fn criterion_7(cs: &[(Classification, f64)]) -> Outcome {
    let mut violations: BTreeMap<&str, usize> = BTreeMap::new();
    let mut details = Vec::new();
    let mut algebras = 0;
    let mut pairs = 0;
    for (c, _) in cs {
        for (m, q) in c.class.members.iter().enumerate() {
            algebras += 1;
            let cartan = &c.data[m].cartan;
            let poly = &c.data[m].polynomial;
            let mut flag = |name: &'static str, bad: bool, what: String| {
                if bad {
                    *violations.entry(name).or_default() += 1;
                    if details.len() < 20 {
                        details.push(format!("{name}: {} member {m} {what}", c.dynkin));
                    }
                }
            };
            for k in 0..q.n() {
                flag("involution", q.mutate(k).and_then(|x| x.mutate(k)).ok().as_ref() != Some(q), format!("vertex {}", k + 1));
            }
            let entries_ok = cartan.iter().enumerate().all(|(i, r)| {
                r.iter().enumerate().all(|(j, &x)| if i == j { x == 1 } else { x == 0 || x == 1 })
            });
            flag("cartan_entries", !entries_ok, format!("{cartan:?}"));
            flag("asymmetry_integral", !asymmetry(cartan).map(|s| s.integral).unwrap_or(false), String::new());
            let poly_of = |x: &Quiver| {
                Algebra::new(x).and_then(|a| associated_polynomial(&a.cartan)).map(|p| p.normalized()).ok()
            };
            flag("polynomial_opposite", poly_of(&q.opposite()).as_ref() != Some(poly), String::new());
            for k in 0..q.n() {
                if q.is_sink(k) || q.is_source(k) {
                    let r = q.reflect(k).ok();
                    flag(
                        "polynomial_reflection",
                        r.and_then(|r| poly_of(&r)).as_ref() != Some(poly),
                        format!("vertex {}", k + 1),
                    );
                }
            }
        }
        for e in &c.scan {
            pairs += 1;
            if e.happel_violations > 0 {
                *violations.entry("happel").or_default() += 1;
                details.push(format!("happel: {} member {} vertex {}", c.dynkin, e.member, e.vertex + 1));
            }
            if e.verdict.is_good() && e.polynomial_preserved != Some(true) {
                *violations.entry("good_mutation_polynomial").or_default() += 1;
                details.push(format!("polynomial changed: {} member {} vertex {}", c.dynkin, e.member, e.vertex + 1));
            }
        }
    }
    let total: usize = violations.values().sum();
    let mut o = Outcome::new(
        total == 0,
        format!(
            "{algebras} algebras, {pairs} (algebra, vertex) candidates: {total} violations{}",
            if total == 0 { String::new() } else { format!(" {violations:?}") }
        ),
    );
    o.details = details;
    o
}

fn criterion_8(e6: &Classification) -> Outcome {
    let not_tilting = e6.scan.iter().filter(|e| matches!(e.verdict, Verdict::NotTilting { .. })).count();
    let not_cluster =
        e6.scan.iter().filter(|e| matches!(e.verdict, Verdict::TiltingButNotClusterTilted { .. })).count();
    let good = e6.scan.iter().filter(|e| e.verdict.is_good()).count();
    Outcome::new(
        not_tilting + not_cluster > 0 && not_tilting > 0 && not_cluster > 0,
        format!("E6 scan: {good} good, {not_tilting} not tilting, {not_cluster} tilting but not cluster-tilted"),
    )
}

fn main() -> ExitCode {
    let mut cs = Vec::new();
    for t in TYPES {
        let start = Instant::now();
        match classify(t, 10_000) {
            Ok(c) => cs.push((c, start.elapsed().as_secs_f64())),
            Err(e) => {
                println!("classification of {t} failed: {e}");
                return ExitCode::FAILURE;
            }
        }
    }
    let outcomes = [
        ("enumeration counts", criterion_1(&cs)),
        ("E6 Cartan fixtures", criterion_2(&cs[0].0)),
        ("worked example chain", criterion_3()),
        ("polynomial class tables", criterion_4(&cs)),
        ("good-mutation table rows", criterion_5(&cs)),
        ("theorem check", criterion_6(&cs)),
        ("property suites", criterion_7(&cs)),
        ("negative control", criterion_8(&cs[0].0)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in outcomes.iter().enumerate() {
        println!("criterion {} [{}] {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.summary);
        for d in &o.details {
            println!("    {d}");
        }
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
