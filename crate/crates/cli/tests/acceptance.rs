//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! measured time and limit; the process fails if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use neurocode::canonical_form;
use neurocode::code::{cc_family, cr_family, parse_code, Code};
use neurocode::graph::{ccg, gr_complex, grg};
use neurocode::ideal::{canonical_form_oracle, cf_cc_formula, cf_cr_formula, CanonicalForm};
use neurocode::sweep::{code_from_index, random_code, run_suite, Suite, SweepParams, SweepReport};

const SEED: u64 = 20240917;

type Outcome = Result<String, String>;

type EdgeSet = BTreeSet<(String, String)>;

/// Number, title, time limit and check.
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

/// A pseudo-monomial written as (positive factors, negated factors).
type Term = (Vec<usize>, Vec<usize>);

fn terms(cf: &CanonicalForm) -> BTreeSet<Term> {
    cf.elements()
        .iter()
        .map(|e| (bits(e.plus()), bits(e.minus())))
        .collect()
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn set(list: &[(&[usize], &[usize])]) -> BTreeSet<Term> {
    list.iter()
        .map(|(p, m)| {
            let (mut p, mut m) = (p.to_vec(), m.to_vec());
            p.sort();
            m.sort();
            (p, m)
        })
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep_summary(r: &SweepReport) -> Outcome {
    let parts: Vec<String> = r
        .checks
        .iter()
        .map(|c| match c.premises {
            Some(p) => format!(
                "{}: {} scanned, {} premises, {} violations",
                c.name, c.scanned, p, c.violations
            ),
            None => format!(
                "{}: {} scanned, {} violations",
                c.name, c.scanned, c.violations
            ),
        })
        .collect();
    let text = parts.join("; ");
    if r.passed() {
        Ok(text)
    } else {
        let cx: Vec<String> = r
            .checks
            .iter()
            .filter_map(|c| {
                c.counterexample
                    .as_ref()
                    .map(|x| format!("{} [{}]", x.command, x.detail))
            })
            .collect();
        Err(format!("{text}; first counterexamples: {}", cx.join(", ")))
    }
}

fn crit1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_neurocode"))
        .args(["--json", "cf", "{};{1,2};{2,3}"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let got: BTreeSet<Term> = report["outputs"]["cf"]["cf"]
        .as_array()
        .ok_or("no cf in report")?
        .iter()
        .map(|t| {
            let list = |k: &str| -> Vec<usize> {
                t[k].as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap() as usize)
                    .collect()
            };
            (list("plus"), list("minus"))
        })
        .collect();
    // x1(1−x2), x1x3, x3(1−x2), x2(1−x1)(1−x3)
    let want = set(&[(&[1], &[2]), (&[1, 3], &[]), (&[3], &[2]), (&[2], &[1, 3])]);
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("4 elements, exact set equality via the CLI".into())
}

fn crit2() -> Outcome {
    let cc: Vec<(usize, BTreeSet<Term>)> = vec![
        (3, set(&[(&[2], &[1])])),
        (4, set(&[(&[2], &[1]), (&[3], &[1]), (&[3], &[2])])),
        (
            5,
            set(&[
                (&[2], &[1]),
                (&[3], &[1]),
                (&[3], &[2]),
                (&[4], &[1]),
                (&[4], &[2]),
                (&[4], &[3]),
            ]),
        ),
        (
            6,
            set(&[
                (&[2], &[1]),
                (&[3], &[1]),
                (&[3], &[2]),
                (&[4], &[1]),
                (&[4], &[2]),
                (&[4], &[3]),
                (&[5], &[1]),
                (&[5], &[2]),
                (&[5], &[3]),
                (&[5], &[4]),
            ]),
        ),
    ];
    let cr: Vec<(usize, BTreeSet<Term>)> = vec![
        (3, set(&[(&[], &[3, 2, 1]), (&[3, 2, 1], &[])])),
        (
            4,
            set(&[(&[], &[4, 3, 2, 1]), (&[3, 1], &[]), (&[4, 2], &[])]),
        ),
        (
            5,
            set(&[
                (&[], &[5, 4, 3, 2, 1]),
                (&[3, 1], &[]),
                (&[4, 1], &[]),
                (&[4, 2], &[]),
                (&[5, 2], &[]),
                (&[5, 3], &[]),
            ]),
        ),
        (
            6,
            set(&[
                (&[], &[6, 5, 4, 3, 2, 1]),
                (&[3, 1], &[]),
                (&[4, 1], &[]),
                (&[4, 2], &[]),
                (&[6, 2], &[]),
                (&[6, 3], &[]),
                (&[6, 4], &[]),
                (&[5, 1], &[]),
                (&[5, 2], &[]),
                (&[5, 3], &[]),
            ]),
        ),
    ];
    for (m, want) in &cc {
        let got = terms(&canonical_form(&cc_family(*m).unwrap()));
        ensure(&got == want, || format!("CF(C_{m}) = {got:?}"))?;
    }
    for (k, want) in &cr {
        let got = terms(&canonical_form(&cr_family(*k).unwrap()));
        ensure(&got == want, || format!("CF(CR_{k}) = {got:?}"))?;
    }
    Ok("8 lists equal".into())
}

fn crit3() -> Outcome {
    for m in 3..=10 {
        let (f, c) = (
            cf_cc_formula(m).unwrap(),
            canonical_form(&cc_family(m).unwrap()),
        );
        ensure(f == c, || format!("cc m={m}: formula {f}, computed {c}"))?;
    }
    for k in 3..=10 {
        let (f, c) = (
            cf_cr_formula(k).unwrap(),
            canonical_form(&cr_family(k).unwrap()),
        );
        ensure(f == c, || format!("cr k={k}: formula {f}, computed {c}"))?;
    }
    Ok("m = 3..10 and k = 3..10 equal".into())
}

fn crit4() -> Outcome {
    let mut mismatches = Vec::new();
    for index in 1..256u64 {
        let c = code_from_index(3, index);
        if canonical_form(&c) != canonical_form_oracle(&c).unwrap() {
            mismatches.push(c.to_text());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..500 {
        let n = rng.random_range(4..=6);
        let c = random_code(&mut rng, n);
        if canonical_form(&c) != canonical_form_oracle(&c).unwrap() {
            mismatches.push(c.to_text());
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok("255 exhaustive + 500 random, 0 mismatches".into())
}

fn crit5() -> Outcome {
    let params = SweepParams {
        n: 6,
        samples: 200,
        seed: SEED,
        ..SweepParams::default()
    };
    let r = run_suite(Suite::CfTheorems, &params).map_err(|e| e.to_string())?;
    ensure(
        r.checks.len() == 5 && r.checks.iter().all(|c| c.scanned == 200),
        || "expected 5 x 200".into(),
    )?;
    sweep_summary(&r)
}

fn crit6() -> Outcome {
    let form = |text: &str, n: usize| CanonicalForm::parse(text, Some(n)).unwrap();
    let g = grg(&form("x1*x3, x2*x4", 4));
    let edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    let cycle: BTreeSet<(usize, usize)> = [(1, 2), (2, 3), (3, 4), (1, 4)].into_iter().collect();
    ensure(g.vertex_count() == 4 && edges == cycle, || {
        format!("grg {g:?}")
    })?;
    let facets = |text: &str, n: usize| -> BTreeSet<Vec<usize>> {
        gr_complex(&form(text, n))
            .facets()
            .iter()
            .map(|f| f.neurons())
            .collect()
    };
    let cases: [(&str, usize, Vec<Vec<usize>>); 3] = [
        ("x1*x2*x3, x1*x2", 3, vec![vec![1, 3], vec![2, 3]]),
        ("x1*x2, x1*x3", 3, vec![vec![1], vec![2, 3]]),
        ("x1*x2, x2*x4", 4, vec![vec![1, 3, 4], vec![2, 3]]),
    ];
    for (text, n, want) in cases {
        let got = facets(text, n);
        let want: BTreeSet<Vec<usize>> = want.into_iter().collect();
        ensure(got == want, || format!("GR({text}) facets {got:?}"))?;
    }
    Ok("4-cycle and 3 facet lists exact".into())
}

fn crit7() -> Outcome {
    for m in 3..=10 {
        let g = grg(&canonical_form(&cc_family(m).unwrap()));
        ensure(g.vertex_count() == m - 1 && g.edge_count() == 0, || {
            format!("G(C_{m}) = {g:?}")
        })?;
    }
    for k in 4..=10 {
        let g = grg(&canonical_form(&cr_family(k).unwrap()));
        ensure(
            g.vertex_count() == k && g.is_connected() && g.is_regular(2),
            || format!("G(CR_{k}) = {g:?}"),
        )?;
    }
    Ok("C_3..C_10 edgeless on m-1 vertices; CR_4..CR_10 connected 2-regular on k vertices".into())
}

fn label_edges(c: &Code) -> EdgeSet {
    let name = |w: &neurocode::Codeword| {
        if w.is_empty() {
            "0".to_string()
        } else {
            w.neurons().iter().map(|i| i.to_string()).collect()
        }
    };
    ccg(c)
        .edges()
        .iter()
        .map(|(u, v)| {
            let (a, b) = (name(u), name(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn pairs(list: &[(&str, &str)]) -> EdgeSet {
    list.iter()
        .map(|(a, b)| {
            if a < b {
                (a.to_string(), b.to_string())
            } else {
                (b.to_string(), a.to_string())
            }
        })
        .collect()
}

fn crit8() -> Outcome {
    // Expected edge lists; "0" is the empty word.
    let fixtures: Vec<(&str, &str, EdgeSet)> = vec![
        (
            "three-level code",
            "1;2;13;123",
            pairs(&[("1", "13"), ("2", "123"), ("1", "123"), ("13", "123")]),
        ),
        (
            "four words",
            "13;125;1235;1245",
            pairs(&[("13", "1235"), ("125", "1235"), ("125", "1245")]),
        ),
        (
            "with empty word",
            "{};1;2;123;4",
            pairs(&[
                ("2", "123"),
                ("1", "123"),
                ("0", "4"),
                ("1", "0"),
                ("2", "0"),
                ("0", "123"),
            ]),
        ),
        ("one edge", "1;12;3", pairs(&[("1", "12")])),
        (
            "chain with empty word",
            "{};1;123;1234",
            pairs(&[
                ("1", "0"),
                ("1", "123"),
                ("1", "1234"),
                ("123", "1234"),
                ("123", "0"),
                ("0", "1234"),
            ]),
        ),
        (
            "chain",
            "1;12;123",
            pairs(&[("123", "1"), ("123", "12"), ("1", "12")]),
        ),
        (
            "4-cycle",
            "1;2;123;124",
            pairs(&[("1", "124"), ("1", "123"), ("123", "2"), ("124", "2")]),
        ),
        (
            "CR_4",
            "1;2;3;4;12;23;34;14",
            pairs(&[
                ("2", "12"),
                ("1", "12"),
                ("1", "14"),
                ("4", "14"),
                ("3", "23"),
                ("3", "34"),
                ("4", "34"),
                ("2", "23"),
            ]),
        ),
    ];
    for (name, code, want) in &fixtures {
        let got = label_edges(&parse_code(code).unwrap());
        ensure(&got == want, || format!("{name}: got {got:?}"))?;
    }
    let c = parse_code("12;16;56;45;34;23;123;126;156;456;345;234").unwrap();
    let g = ccg(&c);
    ensure(g.is_regular(2), || format!("not 2-regular: {g:?}"))?;
    Ok(format!(
        "{} CCG edge sets exact; 12-word code 2-regular",
        fixtures.len()
    ))
}

fn exhaustive(suite: Suite) -> Outcome {
    let mut parts = Vec::new();
    for n in [3, 4] {
        let params = SweepParams {
            n,
            exhaustive: true,
            ..SweepParams::default()
        };
        let r = run_suite(suite, &params).map_err(|e| e.to_string())?;
        let expected = (1u64 << (1u64 << n)) - 1;
        ensure(r.checks[0].scanned == expected, || {
            format!("scanned {} codes", r.checks[0].scanned)
        })?;
        parts.push(format!("n={n} {}", sweep_summary(&r)?));
    }
    Ok(parts.join("; "))
}

fn crit11() -> Outcome {
    let params = SweepParams {
        n: 6,
        samples: 500,
        seed: SEED,
        ..SweepParams::default()
    };
    let a = run_suite(Suite::PreserveConnected, &params).map_err(|e| e.to_string())?;
    let b = run_suite(Suite::PreserveComplete, &params).map_err(|e| e.to_string())?;
    Ok(format!("{}; {}", sweep_summary(&a)?, sweep_summary(&b)?))
}

fn crit12() -> Outcome {
    let params = SweepParams {
        n: 5,
        ..SweepParams::default()
    };
    let r = run_suite(Suite::CompleteIso, &params).map_err(|e| e.to_string())?;
    // nonempty chains in the Boolean lattices on 1..=5 elements
    ensure(r.checks[0].scanned == 3 + 11 + 51 + 299 + 2163, || {
        format!("scanned {}", r.checks[0].scanned)
    })?;
    sweep_summary(&r)
}

fn crit13() -> Outcome {
    let params = SweepParams {
        max: 12,
        samples: 100,
        seed: SEED,
        ..SweepParams::default()
    };
    let r = run_suite(Suite::Realizations, &params).map_err(|e| e.to_string())?;
    let scanned = |name: &str| r.checks.iter().find(|c| c.name == name).map(|c| c.scanned);
    ensure(
        scanned("cc-intervals") == Some(11)
            && scanned("cr-segments") == Some(10)
            && scanned("interval-cf") == Some(100),
        || "unexpected sweep sizes".into(),
    )?;
    sweep_summary(&r)
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "CF fixture {};{1,2};{2,3}",
            Duration::from_secs(1),
            crit1,
        ),
        (
            2,
            "CF lists for C_3..C_6 and CR_3..CR_6",
            Duration::from_secs(1),
            crit2,
        ),
        (
            3,
            "closed-form CF formulas, m,k = 3..10",
            Duration::from_secs(30),
            crit3,
        ),
        (
            4,
            "incremental CF = vanishing oracle",
            Duration::from_secs(120),
            crit4,
        ),
        (
            5,
            "elementary-map CF theorems, 5 x 200 trials",
            Duration::from_secs(120),
            crit5,
        ),
        (
            6,
            "GRG and GR-complex fixtures",
            Duration::from_secs(1),
            crit6,
        ),
        (7, "GRG of C_m and CR_k", Duration::from_secs(10), crit7),
        (8, "CCG edge set fixtures", Duration::from_secs(1), crit8),
        (
            9,
            "2-regular parity, exhaustive n = 3, 4",
            Duration::from_secs(300),
            || exhaustive(Suite::Parity),
        ),
        (
            10,
            "union closure => diameter <= 2, exhaustive n = 3, 4",
            Duration::from_secs(300),
            || exhaustive(Suite::UnionClosure),
        ),
        (
            11,
            "morphisms preserve connected/complete, 500 pairs",
            Duration::from_secs(120),
            crit11,
        ),
        (
            12,
            "complete codes on <= 5 neurons are isomorphic to C_m",
            Duration::from_secs(120),
            crit12,
        ),
        (13, "exact realizations", Duration::from_secs(60), crit13),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {} {title} [{:.3}s, limit {}s, exact] {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 13 acceptance criteria passed");
}
