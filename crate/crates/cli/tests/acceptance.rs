//! Acceptance gate: prints one PASS/FAIL line per criterion.
//!
//! Criterion 5 is known not to hold as stated (one orbit of so_9 lacks the double
//! centraliser bracket condition). Its line prints FAIL; the test asserts that the
//! failure is exactly that orbit, so any other change in either direction is caught.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use kirillov::construct::{admissible_partitions, ClassicalType};
use kirillov::nilanalysis::Status;
use kirillov::RandomCfg;
use kirillov_cli::cache::Cache;
use kirillov_cli::output::suite_json;
use kirillov_cli::suites::{run, Item, Suite, SuiteConfig, SuiteResult};
use serde_json::Value;

const BUDGET_REDUCTIVE: Duration = Duration::from_secs(60);
const BUDGET_ELASHVILI: Duration = Duration::from_secs(180);
const BUDGET_FROBENIUS: Duration = Duration::from_secs(60);

/// Criteria that do not hold, with the exact items that fail them.
const KNOWN_FAILURES: &[(usize, &[&str])] = &[(5, &["orbit/B4/matrix/5,3,1"])];

const ORBIT_TYPES: [&str; 11] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"];

struct Outcome {
    id: usize,
    name: &'static str,
    pass: bool,
    detail: String,
    failing: Vec<String>,
}

fn emit(o: &Outcome) {
    // written past the test harness capture so the lines always show
    let line = format!(
        "criterion {} {} {}: {}\n",
        o.id,
        if o.pass { "PASS" } else { "FAIL" },
        o.name,
        o.detail
    );
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
}

fn timed(suite: Suite, cfg: &RandomCfg, cache: &Cache) -> (SuiteResult, Duration) {
    let start = Instant::now();
    let r = run(&SuiteConfig::new(suite, cfg.clone()), cache).unwrap();
    (r, start.elapsed())
}

fn failing(items: &[&Item]) -> Vec<String> {
    items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.key.clone())
        .collect()
}

fn expected_orbit_keys() -> BTreeSet<String> {
    let mut keys = BTreeSet::new();
    for t in ORBIT_TYPES {
        let ty: ClassicalType = t.parse().unwrap();
        for p in admissible_partitions(ty) {
            keys.insert(format!("orbit/{t}/matrix/{p}"));
        }
    }
    keys
}

fn partition_items(r: &SuiteResult) -> Vec<&Item> {
    r.items.iter().filter(|i| i.key.contains("/matrix/")).collect()
}

fn criterion_1(cache: &Cache) -> Outcome {
    let cfg = RandomCfg {
        certify: true,
        ..RandomCfg::default()
    };
    let (r, t) = timed(Suite::ReductiveIndex, &cfg, cache);
    let items: Vec<&Item> = r.items.iter().collect();
    let certified = r
        .items
        .iter()
        .filter(|i| i.detail["dim"].as_u64().unwrap() > 64 || i.detail["index"]["method"] == "certified")
        .count();
    Outcome {
        id: 1,
        name: "reductive index identity",
        pass: failing(&items).is_empty() && r.items.len() == 14 && certified == 14 && t < BUDGET_REDUCTIVE,
        detail: format!(
            "{}/14 algebras with ind = rk, {certified} certified, {t:.1?}",
            r.summary.pass
        ),
        failing: failing(&items),
    }
}

fn criterion_2(r: &SuiteResult, t: Duration) -> Outcome {
    let items = partition_items(r);
    let keys: BTreeSet<String> = items.iter().map(|i| i.key.clone()).collect();
    let exact = items.iter().filter(|i| i.status == Status::Pass).count();
    let covered = keys == expected_orbit_keys();
    Outcome {
        id: 2,
        name: "centraliser index equals rank",
        pass: covered && exact == items.len() && t < BUDGET_ELASHVILI,
        detail: format!(
            "{exact}/{} orbits exact, coverage complete {covered}, {t:.1?}",
            items.len()
        ),
        failing: failing(&items),
    }
}

fn criterion_3(r: &SuiteResult) -> Outcome {
    let items = partition_items(r);
    let keys = ["grading", "prop21", "thm23", "thm24", "prop26"];
    let bad: Vec<String> = items
        .iter()
        .filter(|i| {
            let zero = i.status == Status::Skipped;
            !zero && keys.iter().any(|k| i.detail["checks"][k] != "pass")
        })
        .map(|i| i.key.clone())
        .collect();
    let zero_orbits = items.iter().filter(|i| i.status == Status::Skipped).count();
    Outcome {
        id: 3,
        name: "graded structure of centralisers",
        pass: bad.is_empty() && zero_orbits == ORBIT_TYPES.len(),
        detail: format!(
            "{} nonzero orbits, {} with a failing structural check",
            items.len() - zero_orbits,
            bad.len()
        ),
        failing: bad,
    }
}

fn criterion_4(r: &SuiteResult) -> Outcome {
    let items: Vec<&Item> = r.items.iter().collect();
    let steinberg_bad: Vec<String> = items
        .iter()
        .filter(|i| !matches!(i.detail["checks"]["steinberg"].as_str(), Some("pass" | "skipped")))
        .map(|i| i.key.clone())
        .collect();
    let sub = r.items.iter().find(|i| i.key == "orbit/G2/chevalley/dim z = 4");
    let sub_ok = sub.is_some_and(|i| {
        let g = &i.detail["grading"];
        i.status == Status::Pass && g["2"] == 4 && g["4"] == 1 && i.detail["dim_d"] == 2
    });
    let mut bad = steinberg_bad.clone();
    if !sub_ok {
        bad.push("orbit/G2/chevalley/dim z = 4".into());
    }
    Outcome {
        id: 4,
        name: "abelian centraliser iff regular; G2 subregular",
        pass: bad.is_empty(),
        detail: format!(
            "biconditional on {} orbits ({} violations); G2 subregular dim g(2) = 4, dim g(4) = 1, dim d = 2: {sub_ok}",
            items.len(),
            steinberg_bad.len()
        ),
        failing: bad,
    }
}

fn criterion_5(r: &SuiteResult) -> Outcome {
    let items: Vec<&Item> = r.items.iter().collect();
    let bad = failing(&items);
    let d45 = r.items.iter().find(|i| i.key == "orbit/D4/matrix/5,3");
    let d45_ok = d45.is_some_and(|i| i.status == Status::Pass && i.detail["heart2"] == false);
    let holds = r
        .items
        .iter()
        .filter(|i| i.detail["heart1"] == true && i.status != Status::Skipped)
        .count();
    Outcome {
        id: 5,
        name: "normaliser bracket condition and index equalities",
        pass: bad.is_empty() && d45_ok,
        detail: format!(
            "bracket condition holds on {holds} orbits; D4 5,3 eigenvalue condition fails at (2, 2): {d45_ok}; failing: {}",
            if bad.is_empty() { "none".to_string() } else { bad.join(", ") }
        ),
        failing: bad,
    }
}

fn criterion_6(r: &SuiteResult, t: Duration) -> Outcome {
    let items: Vec<&Item> = r.items.iter().collect();
    let d4 = r.items.iter().find(|i| i.key == "orbit/D4/chevalley/regular");
    let rechoice = d4.is_some_and(|i| !i.detail["dmatrix"]["rechoice"].is_null());
    let min_points = r
        .items
        .iter()
        .map(|i| i.detail["dmatrix"]["law_points"].as_u64().unwrap_or(0))
        .min()
        .unwrap_or(0);
    Outcome {
        id: 6,
        name: "normaliser of a regular nilpotent is Frobenius",
        pass: failing(&items).is_empty() && r.items.len() == 7 && rechoice && min_points >= 5 && t < BUDGET_FROBENIUS,
        detail: format!(
            "{}/7 algebras, determinant law at >= {min_points} points, D4 re-choice present {rechoice}, {t:.1?}",
            r.summary.pass
        ),
        failing: failing(&items),
    }
}

fn count_prefix(r: &SuiteResult, prefix: &str) -> usize {
    r.items.iter().filter(|i| i.key.starts_with(prefix)).count()
}

fn criterion_7(parabolic: &SuiteResult, rais: &SuiteResult) -> Outcome {
    let items: Vec<&Item> = parabolic.items.iter().chain(&rais.items).collect();
    let counts = [
        count_prefix(parabolic, "parabolic/A3/"),
        count_prefix(parabolic, "parabolic/C2/"),
        count_prefix(parabolic, "borel/"),
        count_prefix(parabolic, "normaliser-pair/"),
        count_prefix(rais, "rais/"),
    ];
    let vinberg_ok = rais
        .items
        .iter()
        .filter(|i| i.key.starts_with("vinberg/"))
        .all(|i| i.detail["samples"].as_array().is_some_and(|s| s.len() > 5));
    let witness = rais.items.iter().find(|i| i.key == "stabilizer/C2-borel");
    let witness_ok = witness.is_some_and(|i| i.status == Status::Pass);
    Outcome {
        id: 7,
        name: "index inequalities and identities for representations",
        pass: failing(&items).is_empty()
            && counts == [8, 4, 5, 7, 7]
            && vinberg_ok
            && witness_ok,
        detail: format!(
            "parabolics A3 {} C2 {}, Borel sums {}, normaliser pairs {}, semidirect products {}, orbit-dimension samples ok {vinberg_ok}, abelian stabilizer witness {witness_ok}",
            counts[0], counts[1], counts[2], counts[3], counts[4]
        ),
        failing: failing(&items),
    }
}

fn criterion_8(results: &[&SuiteResult]) -> Outcome {
    let checked: usize = results.iter().map(|r| r.summary.parity_checked).sum();
    let violations: Vec<String> = results
        .iter()
        .flat_map(|r| r.items.iter())
        .filter(|i| i.parity_ok == Some(false))
        .map(|i| i.key.clone())
        .collect();
    Outcome {
        id: 8,
        name: "dim minus index is even",
        pass: violations.is_empty() && checked > 0,
        detail: format!("{checked} items with algebra indices, {} violations", violations.len()),
        failing: violations,
    }
}

fn verify_all(extra: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_kirillov"))
        .args(["verify", "--suite", "all", "--format", "json"])
        .args(extra)
        .output()
        .unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_9() -> Outcome {
    let (a, code_a) = verify_all(&["--jobs", "1"]);
    let (b, code_b) = verify_all(&[]);
    let header: Value = serde_json::from_str(std::str::from_utf8(&a).unwrap().lines().next().unwrap_or("{}")).unwrap();
    let seeded = header["header"]["seed"] == kirillov::rng::DEFAULT_SEED;
    // exit 1 is the known criterion 5 failure; anything else is an error
    let codes_ok = code_a == code_b && (code_a == 0 || code_a == 1);
    Outcome {
        id: 9,
        name: "deterministic suite output",
        pass: a == b && !a.is_empty() && seeded && codes_ok,
        detail: format!(
            "two runs (1 worker, default pool): {} bytes, identical {}, exit codes {code_a}/{code_b}",
            a.len(),
            a == b
        ),
        failing: Vec::new(),
    }
}

#[test]
fn acceptance() {
    let cfg = RandomCfg::default();
    let cache = Cache::in_memory();
    let mut outcomes = vec![criterion_1(&Cache::in_memory())];

    let (elashvili, t2) = timed(Suite::Elashvili, &cfg, &cache);
    let (structure, _) = timed(Suite::Structure, &cfg, &cache);
    let (normaliser, _) = timed(Suite::Normaliser, &cfg, &cache);
    let (frobenius, t6) = timed(Suite::Frobenius, &cfg, &cache);
    let (parabolic, _) = timed(Suite::Parabolic, &cfg, &cache);
    let (rais, _) = timed(Suite::Rais, &cfg, &cache);
    let (reductive, _) = timed(Suite::ReductiveIndex, &cfg, &cache);

    outcomes.push(criterion_2(&elashvili, t2));
    outcomes.push(criterion_3(&structure));
    outcomes.push(criterion_4(&structure));
    outcomes.push(criterion_5(&normaliser));
    outcomes.push(criterion_6(&frobenius, t6));
    outcomes.push(criterion_7(&parabolic, &rais));
    outcomes.push(criterion_8(&[
        &reductive,
        &elashvili,
        &structure,
        &normaliser,
        &frobenius,
        &parabolic,
        &rais,
    ]));
    outcomes.push(criterion_9());
    for o in &outcomes {
        emit(o);
    }

    // the in-process renderer is what the binary prints
    assert!(suite_json(&rais).starts_with("{\"header\":"));

    for o in &outcomes {
        match KNOWN_FAILURES.iter().find(|(id, _)| *id == o.id) {
            Some((_, expected)) => assert_eq!(
                o.failing, *expected,
                "criterion {} fails differently than recorded: {}",
                o.id, o.detail
            ),
            None => assert!(o.pass, "criterion {} failed: {} {:?}", o.id, o.detail, o.failing),
        }
    }
}
