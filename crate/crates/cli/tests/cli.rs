use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use kirillov::liecore::LieAlgebra;
use kirillov::RandomCfg;
use kirillov_cli::cache::{cfg_hash, Cache};
use kirillov_cli::select::{parse_type, AlgebraSpec, Realization};
use kirillov_cli::suites::{heart1_expected, run, Suite, SuiteConfig};
use serde_json::{json, Value};

fn kirillov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirillov"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn cache_files(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    v.sort();
    v
}

#[test]
fn info_examples() {
    for (ty, dim, exponents) in [
        ("A3", 15, json!([1, 2, 3])),
        ("G2", 14, json!([1, 5])),
        ("D4", 28, json!([1, 3, 3, 5])),
    ] {
        let out = kirillov(&["info", "--type", ty]);
        assert_eq!(out.status.code(), Some(0), "{ty}");
        let v = stdout_json(&out);
        assert_eq!(v["dim"], dim);
        assert_eq!(v["exponents"], exponents);
        assert_eq!(v["index_equals_rank"], true);
        assert_eq!(v["killing_nondegenerate"], true);
    }
    let out = kirillov(&[
        "info",
        "--type",
        "B",
        "--rank",
        "3",
        "--basis",
        "chevalley",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("dim 21"));
}

#[test]
fn orbit_examples() {
    let out = kirillov(&["orbit", "--type", "D4", "--partition", "5,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(
        (v["dim_z"].clone(), v["dim_d"].clone(), v["dim_n"].clone()),
        (json!(6), json!(3), json!(9))
    );
    assert_eq!(v["heart2"], false);

    let v = stdout_json(&kirillov(&["orbit", "--type", "A1", "--partition", "2"]));
    assert_eq!((v["dim_z"].clone(), v["ind_z"].clone()), (json!(1), json!(1)));

    let v = stdout_json(&kirillov(&["orbit", "--type", "A1", "--partition", "1,1"]));
    assert_eq!((v["dim_z"].clone(), v["ind_z"].clone()), (json!(3), json!(1)));
    assert_eq!(v["checks"]["heart"]["status"], "skipped");

    let v = stdout_json(&kirillov(&["orbit", "--type", "G2", "--search", "4"]));
    assert_eq!(v["grading"]["2"], 4);
    assert_eq!(v["dim_d"], 2);
}

#[test]
fn exit_codes() {
    for args in [
        vec!["info", "--type", "X9"],
        vec!["info", "--type", "A"],
        vec!["info", "--type", "E6", "--basis", "matrix"],
        vec!["orbit", "--type", "D4", "--partition", "4,3,1"],
        vec!["orbit", "--type", "A2", "--partition", "2,x"],
        vec!["orbit", "--type", "A2"],
        vec!["verify", "--suite", "nonsense"],
        vec!["verify", "--suite", "elashvili", "--rank", "2"],
        vec!["verify", "--suite", "rais", "--jobs", "0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(kirillov(&args).status.code(), Some(2), "{args:?}");
    }
    // an asserted check fails on this orbit
    let out = kirillov(&["verify", "--suite", "normaliser", "--type", "B4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("orbit/B4/matrix/5,3,1"));
    // the search cannot succeed: no orbit of G2 has a 3-dimensional centraliser
    let out = kirillov(&["orbit", "--type", "G2", "--search", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("orbit/G2/chevalley/dim z = 3"));

    assert_eq!(
        kirillov(&["verify", "--suite", "parabolic", "--type", "A2"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn suite_output_has_header_and_summary() {
    let out = kirillov(&[
        "verify",
        "--suite",
        "elashvili",
        "--type",
        "C2",
        "--seed",
        "7",
        "--trials",
        "2",
    ]);
    let ls = lines(&out);
    let h = &ls[0]["header"];
    assert_eq!(
        (h["seed"].clone(), h["trials"].clone(), h["coeff_bound"].clone()),
        (json!(7), json!(2), json!(1000))
    );
    assert_eq!(h["selector"], "C2/matrix");
    let summary = &ls.last().unwrap()["summary"];
    let items = &ls[1..ls.len() - 1];
    assert_eq!(summary["items"], items.len());
    let passes = items.iter().filter(|i| i["status"] == "pass").count();
    assert_eq!(summary["pass"], passes);
    // every orbit of sp_4, in a fixed order
    let keys: Vec<&str> = items.iter().map(|i| i["key"].as_str().unwrap()).collect();
    assert_eq!(
        keys,
        [
            "orbit/C2/matrix/4",
            "orbit/C2/matrix/2,2",
            "orbit/C2/matrix/2,1,1",
            "orbit/C2/matrix/1,1,1,1"
        ]
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let c = cache.to_str().unwrap();
    let args = ["verify", "--suite", "structure", "--type", "B3", "--cache-dir", c];
    let fresh = kirillov(&args);
    assert_eq!(fresh.status.code(), Some(0));
    let files = cache_files(&cache);
    assert_eq!(files.len(), 7, "{files:?}");

    // hit: same bytes, same files
    let hit = kirillov(&args);
    assert_eq!(hit.stdout, fresh.stdout);
    assert_eq!(cache_files(&cache), files);
    // same bytes as a run without any cache
    let uncached = kirillov(&["verify", "--suite", "structure", "--type", "B3"]);
    assert_eq!(uncached.stdout, fresh.stdout);

    // corrupt entry: warned, recomputed, overwritten
    let victim = cache.join(&files[0]);
    let original = fs::read(&victim).unwrap();
    fs::write(&victim, b"{ not json").unwrap();
    let repaired = kirillov(&args);
    assert!(String::from_utf8_lossy(&repaired.stderr).contains("corrupt cache entry"));
    assert_eq!(repaired.stdout, fresh.stdout);
    assert_eq!(fs::read(&victim).unwrap(), original);

    // a different coefficient bound misses
    let other = kirillov(&[
        "verify",
        "--suite",
        "structure",
        "--type",
        "B3",
        "--coeff-bound",
        "999",
        "--cache-dir",
        c,
    ]);
    assert_eq!(other.status.code(), Some(0));
    assert_eq!(cache_files(&cache).len(), 14);

    // deleted directory: full recompute, same bytes
    fs::remove_dir_all(&cache).unwrap();
    let again = kirillov(&args);
    assert_eq!(again.stdout, fresh.stdout);
    assert_eq!(cache_files(&cache), files);
    assert!(!cache_files(&cache).iter().any(|f| f.starts_with(".tmp")));
}

#[test]
fn output_independent_of_workers() {
    let one = kirillov(&["verify", "--suite", "normaliser", "--type", "C3", "--jobs", "1"]);
    let three = kirillov(&["verify", "--suite", "normaliser", "--type", "C3", "--jobs", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    let other_seed = kirillov(&["verify", "--suite", "normaliser", "--type", "C3", "--seed", "5"]);
    assert_ne!(other_seed.stdout, one.stdout);
}

#[test]
fn table_format() {
    let out = kirillov(&["verify", "--suite", "rais", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite rais  seed 20020801"));
    assert!(text.contains("stabilizer/C2-borel"));
    assert!(text.trim_end().ends_with("parity violations 0/10"));
}

#[test]
fn export_round_trips() {
    let out = kirillov(&["algebra", "export", "--type", "G2"]);
    assert_eq!(out.status.code(), Some(0));
    let l = LieAlgebra::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(l.dim(), 14);
    assert!(l.validate());
}

#[test]
fn selectors() {
    assert_eq!(parse_type("D4", None).unwrap().to_string(), "D4");
    assert_eq!(parse_type("c", Some(3)).unwrap().to_string(), "C3");
    assert!(parse_type("D4", Some(4)).is_err());
    assert!(parse_type("D", None).is_err());
    assert!(AlgebraSpec::new("F4".parse().unwrap(), Realization::Matrix).is_err());
    assert_eq!(AlgebraSpec::natural("F4".parse().unwrap()).to_string(), "F4/chevalley");

    assert!(heart1_expected("B4", Some("5,3,1")));
    assert!(heart1_expected("D4", Some("3,3,1,1")));
    assert!(!heart1_expected("D4", Some("5,3")));
    assert!(!heart1_expected("G2", None));
}

#[test]
fn cfg_hash_tracks_every_field() {
    let base = RandomCfg::default();
    let h = cfg_hash(&base);
    assert_eq!(h, cfg_hash(&RandomCfg::default()));
    for other in [
        RandomCfg {
            seed: 1,
            ..base.clone()
        },
        RandomCfg {
            trials: 4,
            ..base.clone()
        },
        RandomCfg {
            coeff_bound: 999,
            ..base.clone()
        },
        RandomCfg {
            certify: true,
            ..base.clone()
        },
    ] {
        assert_ne!(cfg_hash(&other), h);
    }
}

#[test]
fn in_process_matches_selection() {
    let mut cfg = SuiteConfig::new(Suite::Frobenius, RandomCfg::default());
    cfg.max_rank = Some(2);
    let r = run(&cfg, &Cache::in_memory()).unwrap();
    let keys: Vec<&str> = r.items.iter().map(|i| i.key.as_str()).collect();
    assert_eq!(
        keys,
        [
            "orbit/A2/chevalley/regular",
            "orbit/B2/chevalley/regular",
            "orbit/G2/chevalley/regular"
        ]
    );
    assert_eq!(r.exit_code(), 0);
    assert!(r.items.iter().all(|i| i.detail["ind_n"] == 0));
}
