use std::process::Command;

use homalt::algebra::Identity;
use homalt::bimodule::{BimoduleAxiom, HomBimodule};
use homalt::cli::{fixtures, load, load_algebra, resolve_algebra, resolve_bimodule, run, save_algebra, save_bimodule, Loaded};
use homalt::error::Error;
use homalt::exactlin::{parse_rational, Vector};
use homalt::random::{hom_associative, regular_bimodule};
use serde_json::Value;

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (serde_json::from_str(&out.stdout).unwrap(), out.exit)
}

fn vector(v: &Value) -> Vector {
    v.as_array().unwrap().iter().map(|x| parse_rational(x.as_str().unwrap()).unwrap()).collect()
}

fn indices(v: &Value) -> Vec<usize> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect()
}

fn flag<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["flags"].as_array().unwrap().iter().find(|f| f["name"] == name).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("homalt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn documented_command_examples() {
    let out = run(&["check", "oct_alpha"]);
    assert_eq!(out.exit, 0);
    assert!(out.stdout.contains("✓ multiplicative"));
    assert!(out.stdout.contains("✓ left-hom-alternative"));
    assert!(out.stdout.contains("✓ right-hom-alternative"));
    assert!(out.stdout.contains("✗ hom-associative"));
    assert!(out.stdout.ends_with("exit 0\n"));

    let (r, exit) = json(&["derived", "a7_3"]);
    assert_eq!(exit, 0);
    assert_eq!(r["values"]["dims"], serde_json::json!([3, 1, 0]));
    assert_eq!(r["verdicts"][0]["value"], "SOLVABLE");

    let (r, exit) = json(&["iso", "oct_alpha", "oct_beta"]);
    assert_eq!(exit, 0);
    assert_eq!(r["verdicts"][0]["value"], "NOT_ISOMORPHIC");
    assert!(r["verdicts"][0]["certificate"].to_string().contains("char"));
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["check", "oct_beta"]).exit, 1);
    assert_eq!(run(&["simple", "a3p_3", "--expect", "yes"]).exit, 1);
    assert_eq!(run(&["simple", "a3p_3", "--expect", "no"]).exit, 0);
    assert_eq!(run(&["simple", "oct_alpha", "--expect", "yes"]).exit, 0);
    assert_eq!(run(&["iso", "oct_alpha", "oct_alpha"]).exit, 2);
    assert_eq!(run(&["iso", "oct_alpha", "oct_alpha", "--candidate", "oct_alpha"]).exit, 0);
    for bad in [
        vec!["frobnicate"],
        vec!["check"],
        vec!["check", "no_such_fixture"],
        vec!["check", "oct_alpha", "--seed", "x"],
        vec!["quotient", "a3p_3", "e1,0"],
        vec!["quotient", "a3p_3", "e1"],
        vec!["twist", "oct", "1,0;0,1"],
        vec!["bimodule-check", "regular:nope"],
    ] {
        let out = run(&bad);
        assert_eq!(out.exit, 3, "{bad:?}");
        assert!(out.stderr.starts_with("error: "), "{bad:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn reports_are_deterministic() {
    let commands: &[&[&str]] = &[
        &["check", "oct_beta"],
        &["derived", "oct_alpha"],
        &["solvable", "a7_3"],
        &["ideal-closure", "a3p_3", "e1"],
        &["simple", "a3p_3"],
        &["semisimple", "split2"],
        &["untwist", "oct_alpha"],
        &["twist", "oct", "oct_alpha"],
        &["directsum", "a7_3", "split2"],
        &["quotient", "a3p_3", "e1", "e3"],
        &["split", "split2"],
        &["iso", "a7_3", "a3p_3"],
        &["bimodule-check", "regular:a3p_3"],
        &["bimodule-untwist", "regular:oct_alpha"],
        &["bimodule-irreducible", "regular:a3p_3"],
        &["fixtures"],
    ];
    for args in commands {
        for seed in ["0", "17"] {
            let mut full = vec!["--seed", seed];
            full.extend_from_slice(args);
            let first = run(&full);
            assert_ne!(first.exit, 3, "{args:?}: {}", first.stderr);
            assert_eq!(first, run(&full), "{args:?}");
            full.insert(0, "--json");
            let j = run(&full);
            assert_eq!(j, run(&full), "{args:?}");
            let parsed: Value = serde_json::from_str(&j.stdout).unwrap();
            assert_eq!(parsed["exit"], j.exit);
            assert_eq!(j.exit, first.exit);
        }
    }
}

#[test]
fn identity_witnesses_replay() {
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let (r, _) = json(&["check", name]);
        for id in Identity::ALL {
            let f = flag(&r, id.name());
            assert_eq!(f["holds"].as_bool().unwrap(), alg.check_identities().get(id).holds(), "{name}");
            if f["holds"] == false {
                let w = &f["witness"];
                let defect = alg.identity_defect(id, &indices(&w["indices"])).unwrap();
                assert_eq!(defect, vector(&w["defect"]), "{name} {id:?}");
                assert!(defect.iter().any(|x| x != &parse_rational("0").unwrap()));
            }
        }
    }
}

#[test]
fn bimodule_witnesses_replay() {
    let good = HomBimodule::regular(&fixtures::a3p_3());
    let mut left = good.left_constants().to_vec();
    left[(1 * 3 + 1) * 3 + 1] += parse_rational("1/2").unwrap();
    let bad = HomBimodule::new("bad", good.base().clone(), good.twist().clone(), left, good.right_constants().to_vec()).unwrap();
    let path = tmp("bad_bimodule.json");
    std::fs::write(&path, save_bimodule(&bad)).unwrap();
    let (r, exit) = json(&["bimodule-check", path.to_str().unwrap()]);
    assert_eq!(exit, 1);
    let mut failures = 0;
    for axiom in BimoduleAxiom::ALL {
        let f = flag(&r, axiom.name());
        if f["holds"] == false {
            failures += 1;
            let w = &f["witness"];
            assert_eq!(bad.witness_defect(axiom, &indices(&w["indices"])).unwrap(), vector(&w["defect"]));
        }
    }
    assert!(failures > 0);
}

#[test]
fn random_documents_round_trip() {
    for seed in 0..20u64 {
        let alg = hom_associative(seed, 1 + (seed as usize) % 5, seed % 2 == 0);
        let text = save_algebra(&alg);
        assert_eq!(load_algebra(&text).unwrap(), alg);
        assert_eq!(save_algebra(&load_algebra(&text).unwrap()), text);
        let bim = regular_bimodule(seed, 2, seed % 3 == 0);
        match load(&save_bimodule(&bim), &resolve_algebra).unwrap() {
            Loaded::Bimodule(b) => assert_eq!(b, bim),
            Loaded::Algebra(_) => panic!("bimodule document loaded as algebra"),
        }
    }
}

#[test]
fn malformed_documents_are_input_errors() {
    let good = fixtures::document_text("a7_3").unwrap();
    let bad = good.replacen("\"1\"", "\"1/0\"", 1);
    assert_ne!(bad, good);
    let err = load_algebra(&bad).unwrap_err();
    assert!(matches!(err, Error::Parse { .. }), "{err:?}");
    assert!(err.to_string().contains("1/0"));
    let path = tmp("zero_denominator.json");
    std::fs::write(&path, &bad).unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.exit, 3);
    assert!(out.stderr.contains("1/0"));

    let out_of_range = good.replacen("[0, 0,", "[7, 0,", 1);
    if out_of_range != good {
        assert!(load_algebra(&out_of_range).is_err());
    }
}

#[test]
fn out_flag_writes_loadable_documents() {
    let path = tmp("induced.json");
    let out = run(&["untwist", "oct_alpha", "--out", path.to_str().unwrap()]);
    assert_eq!(out.exit, 0);
    let induced = resolve_algebra(path.to_str().unwrap()).unwrap();
    assert!(induced.twist().is_identity());
    assert_eq!(induced.product_constants(), fixtures::oct().product_constants());

    let back = tmp("retwisted.json");
    let out = run(&["twist", path.to_str().unwrap(), "oct_alpha", "--out", back.to_str().unwrap()]);
    assert_eq!(out.exit, 0, "{}", out.stderr);
    let twisted = resolve_algebra(back.to_str().unwrap()).unwrap();
    assert_eq!(twisted.product_constants(), fixtures::oct_alpha().product_constants());

    let bpath = tmp("plain_module.json");
    let out = run(&["bimodule-untwist", "regular:oct_alpha", "--out", bpath.to_str().unwrap()]);
    assert_eq!(out.exit, 0);
    let plain = resolve_bimodule(bpath.to_str().unwrap()).unwrap();
    assert!(plain.twist().is_identity());
}

#[test]
fn input_digests_are_document_hashes() {
    let (r, _) = json(&["check", "a7_3"]);
    let digest = r["inputs"][0]["sha256"].as_str().unwrap();
    let canonical = save_algebra(&fixtures::a7_3());
    let (again, _) = json(&["check", "a7_3", "--seed", "5"]);
    assert_eq!(again["inputs"][0]["sha256"], digest);
    let path = tmp("a7_3.json");
    std::fs::write(&path, &canonical).unwrap();
    let (from_file, _) = json(&["check", path.to_str().unwrap()]);
    assert_eq!(from_file["inputs"][0]["sha256"], digest);
}

#[test]
fn timing_is_opt_in() {
    let (r, _) = json(&["check", "a7_3"]);
    assert!(r.get("elapsed_ms").is_none());
    let (r, _) = json(&["--timing", "check", "a7_3"]);
    assert!(r["elapsed_ms"].is_u64());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_homalt");
    for (args, code) in [
        (vec!["check", "oct_alpha"], 0),
        (vec!["check", "oct_beta"], 1),
        (vec!["iso", "oct_alpha", "oct_alpha"], 2),
        (vec!["nonsense"], 3),
    ] {
        let out = Command::new(bin).args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), run(&args).stdout);
    }
}
