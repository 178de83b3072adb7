mod common;

use common::{cli, data};
use idemring::FiniteSemiring;
use serde_json::Value;

fn path(name: &str) -> String {
    data(name).display().to_string()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = cli(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn analyze_luk3_reports_the_zero_block() {
    let (code, v) = json(&["analyze", &path("luk3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["simple"], false);
    assert_eq!(v["subdirectly_irreducible"], true);
    assert_eq!(v["monolith"], serde_json::json!([["0", "e"], ["u"]]));
    assert_eq!(v["zero"], "0");
    assert_eq!(v["unity"], "u");
}

#[test]
fn analyze_with_matrix() {
    let (code, v) = json(&["analyze", &path("l2.json"), "--matrix", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["matrix"]["size"], 16);
    assert_eq!(v["matrix"]["simple"], true);
}

#[test]
fn verify_reports_axiom_witness() {
    let (code, out, _) = cli(&["verify", &path("broken.json")]);
    assert_eq!(code, 2);
    assert!(out.contains("left-distributive") && out.contains("(a, a, 1)"), "{out}");
    let (code, v) = json(&["verify", &path("luk3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["additively_idempotent"], true);
}

#[test]
fn malformed_files_exit_2_and_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = dir.path().join("ragged.json");
    std::fs::write(
        &ragged,
        r#"{"name":"r","elements":["a","b"],"add":[[0,1],[1]],"mul":[[0,0],[0,0]]}"#,
    )
    .unwrap();
    let (code, _, err) = cli(&["analyze", ragged.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("ragged.json"), "{err}");

    let range = dir.path().join("range.json");
    std::fs::write(
        &range,
        r#"{"name":"r","elements":["a","b"],"add":[[0,1],[1,2]],"mul":[[0,0],[0,0]]}"#,
    )
    .unwrap();
    assert_eq!(cli(&["verify", range.to_str().unwrap()]).0, 2);

    let (code, _, err) = cli(&["matrix", &path("luk3.json"), "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("19683"), "{err}");
}

#[test]
fn gen_then_analyze_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (spec, transforms) in [
        ("l2", vec![]),
        ("luk:3", vec![]),
        ("bool:2", vec!["adjoin-least", "adjoin-unity"]),
        ("bool:2", vec!["corner:a"]),
    ] {
        let out = dir.path().join("s.json");
        let mut args = vec!["gen", spec];
        for t in &transforms {
            args.extend(["-t", t]);
        }
        args.extend(["-o", out.to_str().unwrap()]);
        assert_eq!(cli(&args).0, 0, "{args:?}");

        let mut direct = idemring::generate(spec).unwrap();
        for t in &transforms {
            direct = idemring::apply_transform(&direct, t).unwrap();
        }
        let parsed = FiniteSemiring::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(parsed, direct);
        assert_eq!(cli(&["analyze", out.to_str().unwrap()]).0, 0);
    }
}

#[test]
fn gen_end0_and_transform() {
    let end0 = format!("end0:{}", path("chain3.json"));
    let (code, out, _) = cli(&["gen", &end0]);
    assert_eq!(code, 0);
    assert_eq!(FiniteSemiring::from_json(&out).unwrap().size(), 6);

    let (code, out, _) = cli(&["transform", &path("luk3.json"), "adjoin-unity"]);
    assert_eq!(code, 0);
    assert_eq!(FiniteSemiring::from_json(&out).unwrap().size(), 4);
    assert_eq!(cli(&["transform", &path("luk3.json"), "corner:zz"]).0, 2);
    assert_eq!(cli(&["gen", "luk:x"]).0, 2);
}

#[test]
fn check_subcommands() {
    let (code, v) = json(&["check", "zero-separation-in-s", &path("b2_least.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["condition_id"], "zero-separation-in-s");
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"]["elements"]["a"], "e");

    let (_, v) = json(&["check", "zero-separation-in-s", &path("b2_least_unity.json")]);
    assert_eq!(v["holds"], true);

    let (_, v) = json(&["check", "two-element", &path("l2.json")]);
    assert_eq!(v["verdict"], "is-l2");

    let (_, v) = json(&["check", "si-props", &path("luk3.json")]);
    assert_eq!(v["e_squared_zero"], true);
    assert_eq!(v["least_nonzero"], "e");

    assert_eq!(cli(&["check", "si-props", &path("l2.json")]).0, 2);
}

#[test]
fn matrix_subcommand() {
    let (code, out, _) = cli(&["matrix", &path("l2.json"), "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(FiniteSemiring::from_json(&out).unwrap().size(), 16);

    let (code, v) = json(&[
        "matrix",
        &path("luk3.json"),
        "--n",
        "2",
        "--extract",
        r#"[["0","u"],["e","0"]]"#,
        "[[0,u],[0,0]]",
    ]);
    assert_eq!(code, 0);
    assert_eq!((v["a"].as_str(), v["b"].as_str()), (Some("e"), Some("0")));
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);

    let same = cli(&[
        "matrix",
        &path("luk3.json"),
        "--n",
        "2",
        "--extract",
        "[[0,0],[0,0]]",
        "[[0,0],[0,0]]",
    ]);
    assert_eq!(same.0, 2);
}

#[test]
fn crosscheck_sweep_and_single_file() {
    let (code, v) = json(&["crosscheck", "--max-size", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["semirings"], 6);
    assert_eq!(v["discrepancies"], 0);
    let (code, v) = json(&["crosscheck", &path("luk3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"][0]["brute_force"]["matrix_subdirectly_irreducible"], true);
    assert_eq!(cli(&["crosscheck", "--max-size", "9"]).0, 2);
}

#[test]
fn hat_experiment_only_reports() {
    let (code, v) = json(&["experiment", "hat-monolith", &path("luk3.json"), "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["relation"], "equal");
    assert_eq!(v["hat_of_matrix_monolith"], serde_json::json!([["0", "e"], ["u"]]));
}

#[test]
fn json_reports_are_byte_stable() {
    let runs = || {
        [
            cli(&["--format", "json", "analyze", &path("luk3.json"), "--matrix", "2"]).1,
            cli(&["--format", "json", "crosscheck", "--max-size", "3"]).1,
            cli(&[
                "--format",
                "json",
                "check",
                "translated-separation",
                &path("b2_least.json"),
            ])
            .1,
        ]
    };
    assert_eq!(runs(), runs());
}
