use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env_remove("AYDC_VERIFY_CONFIG")
        .output()
        .expect("spawn verify")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn list_shows_every_id() {
    let o = verify(&["list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for e in aydc_verify::catalogue::catalogue() {
        assert!(text.contains(e.id), "{} missing", e.id);
    }
}

#[test]
fn hh_separation_reports_witness_dims() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = verify(&["run", "--id", "hh-separation", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    let check = &report["checks"][0];
    assert_eq!(check["id"], "hh-separation");
    assert_eq!(check["status"], "pass");
    let witness = |label: &str| {
        check["witnesses"]
            .as_array()
            .unwrap()
            .iter()
            .find(|w| w["label"] == label)
            .map(|w| w["value"].clone())
            .unwrap()
    };
    assert_eq!(witness("mixed"), 2);
    assert_eq!(witness("stable"), 1);
    assert_eq!(report["summary"]["passed"], 1);
}

#[test]
fn unknown_id_is_a_usage_error() {
    let o = verify(&["run", "--id", "no-such-check"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-check"));
}

#[test]
fn malformed_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "ps = [2, 4]\n").unwrap();
    let o = verify(&["run", "--id", "taft-axioms", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    std::fs::write(&cfg, "ps = [\n").unwrap();
    let o = verify(&["run", "--id", "taft-axioms", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = verify(&["run", "--id", "taft-axioms", "--p", "6"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn config_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("p3.toml");
    std::fs::write(&cfg, "ps = [3]\nxi_exponent = 2\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(["run", "--id", "taft-axioms"])
        .env("AYDC_VERIFY_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("1 checks: 1 passed"));
}

#[test]
fn failing_check_exits_one() {
    let o = verify(&["run", "--id", "self-duality", "--p", "2"]);
    assert_eq!(code(&o), 1);
    let o = verify(&["run", "--id", "self-duality-corrected", "--p", "2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn tag_selection() {
    let o = verify(&["run", "--tag", "sweedler", "--p", "2"]);
    let text = String::from_utf8_lossy(&o.stdout).into_owned();
    assert_eq!(code(&o), 0, "{text}");
    assert!(text.contains("d1-presentation"));
    assert!(!text.contains("taft-axioms"));
}

#[test]
fn ingest_files() {
    let o = verify(&["ingest", &data("z2_group_algebra.json")]);
    assert_eq!(code(&o), 0);
    let o = verify(&["ingest", &data("z2_algebra.json")]);
    assert_eq!(code(&o), 0);
    let o = verify(&["ingest", &data("z2_bad_antipode.json")]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("antipode"));
    let o = verify(&["ingest", &data("missing.json")]);
    assert_eq!(code(&o), 2);
}
