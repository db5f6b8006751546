use std::path::PathBuf;
use std::process::{Command, Output};

fn hopf16(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf16")).args(args).env_remove("HOPF16_CATALOG").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn verify_passes_on_catalog_entry() {
    let o = hopf16(&["verify", "Ha1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS antipode") && s.contains("PASS cocycle conditions"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn unknown_name_is_a_usage_error() {
    let o = hopf16(&["build", "NoSuchName"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("NoSuchName") && err.contains("HC1s") && err.contains("Hd-+"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(hopf16(&["list", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(hopf16(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn build_is_deterministic_json() {
    let a = hopf16(&["build", "HE"]);
    let b = hopf16(&["build", "HE"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["dim"], 16);
}

#[test]
fn list_names_every_entry() {
    let o = hopf16(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 16);
    assert_eq!(v[0]["name"], "Ha1");
}

#[test]
fn profile_formats() {
    let o = hopf16(&["profile", "Hc0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["profile"]["k0_label"], "K5.4");
    assert_eq!(v["profile"]["group_h"], "C4xC2");
    let md = stdout(&hopf16(&["profile", "HBX", "--format", "md"]));
    assert!(md.contains("| HBX | C2xC2 | D8 | (1^8,2^2) | K5.5 |"), "{md}");
}

#[test]
fn fusion_output_goes_to_file() {
    let path = scratch("fusion_ha1.md");
    let o = hopf16(&["fusion", "Ha1", "--format", "md", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let s = std::fs::read_to_string(&path).unwrap();
    assert!(s.contains("K5.3"));
}

#[test]
fn alternate_catalog_entries_are_profiled_from_structure_constants() {
    let dump = hopf16(&["build", "HC1"]);
    let h: serde_json::Value = serde_json::from_slice(&dump.stdout).unwrap();
    let path = scratch("alt_catalog.json");
    std::fs::write(&path, serde_json::json!({ "myHC1": h }).to_string()).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hopf16"))
        .args(["profile", "myHC1"])
        .env("HOPF16_CATALOG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "myHC1 G(H)=D8 G(H*)=C2xC2 blocks=(1^4,2^3) K0=K6.3\n");
}

#[test]
fn table1_markdown_has_sixteen_rows() {
    let o = hopf16(&["table1", "--format", "md", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    let rows = s.lines().filter(|l| l.starts_with("| ") && l.ends_with("| ok |")).count();
    assert_eq!(rows, 16, "{s}");
}
