use std::path::Path;
use std::process::{Command, Output};

use actforge::workspace::{load_workspace, WorkspaceDocument, WorkspaceError};

fn actforge(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actforge"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn present_dp_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = actforge(
        &["present", "dp", "--act", "E2/regular", "--act", "E2/trivial2", "--out", "P.json"],
        dir.path(),
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = actforge(&["verify", "P.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("holds"));
    let o = actforge(&["validate", "P.json"], dir.path());
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_reports_witness_for_weakened_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let o = actforge(&["present", "act", "--act", "Z3/regular", "--out", "P.json"], dir.path());
    assert_eq!(code(&o), 0);
    let path = dir.path().join("P.json");
    let mut doc = WorkspaceDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // Z3 acting on itself with a second, unrelated generator: dropping the
    // relation tying it to the first leaves too many classes.
    let p = doc.presentations.values_mut().next().unwrap();
    assert!(p.relations.is_empty());
    p.generators.push(p.generators[0].clone());
    p.assign.push(1);
    std::fs::write(&path, doc.to_json()).unwrap();

    let o = actforge(&["verify", "P.json", "--json"], dir.path());
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let verdict = &v["presentations"][0]["verdict"];
    assert_eq!(verdict["witness"]["kind"], "not_derivable");
    assert_eq!(v["presentations"][0]["stale"], true);
    assert!(verdict["closure_classes"].as_u64() > verdict["kernel_classes"].as_u64());
}

#[test]
fn broken_associativity_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"monoids": {"B": {"order": 3, "identity": 0, "table": [[0,1,2],[1,2,2],[2,2,1]]}}}"#,
    )
    .unwrap();
    let o = actforge(&["validate", "bad.json", "--json"], dir.path());
    assert_eq!(code(&o), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "validation_error");
    let msg = v["error"]["message"].as_str().unwrap();
    assert!(msg.starts_with("B:"), "{msg}");
    assert!(msg.contains("associativ"), "{msg}");
}

#[test]
fn dangling_reference_and_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("d.json"),
        r#"{"acts": {"A": {"monoid": "nowhere", "size": 1, "action": [[0]]}}}"#,
    )
    .unwrap();
    assert!(matches!(
        load_workspace(dir.path().join("d.json")).unwrap_err(),
        WorkspaceError::DanglingReference { .. }
    ));
    let o = actforge(&["validate", "d.json", "--json"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("dangling_reference"));

    std::fs::write(dir.path().join("p.json"), "{\n \"monoids\": {\n  \"T\": [}").unwrap();
    let o = actforge(&["validate", "p.json", "--json"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("line 3"));
}

#[test]
fn connect_on_unrelated_words_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = actforge(
        &["present", "dp", "--act", "Z2/regular", "--act", "Z2/trivial1", "--out", "P.json", "--name", "P"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let o = actforge(&["connect", "-w", "P.json", "--presentation", "P", "--lhs", "0.0", "--rhs", "1.0"], dir.path());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("NotConsequence"));

    let o = actforge(
        &["connect", "-w", "P.json", "--presentation", "P", "--lhs", "0.g", "--rhs", "1.0", "--json"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["replays"], true);
}

#[test]
fn emitted_certificates_replay_when_reloaded() {
    use actforge::congruence::DerivationCertificate;
    let dir = tempfile::tempdir().unwrap();
    let o = actforge(
        &["present", "dp", "--act", "E2/regular", "--act", "E2/trivial2", "--out", "P.json", "--name", "P"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let ws = load_workspace(dir.path().join("P.json")).unwrap();
    let (bound, _) = ws.presentation("P").unwrap();
    let free = bound.presentation.free_act().unwrap();
    let pairs = bound.presentation.relation_pairs(&free);
    let mut replayed = 0;
    for r in bound.relations() {
        let m = bound.presentation.monoid();
        let word = |w: actforge::presentation::FreeActElem| format!("{}.{}", w.gen, m.label(w.elem));
        let (l, rr) = (word(r.lhs), word(r.rhs));
        let o = actforge(
            &["connect", "-w", "P.json", "--presentation", "P", "--lhs", &l, "--rhs", &rr, "--json"],
            dir.path(),
        );
        assert_eq!(code(&o), 0, "{l} = {rr}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let cert: DerivationCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
        let a = free.encode(v["lhs"]["gen"].as_u64().unwrap() as usize, v["lhs"]["elem"].as_u64().unwrap() as usize);
        let b = free.encode(v["rhs"]["gen"].as_u64().unwrap() as usize, v["rhs"]["elem"].as_u64().unwrap() as usize);
        cert.replay(free.act(), &pairs, a, b).unwrap();
        replayed += 1;
    }
    assert!(replayed > 0);
}

#[test]
fn save_load_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["construct", "wreath", "--act", "Z2/regular", "--act", "E2/regular", "--out", "W.json"],
        vec!["generate", "attach", "--act", "E2/regular", "-w", "W.json"],
        vec!["present", "zero", "--monoid", "Z2", "-w", "W.json"],
        vec!["construct", "wreath-monoid", "--act", "Z2/trivial2", "--monoid", "E2", "-w", "W.json"],
    ] {
        let o = actforge(&args, dir.path());
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let text = std::fs::read_to_string(dir.path().join("W.json")).unwrap();
    let ws = load_workspace(dir.path().join("W.json")).unwrap();
    assert_eq!(ws.document.to_json(), text);
    assert!(ws.document.generating_sets.values().all(|g| g.verified == Some(true)));
}

#[test]
fn cap_exceeded_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_actforge"))
        .args(["present", "diagonal", "--monoid", "S3"])
        .env("ACTFORGE_CAP", "8")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn suite_single_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let o = actforge(&["suite", "--family", "small", "--criterion", "5", "--criterion", "9"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2/2 criteria passed"));
}
