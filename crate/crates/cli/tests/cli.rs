use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfsuper"))
}

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn hopfsuper")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn convert(name: &str) -> serde_json::Value {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = run(&["convert", example(name).to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap()
}

#[test]
fn convert_h8_gives_dimension_eight() {
    let j = convert("h8.hopf");
    assert_eq!(j["dim"], 8);
    assert_eq!(j["name"], "H8");
}

#[test]
fn convert_lambda1_gives_dimension_two() {
    let j = convert("lambda1.hopf");
    assert_eq!(j["dim"], 2);
}

#[test]
fn convert_default_output_uses_stem() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin().current_dir(dir.path()).args(["convert", example("lambda1.hopf").to_str().unwrap()]).output().unwrap();
    assert!(o.status.success());
    assert!(dir.path().join("lambda1.json").exists());
}

#[test]
fn converted_json_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h8.json");
    assert!(run(&["convert", example("h8.hopf").to_str().unwrap(), "-o", out.to_str().unwrap()]).status.success());
    let o = run(&["verify", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
}

#[test]
fn unclosed_basis_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.hopf");
    std::fs::write(
        &p,
        "hopf \"bad\" over Q(zeta8)\ngen z odd\nrel z*z = 0\nbasis 1\n\
         delta z = z (x) 1 + 1 (x) z\ncounit z = 0\nantipode z = -z\n",
    )
    .unwrap();
    let o = run(&["convert", p.to_str().unwrap(), "-o", "-"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("basis not closed"), "{}", stderr(&o));
}

#[test]
fn unknown_input_exits_one() {
    let o = run(&["verify", "no_such_object"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_catalogue_entry_as_csv() {
    let o = run(&["verify", "A_C2xC2", "--csv"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("subject,check,passed,detail\n"));
    assert!(!s.contains(",false,"));
}

fn superforms_json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["superforms"];
    all.extend_from_slice(args);
    all.push("--json");
    let o = run(&all);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn sweedler_has_one_super_form() {
    let j = superforms_json(&["H4_sweedler"]);
    assert_eq!(j["forms"].as_array().unwrap().len(), 1);
    assert_eq!(j["forms"][0]["dim"], "1|1");
}

#[test]
fn c2xc2_has_three_super_forms_of_six() {
    let j = superforms_json(&["A_C2xC2"]);
    assert_eq!(j["admissible"].as_array().unwrap().len(), 6);
    assert_eq!(j["forms"].as_array().unwrap().len(), 3);
}

#[test]
fn group_algebra_short_circuits() {
    let j = superforms_json(&["kS3"]);
    assert!(j["short_circuit"].as_str().unwrap().starts_with("cocommutative"));
    assert!(j["forms"].as_array().unwrap().is_empty());
}

#[test]
fn h8_orbits_file_gives_two_orbits() {
    let o = run(&[
        "superforms",
        example("h8.hopf").to_str().unwrap(),
        "--orbits",
        example("h8_orbits.json").to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("super-forms: 4"));
    assert!(s.contains("orbits: 2\n  {0, 3}\n  {1, 2}\n"), "{s}");
}

#[test]
fn superforms_rejects_superalgebras() {
    let o = run(&["superforms", "Lambda1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_matches_golden_in_every_format() {
    for fmt in [None, Some("--json"), Some("--csv")] {
        let mut args = vec!["classify", "--suite", "dim4pointed"];
        args.extend(fmt);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{fmt:?}: {}", stderr(&o));
        assert!(stderr(&o).contains("golden: match"));
    }
}

#[test]
fn classify_dim2_text() {
    let o = run(&["classify", "--suite", "dim2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).ends_with(" 0 failed, 0 open\n"));
}

#[test]
fn tampered_golden_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let golden = std::fs::read_to_string(golden_dir().join("dim2.txt")).unwrap();
    std::fs::write(dir.path().join("dim2.txt"), golden.replacen("verified", "verifeid", 1)).unwrap();
    let o = bin().env("HOPFSUPER_GOLDEN_DIR", dir.path()).args(["classify", "--suite", "dim2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("golden: mismatch"));
}

#[test]
fn missing_golden_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin().env("HOPFSUPER_GOLDEN_DIR", dir.path()).args(["classify", "--suite", "dim2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bless_writes_golden() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .env("HOPFSUPER_GOLDEN_DIR", dir.path())
        .args(["classify", "--suite", "dim2", "--csv", "--bless"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let written = std::fs::read_to_string(dir.path().join("dim2.csv")).unwrap();
    assert_eq!(written, stdout(&o));
    assert!(written.starts_with("kind,subject,origin,dim,result,note\n"));
}

#[test]
fn json_and_csv_conflict() {
    let o = run(&["list", "--json", "--csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_includes_catalogue() {
    let o = run(&["list"]);
    let s = stdout(&o);
    for n in ["kS3", "H8", "A6"] {
        assert!(s.lines().any(|l| l == n), "{n}");
    }
}
