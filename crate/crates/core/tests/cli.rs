use std::io::Write;
use std::process::{Command, Output};

use xmodlie::cli::{FieldValue, Report};

fn xmodlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xmodlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn toml_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn demos_succeed_and_are_deterministic() {
    for id in ["k2k3", "sl2-uce", "sl2-corollary"] {
        let a = xmodlie(&["--format", "machine", "demo", id]);
        assert_eq!(code(&a), 0, "{id}: {}", String::from_utf8_lossy(&a.stderr));
        let b = xmodlie(&["--format", "machine", "demo", id]);
        assert_eq!(a.stdout, b.stdout);
        let report = Report::from_machine(std::str::from_utf8(&a.stdout).unwrap()).unwrap();
        assert!(report.ok);
    }
}

#[test]
fn machine_output_carries_the_counterexample() {
    let o = xmodlie(&["--format", "machine", "demo", "k2k3"]);
    let report = Report::from_machine(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!(
        report.value("k2k3", "central"),
        Some(&FieldValue::Bool(false))
    );
    assert_eq!(
        report.value("k2k3", "ker_pi_tensor.dim"),
        Some(&FieldValue::Count(5))
    );
}

#[test]
fn human_output_names_the_status() {
    let o = xmodlie(&["classify", "sl2.id.identity"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("classify sl2.id.identity: ok"), "{text}");
}

#[test]
fn verify_whole_corpus() {
    assert_eq!(code(&xmodlie(&["verify"])), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&xmodlie(&["frobnicate"])), 1);
    assert_eq!(code(&xmodlie(&["demo"])), 1);
    assert_eq!(code(&xmodlie(&["demo", "nope"])), 1);
    assert_eq!(code(&xmodlie(&["--help"])), 0);
}

#[test]
fn unresolved_names_exit_two() {
    let o = xmodlie(&["analyze", "no.such.thing"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn malformed_input_exits_two() {
    let f = toml_file("[[algebra]]\nname = \"L\"\nkind = \"structure\"\n");
    let o = xmodlie(&["--input", f.path().to_str().unwrap(), "verify"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn axiom_failure_exits_three() {
    let f = toml_file(
        r#"
[[algebra]]
name = "L"
kind = "structure"
dim = 2
brackets = [[1, 2, 2, 1]]

[[xmod]]
name = "X"
kind = "identity"
of = "L"

[[braided]]
name = "B"
kind = "explicit"
xmod = "X"
braiding = "zero"
"#,
    );
    let o = xmodlie(&["--input", f.path().to_str().unwrap(), "verify"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn failed_expectation_exits_four() {
    let f = toml_file(
        r#"
[[morphism]]
name = "pi.wrong"
source = "K3.tensor"
target = "K2.tensor"
f1 = { tensor_of = "pi" }
f2 = { hom = "pi" }
expect = { extension = true, central = true, compatible_central = true }
"#,
    );
    let path = f.path().to_str().unwrap();
    let o = xmodlie(&["--with-corpus", "--input", path, "classify", "pi.wrong"]);
    assert_eq!(code(&o), 4);
    // Without the corpus the referenced objects do not exist.
    assert_eq!(
        code(&xmodlie(&["--input", path, "classify", "pi.wrong"])),
        2
    );
}

#[test]
fn strict_turns_warnings_into_failures() {
    let lax = xmodlie(&["uce", "h3.id"]);
    assert_eq!(code(&lax), 0);
    assert!(String::from_utf8_lossy(&lax.stdout).contains("warning:"));
    assert_eq!(code(&xmodlie(&["--strict", "uce", "h3.id"])), 4);
    assert_eq!(code(&xmodlie(&["--strict", "uce", "sl2.id"])), 0);
}

#[test]
fn tensor_square_from_the_command_line() {
    let o = xmodlie(&["--format", "machine", "tensor", "sl2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report = Report::from_machine(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    let dims: Vec<_> = report
        .sections
        .iter()
        .flat_map(|s| s.fields.iter())
        .filter(|f| f.key.ends_with("dim"))
        .map(|f| f.value.clone())
        .collect();
    assert!(dims.contains(&FieldValue::Count(3)), "{dims:?}");
}

#[test]
fn inputs_may_be_listed_or_repeated() {
    let a = toml_file("[[algebra]]\nname = \"A\"\nkind = \"abelian\"\ndim = 2\n");
    let b = toml_file("[[braided]]\nname = \"A.id\"\nkind = \"identity\"\nof = \"A\"\n");
    let (pa, pb) = (a.path().to_str().unwrap(), b.path().to_str().unwrap());
    let listed = format!("{pa},{pb}");
    assert_eq!(code(&xmodlie(&["--input", &listed, "analyze", "A.id"])), 0);
    assert_eq!(code(&xmodlie(&["-i", pa, "-i", pb, "analyze", "A.id"])), 0);
    assert_eq!(code(&xmodlie(&["-i", pb, "analyze", "A.id"])), 2);
}

#[test]
fn readme_definition_example_loads() {
    let readme = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md"));
    let start = readme.find("```toml\n").expect("toml block") + "```toml\n".len();
    let len = readme[start..].find("```").expect("closing fence");
    let f = toml_file(&readme[start..start + len]);
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&xmodlie(&["-i", path, "verify"])), 0);
    assert_eq!(code(&xmodlie(&["-i", path, "classify", "p.t"])), 0);
}
