use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_quiver-vgit");
const DIAMOND: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/diamond.txt");
const DIAMOND_JSON: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/diamond.json");
const HIRZEBRUCH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/hirzebruch.txt");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .env("NO_COLOR", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn walls_table_lists_fourteen_classes() {
    let o = run(&["walls", DIAMOND]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("Walls\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with(char::is_numeric)).count(), 14);
    assert!(text.contains("(0,0,0,1)  always"));
    assert!(!text.contains('\u{1b}'), "NO_COLOR output has escape codes");
}

#[test]
fn chambers_and_stable_matrix() {
    let text = stdout(&run(&["chambers", DIAMOND]));
    assert!(text.contains("a≠0 ∧ e≠0 ∧ (b≠0 ∨ c≠0 ∨ d≠0)"));
    assert!(text.contains("Z: N(a), N(e); ρ = 1"));
    let text = stdout(&run(&["stable-matrix", DIAMOND]));
    assert!(text.contains("base character (3,-1,-1,-1) lies in C5"));
    assert!(text.contains("C5 ∪ C10"));
}

#[test]
fn json_output_parses_and_has_all_sections() {
    let o = run(&["--format", "json", "analyze", DIAMOND]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["quiver", "walls", "chambers", "stable_matrix", "base", "figure"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["walls"].as_array().unwrap().len(), 14);
}

#[test]
fn json_input_matches_text_input() {
    let a = run(&["--format", "json", "analyze", DIAMOND]);
    let b = run(&["--json-input", "--format", "json", "analyze", DIAMOND_JSON]);
    assert_eq!(b.status.code(), Some(0), "{}", stderr(&b));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stdin_is_read_when_no_file_is_given() {
    let input = std::fs::read_to_string(HIRZEBRUCH).unwrap();
    let o = run_stdin(&["chambers", "-"], &input);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha≠0 ∧ (beta1≠0 ∨ beta2≠0 ∨ gamma≠0)"));
}

#[test]
fn slice_svg_is_deterministic() {
    let a = run(&["slice-svg", "--viewport", "-1,3,-2,2", "--yscale", "1/2", DIAMOND]);
    let b = run(&["slice-svg", "--viewport", "-1,3,-2,2", "--yscale", "1/2", DIAMOND]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn slice_svg_without_slice_is_an_analysis_error() {
    let o = run(&["slice-svg", HIRZEBRUCH]);
    assert_eq!(o.status.code(), Some(0), "linear slice is still a slice");
    let o = run_stdin(&["slice-svg"], "vertices: a b\narrow x: a -> b\nd: 1 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("slice"));
}

#[test]
fn picard_calculators() {
    assert_eq!(stdout(&run(&["picard", "--general", "2,1,0,0"])), "1\n");
    assert_eq!(stdout(&run(&["picard", "--mds-quotient", "6,0,1"])), "5\n");
    let o = run(&["picard", "--general", "1,3,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["picard", "--general", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_check_passes_on_fixtures() {
    for f in [DIAMOND, HIRZEBRUCH] {
        let o = run(&["oracle-check", "--seed", "3", f]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains("oracle check passed"));
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("quiver-vgit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("walls.txt");
    let o = run(&["walls", "-o", path.to_str().unwrap(), DIAMOND]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&["walls", DIAMOND]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["walls", "/nonexistent/request.txt"]).status.code(), Some(1));
    let o = run_stdin(&["analyze"], "vertices: a b\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 1: missing dimension vector"));
    let o = run_stdin(&["analyze"], "vertices: a b\narrow x: a -> c\nd: 1 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 15"));
}

#[test]
fn scope_flag_restricts_to_g_ample_cells() {
    let full = stdout(&run(&["chambers", DIAMOND]));
    let g = stdout(&run(&["--scope", "g-ample", "chambers", DIAMOND]));
    assert!(full.contains("not G-ample"));
    assert!(!g.contains("not G-ample"));
}
