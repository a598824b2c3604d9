use std::io::{BufRead, BufReader, Write};
use std::net::TcpStream;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden");

fn golden(name: &str) -> PathBuf {
    PathBuf::from(GOLDEN).join(name)
}

fn fourport(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourport"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn post_program() -> String {
    golden("post_one_two.pl").display().to_string()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fourport-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn all_solutions_prints_every_answer() {
    let o = fourport(&[
        "--program",
        &post_program(),
        "--query",
        "post(X,Y)",
        "--all-solutions",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X = 1, Y = a\nX = 1, Y = b\n");
}

#[test]
fn first_solution_by_default() {
    let o = fourport(&["--program", &post_program(), "--query", "post(X,Y)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "X = 1, Y = a\n");
}

#[test]
fn answers_follow_query_variable_order() {
    let o = fourport(&["--program", &post_program(), "--query", "post(B,A)"]);
    assert_eq!(stdout(&o), "B = 1, A = a\n");
    let o = fourport(&["--query", "X = f(Y), Y = 2, _ = X"]);
    assert_eq!(stdout(&o), "X = f(2), Y = 2\n");
    let o = fourport(&["--query", "true"]);
    assert_eq!(stdout(&o), "true.\n");
}

#[test]
fn failure_prints_false() {
    let o = fourport(&["--query", "fail"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false.\n");
}

#[test]
fn raw_trace_of_post_fail_matches_the_fixture() {
    let o = fourport(&[
        "--program",
        &post_program(),
        "--query",
        "post(X,Y),fail",
        "--trace",
        "raw",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false.\n");
    let expected = std::fs::read_to_string(golden("post_one_two.raw.txt")).unwrap();
    assert_eq!(stderr(&o), expected);
    assert_eq!(stderr(&o).lines().count(), 46);
}

#[test]
fn structured_trace_goes_to_a_file() {
    let out = scratch("trace.jsonl", "");
    let program = golden("good_bad.pl").display().to_string();
    let o = fourport(&[
        "--program",
        &program,
        "--query",
        "main",
        "--trace",
        "structured",
        "--trace-out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    // Only the warning for `bad`, which has no clauses; no trace lines.
    assert_eq!(
        stderr(&o),
        "fourport: warning: undefined predicate bad/0; calls to it fail\n"
    );
    let got = std::fs::read_to_string(&out).unwrap();
    let want = std::fs::read_to_string(golden("good_bad.jsonl")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn pretty_trace_indents_and_applies_bindings() {
    let o = fourport(&[
        "--program",
        &post_program(),
        "--query",
        "post(X,Y),fail",
        "--trace",
        "pretty",
    ]);
    let lines: Vec<String> = stderr(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 46);
    assert!(lines[0].starts_with("call (post(X,Y),fail) "));
    assert!(lines
        .iter()
        .any(|l| l.trim_start().starts_with("exit two(1,a) ")));
    assert!(lines[4].starts_with("        call X=1 "), "{}", lines[4]);
}

#[test]
fn tracing_never_changes_answers_or_exit_codes() {
    for (query, flags) in [
        ("post(X,Y)", true),
        ("post(X,Y)", false),
        ("post(X,Y),fail", false),
    ] {
        let mut base = vec![
            "--program".to_string(),
            post_program(),
            "--query".into(),
            query.into(),
        ];
        if flags {
            base.push("--all-solutions".into());
        }
        let reference = fourport(&base.iter().map(String::as_str).collect::<Vec<_>>());
        for mode in ["raw", "pretty", "structured"] {
            let mut args = base.clone();
            args.extend(["--trace".to_string(), mode.to_string()]);
            let o = fourport(&args.iter().map(String::as_str).collect::<Vec<_>>());
            assert_eq!(o.status.code(), reference.status.code());
            assert_eq!(o.stdout, reference.stdout);
        }
    }
}

#[test]
fn ascii_flag_changes_memo_glyphs() {
    let program = golden("good_bad.pl").display().to_string();
    let o = fourport(&[
        "--program",
        &program,
        "--query",
        "main",
        "--trace",
        "raw",
        "--ascii",
    ]);
    let trace = stderr(&o);
    assert!(trace.contains("true=>good"));
    assert!(!trace.contains('▸'));
}

#[test]
fn budget_exhaustion_exits_2() {
    let p = scratch("loop.pl", "loop :- loop.\n");
    let o = fourport(&[
        "--program",
        p.to_str().unwrap(),
        "--query",
        "loop",
        "--max-steps",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "");
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn usage_and_parse_errors_exit_64() {
    let bad = scratch("bad.pl", "p :- q(\n");
    let o = fourport(&["--program", bad.to_str().unwrap(), "--query", "p"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("bad.pl:"), "{}", stderr(&o));
    assert_eq!(fourport(&["--query", "p("]).status.code(), Some(64));
    assert_eq!(fourport(&["--frobnicate"]).status.code(), Some(64));
    assert_eq!(
        fourport(&["--query", "true", "--serve", "0"]).status.code(),
        Some(64)
    );
    assert_eq!(fourport(&[]).status.code(), Some(64));
    assert_eq!(
        fourport(&["--program", "/nonexistent.pl", "--query", "p"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(fourport(&["--help"]).status.code(), Some(0));
}

#[test]
fn dump_canonical_prints_one_clause_per_predicate() {
    let p = scratch("q.pl", "q(a,b).\nq(Z,c) :- r(Z).\nr(c).\n");
    let o = fourport(&["--program", p.to_str().unwrap(), "--dump-canonical"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2, "{text}");
    assert!(text.starts_with("q("));
    assert!(text.lines().nth(1).unwrap().starts_with("r("));
}

#[test]
fn undefined_predicates_warn_once() {
    let p = scratch("undef.pl", "p :- q ; q.\n");
    let o = fourport(&["--program", p.to_str().unwrap(), "--query", "p"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).matches("undefined predicate q/0").count(), 1);
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = fourport(&["gen", "--seed", "42"]);
    let b = fourport(&["gen", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let query = text
        .lines()
        .find_map(|l| l.strip_prefix("% query: "))
        .unwrap()
        .to_string();
    let p = scratch("gen.pl", &text);
    let o = fourport(&[
        "--program",
        p.to_str().unwrap(),
        "--query",
        &query,
        "--max-steps",
        "10000",
    ]);
    assert!(matches!(o.status.code(), Some(0..=2)));
}

#[test]
fn serve_speaks_the_protocol() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fourport"))
        .args(["--serve", "0"])
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut banner = String::new();
    BufReader::new(child.stderr.as_mut().unwrap())
        .read_line(&mut banner)
        .unwrap();
    let addr = banner.trim().rsplit(' ').next().unwrap().to_string();
    let mut stream = TcpStream::connect(&addr).unwrap();
    writeln!(stream, r#"{{"op":"hello","version":1}}"#).unwrap();
    let mut line = String::new();
    BufReader::new(stream.try_clone().unwrap())
        .read_line(&mut line)
        .unwrap();
    child.kill().unwrap();
    let _ = child.wait();
    assert!(line.contains(r#""ok":true"#), "{line}");
    assert!(line.contains("fourport-debug"), "{line}");
}
