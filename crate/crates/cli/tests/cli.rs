use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sierpinski"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn sierpinski")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sierpinski");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#') && !l.is_empty()).collect()
}

#[test]
fn gen_formats() {
    let o = run(&["gen", "--n", "2", "--k", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 12);

    let o = run(&["gen", "--n", "1", "--k", "3", "--format", "dot"]);
    assert_eq!(
        stdout(&o),
        "graph \"S(1,3)\" {\n  \"0\";\n  \"1\";\n  \"2\";\n  \"0\" -- \"1\";\n  \"0\" -- \"2\";\n  \"1\" -- \"2\";\n}\n"
    );

    let o = run(&["gen", "--n", "1", "--k", "3", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"n\":1,\"k\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n");
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["gen", "--n", "2", "--k", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--n", "2", "--k", "3", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["construct", "--n", "2", "--k", "3", "--kind", "dom"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["table", "--n", "3-2", "--k", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--n", "2", "--k", "3", "--kind", "xx"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_codes() {
    let o = run_stdin(
        &["verify", "--n", "2", "--k", "3", "--kind", "id"],
        "0,1\n0,2\n1,0\n1,2\n2,0\n2,1\n",
    );
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "VALID"));

    let o = run_stdin(&["verify", "--n", "2", "--k", "3", "--kind", "td"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not-totally-covered"));

    let o = run_stdin(
        &["verify", "--n", "2", "--k", "3", "--kind", "ld"],
        "# comment\n0,1\n1,2\n\n2,0\n",
    );
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "VALID"));

    let o = run_stdin(
        &["verify", "--n", "2", "--k", "3", "--kind", "id"],
        "0,1\n0,2\n1,0\n1,2\n2,0\n",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unseparated"));

    let o = run_stdin(&["verify", "--n", "2", "--k", "3", "--kind", "id"], "0,7\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "0,0\n1,1\n2,2").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["verify", "--n", "2", "--k", "3", "--kind", "dom", "--code-file", path]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "VALID"));
    let o = run(&["verify", "--n", "2", "--k", "3", "--kind", "td", "--code-file", path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not-totally-covered"));
    let o = run(&[
        "verify",
        "--n",
        "2",
        "--k",
        "3",
        "--kind",
        "dom",
        "--code-file",
        "/nonexistent/code",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_sizes() {
    for (kind, n, k, size) in [
        ("td", "2", "4", 4),
        ("id", "3", "3", 18),
        ("ld", "2", "3", 3),
        ("td", "3", "5", 26),
    ] {
        let o = run(&["construct", "--n", n, "--k", k, "--kind", kind]);
        assert!(o.status.success(), "{kind} {n} {k}");
        let text = stdout(&o);
        assert_eq!(code_lines(&text).len(), size, "{kind} {n} {k}");
        assert!(text.contains("verified=true"));
    }
}

#[test]
fn construct_pipes_into_verify() {
    for kind in ["id", "ld", "td"] {
        let built = run(&["construct", "--n", "3", "--k", "4", "--kind", kind]);
        let o = run_stdin(&["verify", "--n", "3", "--k", "4", "--kind", kind], &stdout(&built));
        assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "VALID"), "{kind}");
    }
}

#[test]
fn solve_outcomes() {
    let o = run(&["solve", "--n", "2", "--k", "3", "--kind", "id"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"min_size\":6") && text.contains("ProvedOptimal"));

    let o = run(&["solve", "--n", "2", "--k", "5", "--kind", "td", "--no-structural"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"min_size\":6"));

    let o = run(&["solve", "--n", "1", "--k", "3", "--kind", "id"]);
    assert_eq!(o.status.code(), Some(4));

    let o = run(&[
        "solve",
        "--n",
        "3",
        "--k",
        "4",
        "--kind",
        "id",
        "--no-structural",
        "--node-budget",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("BudgetExhausted"));

    let o = run(&["solve", "--n", "2", "--k", "4", "--kind", "dom", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"min_size\":4"));
}

#[test]
fn table_csv() {
    let o = run(&["table", "--n", "2,3", "--k", "3-4", "--kinds", "id"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "n,k,kind,predicted,constructed,solved,status\n\
         2,3,id,6,6,-,verified\n\
         2,4,id,12,12,-,verified\n\
         3,3,id,18,18,-,verified\n\
         3,4,id,48,48,-,verified\n"
    );

    let o = run(&[
        "table",
        "--n",
        "2",
        "--k",
        "3,4,5",
        "--kinds",
        "dom,td",
        "--solve-cap",
        "25",
    ]);
    let text = stdout(&o);
    assert!(text.contains("2,3,dom,3,-,3,proved"));
    assert!(text.contains("2,4,td,4,4,4,proved"));
    assert!(text.contains("2,5,td,6,6,6,proved"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn conjecture_attained() {
    for (n, k, bound) in [("2", "3", 6), ("2", "4", 12), ("4", "3", 54)] {
        let o = run(&["conjecture", "--n", n, "--k", k]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.contains(&format!("bound={bound} ")), "{text}");
        assert!(text.trim_end().ends_with(" ATTAINED"), "{text}");
    }
}
