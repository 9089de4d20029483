use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const HEPTAGON: &str = "2 3 4\n2 4 5\n2 5 7\n5 6 7\n1 2 7\n";
const LINE5: &str = "1 2\n2 3\n3 4\n4 5\n5 6\n";

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stacked-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stacked"))
        .args(args)
        .env_remove("STACKED_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn map_reproduces_the_first_tree() {
    let cx = fixture("line5.cx", LINE5);
    let part = fixture("line5-edges.part", "3,4 4,5\n1,2 2,3 5,6\n");
    let o = run(
        &["map", "f2v", cx.to_str().unwrap(), part.to_str().unwrap()],
        None,
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{1 3 5} {2 6} {4}\n");
}

#[test]
fn map_round_trip_through_stdin() {
    let cx = fixture("hep.cx", HEPTAGON);
    let part = fixture("hep.part", "2,3,4 2,5,7\n1,2,7 2,4,5 5,6,7\n");
    let o = run(
        &[
            "map",
            "f2v",
            "--lines",
            cx.to_str().unwrap(),
            part.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(stdout(&o), "1 4 6\n2\n3 7\n5\n");
    let back = run(
        &["map", "v2f", cx.to_str().unwrap(), "-"],
        Some(&stdout(&o)),
    );
    assert_eq!(stdout(&back), "{1,2,7 2,4,5 5,6,7} {2,3,4 2,5,7}\n");
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", "-"], Some(HEPTAGON));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stacked=yes"));
    let o = run(&["check", "-"], Some("1 2\n1 2 3\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["check", "-"], Some("1 2 3\n3 4 5\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stacked=no"));
    let o = run(&["check", "/nonexistent/file.cx"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_heptagon() {
    let o = run(&["verify", "-", "-r", "2", "-s", "2"], Some(HEPTAGON));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("status=ok\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["verify"], None).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
}

#[test]
fn path_between_facets_and_vertices() {
    let o = run(&["path", "-", "--facets", "4,3,2", "5,6,7"], Some(HEPTAGON));
    assert_eq!(stdout(&o), "path=2,3,4 2,4,5 2,5,7 5,6,7\ndistance=3\n");
    let o = run(&["path", "-", "--vertices", "3", "7"], Some(HEPTAGON));
    assert_eq!(stdout(&o), "path=2,3,4 2,4,5 2,5,7\ndistance=3\n");
}

#[test]
fn census_and_enumerate() {
    let o = run(&["census", "-"], Some(LINE5));
    assert!(o.status.success());
    assert!(stdout(&o).contains("total=52\nbell=52\nstatus=ok\n"));
    let o = run(
        &[
            "enumerate",
            "-",
            "--kind",
            "facets",
            "-r",
            "2",
            "-s",
            "1",
            "--count",
        ],
        Some(LINE5),
    );
    assert_eq!(stdout(&o), "15\n");
}

#[test]
fn nat_closed_form() {
    let o = run(&["nat", "--blocks", "8 13", "-n", "19", "--rest"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("{1 3 5 7 10 12 15 17 19} {2 4 6 8 14 16 18 20} {9 11 13}\n"));
    assert!(stdout(&o).ends_with("colimit=ok\n"));
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = run(
        &["gen", "stacked", "-d", "3", "-n", "6", "--seed", "11"],
        None,
    );
    let b = run(
        &["gen", "stacked", "-d", "3", "-n", "6", "--seed", "11"],
        None,
    );
    assert_eq!(stdout(&a), stdout(&b));
    let o = run(&["check", "-"], Some(&stdout(&a)));
    assert!(o.status.success());
    let o = run(&["gen", "polygon", "-k", "7", "--count"], None);
    assert_eq!(stdout(&o), "42\n");
    let o = run(&["gen", "tree", "-v", "4", "--index", "16"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dot_export() {
    let cx = fixture("dot.cx", LINE5);
    let part = fixture("dot.part", "1 3 5\n2 6\n4\n");
    let o = run(&["dot", cx.to_str().unwrap(), part.to_str().unwrap()], None);
    let text = stdout(&o);
    assert!(text.starts_with("graph complex {"));
    assert_eq!(text.matches("fillcolor").count(), 6);
    let o = run(&["dot", "-"], Some(HEPTAGON));
    assert!(stdout(&o).starts_with("graph dual {"));
}
