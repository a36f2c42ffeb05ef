use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpStream;
use std::path::{Path, PathBuf};
use std::process::{Child, Command, Output, Stdio};

const SEED: &str = "DefaultCommentMapper.java#getLeadingComments(ASTNode)";
const POSITIVE: &str = "DefaultCommentMapper.java#getExtendedStartPosition(ASTNode)";
const NEGATIVE: &str = "Parser.java#checkComment()";
const ITERATION_2: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(IF0,IF2), iflike(IF2,".*!=null")."#;

fn figures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/figures")
}

fn facet(args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_facet"));
    c.args(args);
    c
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = facet(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn extract_figures(dir: &Path) -> PathBuf {
    let facts = dir.join("figures.facts");
    let out = facet(&[
        "extract",
        "--repo",
        figures_dir().to_str().unwrap(),
        "--facts",
        facts.to_str().unwrap(),
    ])
    .output()
    .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    facts
}

fn session_args<'a>(facts: &'a str, session: &'a str, if1: &'a str, if3: &'a str) -> Vec<&'a str> {
    vec![
        "session",
        "--facts",
        facts,
        "--session",
        session,
        "--method",
        SEED,
        "--lines",
        "7-19",
        "--annotate",
        if1,
        "--annotate",
        if3,
    ]
}

/// 1-based position of `id` in the most recent result listing.
fn position(stdout: &str, id: &str) -> usize {
    let listing: Vec<&str> = stdout
        .lines()
        .rev()
        .take_while(|l| !l.starts_with("iteration"))
        .collect();
    let line = listing.iter().find(|l| l.contains(&format!("  {id}  "))).unwrap();
    line[1..].split_whitespace().next().unwrap().parse().unwrap()
}

#[test]
fn walkthrough_in_text_mode() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let session = dir.path().join("walk.json");
    let (if1, if3) = (format!("{SEED}#if1"), format!("{SEED}#if3"));
    let args = session_args(facts.to_str().unwrap(), session.to_str().unwrap(), &if1, &if3);

    // first pass: look at the results, then leave without labeling
    let out = run_with_stdin(&args, "");
    assert!(out.status.success(), "{}", text(&out.stderr));
    let first = text(&out.stdout);
    let (pos, neg) = (position(&first, POSITIVE), position(&first, NEGATIVE));

    // resumed session: a bad index re-prompts, then the batch refines
    let script = format!("+99\n+{pos} -{neg}\nrefine\n");
    let out = run_with_stdin(&args, &script);
    assert!(out.status.success(), "{}", text(&out.stderr));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("no result 99"), "{stdout}");
    assert!(stdout.contains(&format!("iteration 2: {ITERATION_2}")), "{stdout}");
    assert!(!stdout.rsplit("iteration 2").next().unwrap().contains(NEGATIVE));

    let stored = std::fs::read_to_string(&session).unwrap();
    assert!(stored.contains("\"iterations\""));
    let out = facet(&[
        "replay",
        "--facts",
        facts.to_str().unwrap(),
        "--session",
        session.to_str().unwrap(),
    ])
    .output()
    .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    let replayed = text(&out.stdout);
    assert_eq!(replayed.lines().count(), 2);
    assert!(replayed.lines().nth(1).unwrap().ends_with(ITERATION_2));
}

#[test]
fn done_leaves_a_saved_session() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let session = dir.path().join("quit.json");
    let (if1, if3) = (format!("{SEED}#if1"), format!("{SEED}#if3"));
    let args = session_args(facts.to_str().unwrap(), session.to_str().unwrap(), &if1, &if3);
    let out = run_with_stdin(&args, "done\n");
    assert!(out.status.success(), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("1 iterations, converged"));
    let stored: String = std::fs::read_to_string(&session).unwrap();
    assert!(
        stored.contains("\"status\": \"converged\"") || stored.contains("\"status\":\"converged\""),
        "{stored}"
    );
}

#[test]
fn features_are_prompted_for() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let session = dir.path().join("prompted.json");
    let out = run_with_stdin(
        &[
            "session",
            "--facts",
            facts.to_str().unwrap(),
            "--session",
            session.to_str().unwrap(),
            "--method",
            SEED,
        ],
        "zero\n1\ndone\n",
    );
    assert!(out.status.success(), "{}", text(&out.stderr));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("`zero` is not a feature number"), "{stdout}");
    assert!(stdout.contains("iteration 1: query(X) :- methoddec(X)"), "{stdout}");
}

#[test]
fn query_prints_matching_ids() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let out = facet(&["query", "--facts", facts.to_str().unwrap(), "--query", ITERATION_2])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    let ids: Vec<String> = text(&out.stdout).lines().map(String::from).collect();
    assert!(ids.contains(&SEED.to_string()) && ids.contains(&POSITIVE.to_string()));
    assert!(!ids.contains(&NEGATIVE.to_string()));

    let file = dir.path().join("q.dl");
    std::fs::write(&file, ITERATION_2).unwrap();
    let out = facet(&[
        "query",
        "--repo",
        figures_dir().to_str().unwrap(),
        "--query",
        &format!("@{}", file.display()),
    ])
    .output()
    .unwrap();
    assert_eq!(text(&out.stdout).lines().map(String::from).collect::<Vec<_>>(), ids);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let f = facts.to_str().unwrap();
    let code = |args: &[&str]| facet(args).output().unwrap().status.code();

    assert_eq!(code(&["query", "--facts", f, "--query", "query(X) :- "]), Some(2));
    assert_eq!(
        code(&["query", "--facts", "/no/such.facts", "--query", ITERATION_2]),
        Some(2)
    );
    assert_eq!(code(&["query", "--query", ITERATION_2]), Some(2));
    assert_eq!(code(&["extract", "--repo", "/no/such/dir", "--facts", f]), Some(2));
    assert_eq!(code(&["simulate", "--k", "0"]), Some(2));
    assert_eq!(code(&["simulate", "--label-policy", "sometimes"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    let s = dir.path().join("s.json");
    assert_eq!(
        code(&["session", "--facts", f, "--session", s.to_str().unwrap()]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "session",
            "--facts",
            f,
            "--session",
            s.to_str().unwrap(),
            "--method",
            "Nope.java#x()"
        ]),
        Some(2)
    );

    // a session stored against other facts is a runtime failure
    let walk = dir.path().join("w.json");
    let (if1, if3) = (format!("{SEED}#if1"), format!("{SEED}#if3"));
    let out = run_with_stdin(&session_args(f, walk.to_str().unwrap(), &if1, &if3), "done\n");
    assert!(out.status.success());
    let empty = tempfile::tempdir().unwrap();
    let other = dir.path().join("empty.facts");
    assert!(facet(&[
        "extract",
        "--repo",
        empty.path().to_str().unwrap(),
        "--facts",
        other.to_str().unwrap()
    ])
    .output()
    .unwrap()
    .status
    .success());
    assert_eq!(
        code(&[
            "replay",
            "--facts",
            other.to_str().unwrap(),
            "--session",
            walk.to_str().unwrap()
        ]),
        Some(1)
    );

    // busy port
    let listener = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap().to_string();
    assert_eq!(code(&["serve", "--facts", f, "--bind", &addr]), Some(1));
}

#[test]
fn simulate_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("report.tsv");
    let out = facet(&[
        "simulate",
        "--runs",
        "1",
        "--k",
        "1,2",
        "--out",
        out_file.to_str().unwrap(),
    ])
    .output()
    .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    let tsv = std::fs::read_to_string(&out_file).unwrap();
    assert!(tsv.starts_with("group\t"));
    assert_eq!(tsv.lines().count(), 1 + 2 * 5);
    assert_eq!(text(&out.stdout).lines().count(), 2);

    let out = facet(&["simulate", "--runs", "1", "--groups", "quote-escapers"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    assert_eq!(text(&out.stdout).lines().count(), 2);
    assert!(text(&out.stderr).contains("precision"));
}

struct Server(Child);

impl Drop for Server {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn http(addr: &str, method: &str, path: &str, body: Option<&str>) -> (u16, String) {
    let mut s = TcpStream::connect(addr).unwrap();
    let body = body.unwrap_or("");
    write!(
        s,
        "{method} {path} HTTP/1.1\r\nhost: {addr}\r\nconnection: close\r\ncontent-type: application/json\r\ncontent-length: {}\r\n\r\n{body}",
        body.len()
    )
    .unwrap();
    let mut raw = String::new();
    s.read_to_string(&mut raw).unwrap();
    let (head, rest) = raw.split_once("\r\n\r\n").unwrap();
    let status = head.split_whitespace().nth(1).unwrap().parse().unwrap();
    let chunked = head.to_ascii_lowercase().contains("transfer-encoding: chunked");
    let body = if chunked { dechunk(rest) } else { rest.to_string() };
    (status, body)
}

fn dechunk(mut s: &str) -> String {
    let mut out = String::new();
    loop {
        let (size, rest) = s.split_once("\r\n").unwrap();
        let n = usize::from_str_radix(size.trim(), 16).unwrap();
        if n == 0 {
            return out;
        }
        out.push_str(&rest[..n]);
        s = &rest[n + 2..];
    }
}

fn enc(id: &str) -> String {
    id.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'.' | b'_' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}

#[test]
fn exported_sessions_replay_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let facts = extract_figures(dir.path());
    let mut child = facet(&["serve", "--facts", facts.to_str().unwrap(), "--bind", "127.0.0.1:0"])
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut stderr = BufReader::new(child.stderr.take().unwrap());
    let _server = Server(child);
    let mut line = String::new();
    stderr.read_line(&mut line).unwrap();
    let addr = line.trim().strip_prefix("listening on http://").unwrap().to_string();

    let start = format!(
        r##"{{"methodId": "{SEED}", "lineRange": [7, 19], "annotatedNodeIds": ["{SEED}#if1", "{SEED}#if3"]}}"##
    );
    let (status, body) = http(&addr, "POST", "/sessions", Some(&start));
    assert_eq!(status, 201, "{body}");
    let id = body
        .split("\"id\":\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap()
        .to_string();
    let labels = format!(r#"{{"positives": ["{POSITIVE}"], "negatives": ["{NEGATIVE}"]}}"#);
    let (status, body) = http(&addr, "POST", &format!("/sessions/{}/labels", enc(&id)), Some(&labels));
    assert_eq!(status, 200, "{body}");

    let (status, exported) = http(&addr, "GET", &format!("/sessions/{}/export", enc(&id)), None);
    assert_eq!(status, 200);
    let file = dir.path().join("exported.json");
    std::fs::write(&file, &exported).unwrap();
    let out = facet(&[
        "replay",
        "--facts",
        facts.to_str().unwrap(),
        "--session",
        file.to_str().unwrap(),
    ])
    .output()
    .unwrap();
    assert!(out.status.success(), "{}", text(&out.stderr));
    let replayed = text(&out.stdout);
    assert!(replayed.lines().nth(1).unwrap().ends_with(ITERATION_2), "{replayed}");
}
