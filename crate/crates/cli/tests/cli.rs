use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::path::Path;
use std::process::{Child, Command, Output, Stdio};
use std::time::{Duration, Instant};

use frodo_core::draft::OntologyDraft;
use frodo_server::DraftPayload;
use frodo_testkit::{fixtures_dir, fred_fixtures, golden, RUNNING_EXAMPLE};

const RE_SLUG: &str = "who-commissioned-a-component-of-a-system";

fn frodo(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frodo"))
        .current_dir(dir)
        .args(args)
        .env_remove("FRODO_ENDPOINT")
        .env_remove("FRED_API_KEY")
        .output()
        .unwrap()
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn fixtures() -> String {
    fred_fixtures().display().to_string()
}

fn cqs_file() -> String {
    fixtures_dir().join("cqs.tsv").display().to_string()
}

fn files_in(dir: &Path) -> BTreeSet<String> {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn running_example_matches_golden() {
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "draft",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--cq",
            RUNNING_EXAMPLE,
            "--format",
            "manchester",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        files_in(tmp.path()),
        BTreeSet::from([format!("{RE_SLUG}.omn")])
    );
    let written = std::fs::read_to_string(tmp.path().join(format!("{RE_SLUG}.omn"))).unwrap();
    assert_eq!(written, golden("running-example.omn"));
}

#[test]
fn no_question_is_usage_error() {
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &["draft", "--offline", "--fixtures", &fixtures()],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no competency question"));
    let o = frodo(tmp.path(), &["draft", "--bogus"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn corpus_merge_is_class_union() {
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "draft",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--input",
            &cqs_file(),
            "--merge",
            "--json",
            "--out-dir",
            "out",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out = tmp.path().join("out");
    let names = files_in(&out);
    assert_eq!(names.iter().filter(|n| n.ends_with(".omn")).count(), 7);
    assert!(names.contains("merged.omn"));

    let load = |name: &str| -> OntologyDraft {
        let p: DraftPayload =
            serde_json::from_str(&std::fs::read_to_string(out.join(name)).unwrap()).unwrap();
        p.draft
    };
    let mut union = BTreeSet::new();
    for n in names
        .iter()
        .filter(|n| n.ends_with(".json") && *n != "merged.json")
    {
        union.extend(load(n).class_names());
    }
    assert_eq!(load("merged.json").class_names(), union);
}

#[test]
fn metrics_rows() {
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "draft",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--cq",
            RUNNING_EXAMPLE,
            "--format",
            "turtle",
            "--merge",
        ],
    );
    assert!(o.status.success());
    std::fs::write(tmp.path().join("empty.ttl"), "").unwrap();
    let re = format!("{RE_SLUG}.ttl");
    let o = frodo(tmp.path(), &["metrics", "merged.ttl", "empty.ttl", &re]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    let header: Vec<&str> = lines[0].split(',').collect();
    let col = |row: &str, name: &str| -> String {
        let i = header.iter().position(|h| *h == name).unwrap();
        row.split(',').nth(i).unwrap().to_owned()
    };
    assert_eq!(col(lines[1], "ontology"), "merged.ttl");
    assert_eq!(col(lines[1], "classes"), "5");
    assert_eq!(col(lines[1], "object_properties"), "6");
    assert_eq!(col(lines[2], "ontology"), "empty.ttl");
    assert_eq!(col(lines[2], "classes"), "0");
    assert_eq!(col(lines[2], "axioms"), "0");
    assert_eq!(col(lines[3], "ontology"), re);

    let o = frodo(
        tmp.path(),
        &["metrics", "--json", "--out", "m.json", "merged.ttl"],
    );
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.path().join("m.json")).unwrap()).unwrap();
    assert_eq!(v[0]["ontology"], "merged.ttl");
    assert_eq!(v[0]["inverse_relations_ratio"], 1.0);
}

#[test]
fn metrics_errors_name_the_file() {
    let tmp = tempfile::tempdir().unwrap();
    std::fs::write(
        tmp.path().join("bad.ttl"),
        "@prefix : <urn:x#> .\n:a :b @@ .\n",
    )
    .unwrap();
    let o = frodo(tmp.path(), &["metrics", "bad.ttl"]);
    assert_eq!(o.status.code(), Some(3));
    let e = stderr(&o);
    assert!(e.contains("bad.ttl") && e.contains("line 2"), "{e}");
    let o = frodo(tmp.path(), &["metrics", "absent.ttl"]);
    assert_eq!(o.status.code(), Some(3));
    let o = frodo(tmp.path(), &["metrics"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn failures_stop_unless_keep_going() {
    let tmp = tempfile::tempdir().unwrap();
    let fx = fixtures();
    let args = |extra: &[&'static str]| -> Vec<String> {
        let mut a = vec!["draft", "--offline", "--fixtures", fx.as_str()];
        a.extend([
            "--cq",
            RUNNING_EXAMPLE,
            "--cq",
            "Is anything cached for this?",
        ]);
        a.extend(extra);
        a.into_iter().map(String::from).collect()
    };
    let o = frodo(tmp.path(), &refs(&args(&["--out-dir", "a"])));
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(
        e.contains("is-anything-cached-for-this") && e.contains("missing fixture"),
        "{e}"
    );
    assert!(!tmp.path().join("a").exists());

    let o = frodo(
        tmp.path(),
        &refs(&args(&["--out-dir", "b", "--keep-going"])),
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        files_in(&tmp.path().join("b")),
        BTreeSet::from([format!("{RE_SLUG}.omn")])
    );
}

#[test]
fn colliding_slugs_are_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "draft",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--cq",
            "Who is it?",
            "--cq",
            "who is it",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_and_environment() {
    let tmp = tempfile::tempdir().unwrap();
    std::fs::write(
        tmp.path().join("frodo.toml"),
        format!(
            "offline = true\nfixtures = {:?}\nout_dir = \"drafts\"\n",
            fixtures()
        ),
    )
    .unwrap();
    let o = frodo(tmp.path(), &["draft", "--cq", RUNNING_EXAMPLE]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(tmp
        .path()
        .join("drafts")
        .join(format!("{RE_SLUG}.omn"))
        .exists());

    // An endpoint in the environment outranks the file's offline setting.
    let port = TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port();
    let o = Command::new(env!("CARGO_BIN_EXE_frodo"))
        .current_dir(tmp.path())
        .args(["draft", "--cq", RUNNING_EXAMPLE, "--out-dir", "live"])
        .env("FRODO_ENDPOINT", format!("http://127.0.0.1:{port}/fred"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("network failure"), "{}", stderr(&o));

    // ...and the --offline flag outranks the environment.
    let o = Command::new(env!("CARGO_BIN_EXE_frodo"))
        .current_dir(tmp.path())
        .args([
            "draft",
            "--offline",
            "--cq",
            RUNNING_EXAMPLE,
            "--out-dir",
            "flag",
        ])
        .env("FRODO_ENDPOINT", format!("http://127.0.0.1:{port}/fred"))
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn job_count_does_not_change_output() {
    let tmp = tempfile::tempdir().unwrap();
    let run = |dir: &str, jobs: &str| {
        let o = frodo(
            tmp.path(),
            &[
                "draft",
                "--offline",
                "--fixtures",
                &fixtures(),
                "--input",
                &cqs_file(),
                "--merge",
                "--format",
                "both",
                "--jobs",
                jobs,
                "--out-dir",
                dir,
            ],
        );
        assert!(o.status.success());
    };
    run("one", "1");
    run("four", "4");
    for name in files_in(&tmp.path().join("one")) {
        let a = std::fs::read(tmp.path().join("one").join(&name)).unwrap();
        let b = std::fs::read(tmp.path().join("four").join(&name)).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

struct Server(Child);

impl Drop for Server {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn free_port() -> u16 {
    TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port()
}

fn spawn_server(port: u16) -> Server {
    let child = Command::new(env!("CARGO_BIN_EXE_frodo"))
        .args([
            "serve",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--port",
            &port.to_string(),
        ])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let server = Server(child);
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let start = Instant::now();
    while TcpStream::connect(addr).is_err() {
        assert!(
            start.elapsed() < Duration::from_secs(20),
            "server did not come up"
        );
        std::thread::sleep(Duration::from_millis(50));
    }
    server
}

fn http(port: u16, method: &str, path: &str, body: &str) -> (u16, String) {
    let mut s = TcpStream::connect(("127.0.0.1", port)).unwrap();
    write!(
        s,
        "{method} {path} HTTP/1.1\r\nHost: localhost\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )
    .unwrap();
    let mut raw = String::new();
    s.read_to_string(&mut raw).unwrap();
    let (head, body) = raw.split_once("\r\n\r\n").unwrap();
    let status = head.split(' ').nth(1).unwrap().parse().unwrap();
    (status, body.to_owned())
}

#[test]
fn serve_answers_and_matches_cli() {
    let port = free_port();
    let _server = spawn_server(port);
    let (status, body) = http(port, "GET", "/api/health", "");
    assert_eq!(status, 200);
    assert_eq!(body, r#"{"status":"ok","mode":"offline"}"#);

    let (status, served) = http(
        port,
        "POST",
        "/api/draft",
        &serde_json::json!({ "cq": RUNNING_EXAMPLE }).to_string(),
    );
    assert_eq!(status, 200);
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "draft",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--cq",
            RUNNING_EXAMPLE,
            "--json",
        ],
    );
    assert!(o.status.success());
    let cli = std::fs::read_to_string(tmp.path().join(format!("{RE_SLUG}.json"))).unwrap();
    assert_eq!(served, cli);
}

#[test]
fn serve_on_occupied_port_fails() {
    let taken = TcpListener::bind("127.0.0.1:0").unwrap();
    let port = taken.local_addr().unwrap().port().to_string();
    let tmp = tempfile::tempdir().unwrap();
    let o = frodo(
        tmp.path(),
        &[
            "serve",
            "--offline",
            "--fixtures",
            &fixtures(),
            "--port",
            &port,
        ],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("already in use"), "{}", stderr(&o));
}
