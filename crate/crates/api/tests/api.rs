use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use facet_api::{router, AppState, Config};
use facet_core::{extract_repository, Session};

const SEED: &str = "DefaultCommentMapper.java#getLeadingComments(ASTNode)";
const POSITIVE: &str = "DefaultCommentMapper.java#getExtendedStartPosition(ASTNode)";
const NEGATIVE: &str = "Parser.java#checkComment()";
const ITERATION_2: &str =
    r#"query(X) :- methoddec(X), contains(X,IF0), iflike(IF0,"this.*>=0"), contains(IF0,IF2), iflike(IF2,".*!=null")."#;

fn figures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/figures")
}

fn app_with(config: Config) -> (Router, Arc<AppState>) {
    let (fb, _) = extract_repository(&figures_dir()).unwrap();
    let state = AppState::new(fb, config).unwrap();
    (router(state.clone()), state)
}

fn app() -> Router {
    app_with(Config {
        source_root: Some(figures_dir()),
        ..Config::default()
    })
    .0
}

fn enc(id: &str) -> String {
    id.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'.' | b'_' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}

async fn send(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value, String) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header("content-type", "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let res = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = res.status();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    let text = String::from_utf8(bytes.to_vec()).unwrap();
    (status, serde_json::from_str(&text).unwrap_or(Value::Null), text)
}

fn start_body() -> Value {
    json!({
        "methodId": SEED,
        "lineRange": [7, 19],
        "annotatedNodeIds": [format!("{SEED}#if1"), format!("{SEED}#if3")],
        "bias": "nested-structure",
    })
}

fn result_ids(v: &Value) -> Vec<String> {
    v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap().to_string())
        .collect()
}

fn status_of<'a>(v: &'a Value, id: &str) -> &'a str {
    v["results"].as_array().unwrap().iter().find(|r| r["id"] == id).unwrap()["status"]
        .as_str()
        .unwrap()
}

#[tokio::test]
async fn health_and_browsing() {
    let app = app();
    let (status, h, _) = send(&app, "GET", "/health", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(h["status"], "ok");
    assert_eq!(h["fingerprint"].as_str().unwrap().len(), 64);

    let (_, all, _) = send(&app, "GET", "/methods", None).await;
    let (_, some, _) = send(&app, "GET", "/methods?path=Parser", None).await;
    assert!(all.as_array().unwrap().len() > some.as_array().unwrap().len());
    assert!(some
        .as_array()
        .unwrap()
        .iter()
        .all(|m| m["file"].as_str().unwrap().starts_with("Parser")));
    assert!(some.as_array().unwrap().iter().any(|m| m["id"] == NEGATIVE));

    let (status, f, _) = send(&app, "GET", &format!("/methods/{}/features", enc(SEED)), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(f["method"]["id"], SEED);
    let feats = f["features"].as_array().unwrap();
    let if1 = feats.iter().find(|n| n["id"] == format!("{SEED}#if1")).unwrap();
    assert_eq!(if1["kind"], "if");
    assert_eq!(if1["label"], "this.leadingPtr >= 0");
    assert!(if1["parent"].is_null());
    let if3 = feats.iter().find(|n| n["id"] == format!("{SEED}#if3")).unwrap();
    assert_eq!(if3["parent"], format!("{SEED}#if1"));

    let (status, e, _) = send(
        &app,
        "GET",
        &format!("/methods/{}/features", enc("Nope.java#x()")),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(e["error"], "unknown-method");
}

#[tokio::test]
async fn walkthrough_over_http() {
    let app = app();
    let (status, s, _) = send(&app, "POST", "/sessions", Some(start_body())).await;
    assert_eq!(status, StatusCode::CREATED, "{s}");
    let id = s["id"].as_str().unwrap().to_string();
    assert_eq!(s["iteration"], 1);
    assert_eq!(s["status"], "active");
    let r1 = result_ids(&s);
    assert!(r1.contains(&POSITIVE.to_string()) && r1.contains(&NEGATIVE.to_string()));
    assert_eq!(status_of(&s, SEED), "previously-positive");
    assert_eq!(status_of(&s, POSITIVE), "new");
    assert!(s["results"][0]["snippet"].as_str().unwrap().contains('{'));
    assert_eq!(s["seed"]["annotated"].as_array().unwrap().len(), 2);

    let labels = json!({"positives": [POSITIVE], "negatives": [NEGATIVE], "inspectMs": {POSITIVE: 35000}});
    let (status, s2, _) = send(&app, "POST", &format!("/sessions/{id}/labels"), Some(labels.clone())).await;
    assert_eq!(status, StatusCode::OK, "{s2}");
    assert_eq!(s2["outcome"], "refined");
    assert_eq!(s2["iteration"], 2);
    assert_eq!(s2["query"], ITERATION_2);
    let r2 = result_ids(&s2);
    assert!(r2.len() < r1.len() && r2.iter().all(|r| r1.contains(r)));
    assert!(!r2.contains(&NEGATIVE.to_string()));
    assert_eq!(status_of(&s2, POSITIVE), "previously-positive");
    assert_eq!(s2["iterations"][0]["labels"][0]["inspectMs"], 35000);

    // the same batch again changes nothing
    let (status, again, _) = send(&app, "POST", &format!("/sessions/{id}/labels"), Some(labels)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(again["outcome"], "unchanged");
    assert_eq!(again["iteration"], 2);
    assert_eq!(result_ids(&again), r2);

    let (status, shown, _) = send(&app, "GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(shown["iterations"].as_array().unwrap().len(), 2);
    assert_eq!(shown["iterations"][1]["query"], ITERATION_2);

    let (status, _, text) = send(&app, "GET", &format!("/sessions/{id}/export"), None).await;
    assert_eq!(status, StatusCode::OK);
    let exported = Session::from_json(&text).unwrap();
    assert_eq!(exported.iterations.len(), 2);
    let (fb, _) = extract_repository(&figures_dir()).unwrap();
    let replayed = exported.replay(&fb).unwrap();
    assert_eq!(
        replayed.iterations.iter().map(|i| &i.results).collect::<Vec<_>>(),
        exported.iterations.iter().map(|i| &i.results).collect::<Vec<_>>()
    );
}

#[tokio::test]
async fn label_errors() {
    let app = app();
    let (_, s, _) = send(&app, "POST", "/sessions", Some(start_body())).await;
    let id = s["id"].as_str().unwrap().to_string();
    let url = format!("/sessions/{id}/labels");

    let (status, e, _) = send(&app, "POST", &url, Some(json!({"positives": ["Nope.java#x()"]}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "not-in-results");

    let (status, e, _) = send(&app, "POST", &url, Some(json!({}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "empty-batch");

    let (status, e, _) = send(&app, "POST", &url, Some(json!({"positives": 3}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "invalid-body");

    // the same method on both sides of one batch
    let (status, e, _) = send(
        &app,
        "POST",
        &url,
        Some(json!({"positives": [POSITIVE], "negatives": [POSITIVE]})),
    )
    .await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(e["error"], "inconsistent-labels");
    assert_eq!(e["reports"][0]["kind"], "conflict");
    assert_eq!(e["reports"][0]["method"], POSITIVE);

    // a refused batch leaves the session as it was
    let (_, after, _) = send(&app, "GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(after["iteration"], 1);
    assert!(after["iterations"][0]["labels"].as_array().unwrap().is_empty());

    // flipping an earlier label
    send(
        &app,
        "POST",
        &url,
        Some(json!({"positives": [POSITIVE], "negatives": [NEGATIVE]})),
    )
    .await;
    let (status, e, _) = send(&app, "POST", &url, Some(json!({"negatives": [POSITIVE]}))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(e["reports"][0]["positive_iterations"], json!([1]));

    let (status, e, _) = send(&app, "GET", "/sessions/s999", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(e["error"], "unknown-session");
    let (status, _, _) = send(
        &app,
        "POST",
        "/sessions/s999/labels",
        Some(json!({"positives": [SEED]})),
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn start_errors() {
    let app = app();
    let mut body = start_body();
    body["annotatedNodeIds"] = json!([]);
    let (status, e, _) = send(&app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "invalid-seed");

    let mut body = start_body();
    body["methodId"] = json!("Nope.java#x()");
    let (status, _, _) = send(&app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::NOT_FOUND);

    let mut body = start_body();
    body["bias"] = json!("sideways");
    let (status, e, _) = send(&app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "invalid-body");

    let mut body = start_body();
    body["annotatedNodeIds"] = json!(["Parser.java#checkComment()#if1"]);
    let (status, e, _) = send(&app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(e["error"], "invalid-seed");
}

#[tokio::test]
async fn sessions_survive_restart() {
    let dir = tempfile::tempdir().unwrap();
    let config = Config {
        session_dir: Some(dir.path().to_path_buf()),
        ..Config::default()
    };
    let (app, _) = app_with(config.clone());
    let (_, s, _) = send(&app, "POST", "/sessions", Some(start_body())).await;
    let id = s["id"].as_str().unwrap().to_string();
    send(
        &app,
        "POST",
        &format!("/sessions/{id}/labels"),
        Some(json!({"positives": [POSITIVE], "negatives": [NEGATIVE]})),
    )
    .await;
    assert!(dir.path().join(format!("{id}.json")).exists());

    let (app, _) = app_with(config);
    let (status, s, _) = send(&app, "GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(s["query"], ITERATION_2);
    // new ids do not collide with restored ones
    let (_, fresh, _) = send(&app, "POST", "/sessions", Some(start_body())).await;
    assert_ne!(fresh["id"], id);
}

#[tokio::test]
async fn concurrent_labels_are_serialized() {
    let app = app();
    let (_, s, _) = send(&app, "POST", "/sessions", Some(start_body())).await;
    let id = s["id"].as_str().unwrap().to_string();
    let url = format!("/sessions/{id}/labels");
    let body = json!({"positives": [POSITIVE], "negatives": [NEGATIVE]});
    let (a, b) = tokio::join!(
        send(&app, "POST", &url, Some(body.clone())),
        send(&app, "POST", &url, Some(body))
    );
    let mut outcomes = vec![
        a.1["outcome"].as_str().unwrap().to_string(),
        b.1["outcome"].as_str().unwrap().to_string(),
    ];
    outcomes.sort();
    assert_eq!(outcomes, ["refined", "unchanged"]);
    let (_, s, _) = send(&app, "GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(s["iteration"], 2);
}

#[tokio::test]
async fn serves_the_ui() {
    let app = app();
    let res = app
        .clone()
        .oneshot(Request::get("/").body(Body::empty()).unwrap())
        .await
        .unwrap();
    assert_eq!(res.status(), StatusCode::OK);
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    assert!(String::from_utf8_lossy(&bytes).contains("/sessions"));

    let assets = tempfile::tempdir().unwrap();
    std::fs::write(assets.path().join("index.html"), "<p>built ui</p>").unwrap();
    let (app, _) = app_with(Config {
        assets: Some(assets.path().to_path_buf()),
        ..Config::default()
    });
    let res = app
        .clone()
        .oneshot(Request::get("/").body(Body::empty()).unwrap())
        .await
        .unwrap();
    assert_eq!(res.status(), StatusCode::OK);
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    assert_eq!(&bytes[..], b"<p>built ui</p>");
    let (status, _, _) = send(&app, "GET", "/health", None).await;
    assert_eq!(status, StatusCode::OK);
}
