use axum::body::{to_bytes, Body};
use axum::http::{Request, StatusCode};
use fourbar_interface::http::router;
use fourbar_interface::wire::ConfigRecord;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn send(req: Request<Body>) -> (StatusCode, Vec<u8>) {
    let resp = router().oneshot(req).await.unwrap();
    let status = resp.status();
    (status, to_bytes(resp.into_body(), usize::MAX).await.unwrap().to_vec())
}

async fn get(uri: &str) -> (StatusCode, Value) {
    let (s, b) = send(Request::get(uri).body(Body::empty()).unwrap()).await;
    (s, serde_json::from_slice(&b).unwrap())
}

fn post_req(uri: &str, body: &str) -> Request<Body> {
    Request::post(uri).header("content-type", "application/json").body(Body::from(body.to_string())).unwrap()
}

#[tokio::test]
async fn classify_route() {
    let (s, v) = get("/api/classify?lengths=2,1,2,1").await;
    assert_eq!((s, v["class"].as_str()), (StatusCode::OK, Some("isogram")));
    let (s, v) = get("/api/classify?lengths=5,1,1,1").await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["error"], "invalid_lengths");
    assert!(v["detail"].is_string());
    let (s, v) = get("/api/classify?lengths=1,1,x,1").await;
    assert_eq!((s, v["error"].as_str()), (StatusCode::BAD_REQUEST, Some("bad_input")));
    assert_eq!(get("/api/classify").await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn trace_route() {
    let body = json!({"lengths": [1, 1, 1, 1], "branch_id": 1, "samples": 2}).to_string();
    let (s, b) = send(post_req("/api/trace", &body)).await;
    assert_eq!(s, StatusCode::OK);
    let v: Value = serde_json::from_slice(&b).unwrap();
    assert_eq!(v["branch"]["branch_id"], 1);
    let recs: Vec<ConfigRecord> = serde_json::from_value(v["records"].clone()).unwrap();
    assert_eq!(recs.len(), 2);
    let l = fourbar::validate_lengths(1.0, 1.0, 1.0, 1.0).unwrap();
    for r in recs {
        let c = fourbar::solver::Configuration::from_tangents(&l, r.tangents().unwrap());
        assert!(c.closure_residual(&l) < 1e-12);
    }
    // the same request twice gives the same bytes
    assert_eq!(send(post_req("/api/trace", &body)).await.1, b);

    for (bad, status) in [
        (r#"{"lengths":[1,1,1,1],"branch_id":1,"samples":1}"#, StatusCode::BAD_REQUEST),
        (r#"{"lengths":[1,1,1,1],"branch_id":9,"samples":3}"#, StatusCode::BAD_REQUEST),
        (r#"{"lengths":[1,1,1],"branch_id":1,"samples":3}"#, StatusCode::BAD_REQUEST),
        (r#"{"lengths":[1,1,1,1],"branch_id":1,"samples":3,"coordinate":"polar"}"#, StatusCode::BAD_REQUEST),
        ("not json", StatusCode::BAD_REQUEST),
        (r#"{"lengths":[5,1,1,1],"branch_id":1,"samples":3}"#, StatusCode::UNPROCESSABLE_ENTITY),
    ] {
        let (s, b) = send(post_req("/api/trace", bad)).await;
        assert_eq!(s, status, "{bad}");
        let v: Value = serde_json::from_slice(&b).unwrap();
        assert!(v["error"].is_string() && v["detail"].is_string());
    }
}

#[tokio::test]
async fn solve_route() {
    let (s, b) = send(post_req("/api/solve", r#"{"lengths":[2,1,2,1],"x":{"num":1,"den":1}}"#)).await;
    assert_eq!(s, StatusCode::OK);
    let v: Value = serde_json::from_slice(&b).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 2);
    let (s, _) = send(post_req("/api/solve", r#"{"lengths":[2,1,2,1],"x":{"num":0,"den":0}}"#)).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn infinity_and_report_routes() {
    let (s, v) = get("/api/infinity?lengths=1,1,1,1").await;
    assert_eq!(s, StatusCode::OK);
    assert!(v["solutions"].as_array().unwrap().iter().all(|x| x["kind"] == "circle" && x["branch_id"].is_u64()));
    let (s, v) = get("/api/report?lengths=2,3,4,6").await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(v["class"], "elliptic");
    assert_eq!(v["grashof"]["holds"], false);
    assert_eq!(v["reachable"]["infinity"].as_array().unwrap().len(), 4);
    assert_eq!(get("/api/report?lengths=1,1,1,9").await.0, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn cors_is_permissive() {
    let req = Request::get("/api/classify?lengths=1,1,1,1").header("origin", "http://example.test").body(Body::empty()).unwrap();
    let resp = router().oneshot(req).await.unwrap();
    assert_eq!(resp.headers()["access-control-allow-origin"], "*");
}
