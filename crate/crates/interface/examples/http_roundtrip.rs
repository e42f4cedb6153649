//! Drives the HTTP routes in-process, the way the explorer front end does,
//! without opening a socket.

use axum::body::{to_bytes, Body};
use axum::http::Request;
use fourbar_interface::http::router;
use tower::ServiceExt;

async fn call(method: &str, uri: &str, body: &str) -> (u16, String) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = router().oneshot(req).await.unwrap();
    let status = resp.status().as_u16();
    let bytes = to_bytes(resp.into_body(), usize::MAX).await.unwrap();
    (status, String::from_utf8_lossy(&bytes).into_owned())
}

#[tokio::main(flavor = "current_thread")]
async fn main() {
    let requests = [
        ("GET", "/api/classify?lengths=2,1,2,1", ""),
        ("GET", "/api/classify?lengths=5,1,1,1", ""),
        ("POST", "/api/trace", r#"{"lengths":[1,1,1,1],"branch_id":1,"samples":2}"#),
        ("POST", "/api/solve", r#"{"lengths":[2,1,2,1],"x":{"num":1,"den":1}}"#),
        ("GET", "/api/report?lengths=1,2,3,3.5", ""),
    ];
    for (method, uri, body) in requests {
        let (status, text) = call(method, uri, body).await;
        let shown: String = text.chars().take(160).collect();
        println!("{method} {uri} -> {status}\n  {shown}{}", if text.len() > 160 { " ..." } else { "" });
    }
}
