//! HTTP/JSON service.
//!
//! | route | input |
//! |---|---|
//! | `GET /api/classify` | `?lengths=a,b,c,d[&tol=T]` |
//! | `POST /api/trace` | [`TraceRequest`] |
//! | `POST /api/solve` | [`SolveRequest`] |
//! | `GET /api/infinity` | `?lengths=…` |
//! | `GET /api/report` | `?lengths=…` |
//!
//! Errors are `{error, detail}` with status 400 for malformed requests and
//! 422 for lengths that do not form a linkage. Handlers keep no state, so
//! identical requests get byte-identical responses.

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Json, Query};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;

use crate::api::{self, ApiError, ApiResult, SolveRequest, TraceRequest};

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self.body())).into_response()
    }
}

fn reply<T: Serialize>(r: ApiResult<T>) -> Response {
    match r {
        Ok(v) => Json(v).into_response(),
        Err(e) => e.into_response(),
    }
}

#[derive(Debug, Deserialize)]
struct LengthsQuery {
    lengths: String,
    tol: Option<f64>,
}

fn query_lengths(q: Result<Query<LengthsQuery>, QueryRejection>) -> ApiResult<([f64; 4], Option<f64>)> {
    let Query(q) = q.map_err(|e| ApiError::BadInput(e.body_text()))?;
    Ok((api::parse_lengths(&q.lengths)?, q.tol))
}

fn body<T>(b: Result<Json<T>, JsonRejection>) -> ApiResult<T> {
    b.map(|Json(v)| v).map_err(|e| ApiError::BadInput(e.body_text()))
}

async fn classify(q: Result<Query<LengthsQuery>, QueryRejection>) -> Response {
    reply(query_lengths(q).and_then(|(l, tol)| api::classify(l, tol)))
}

async fn trace(b: Result<Json<TraceRequest>, JsonRejection>) -> Response {
    let req = match body(b) {
        Ok(r) => r,
        Err(e) => return e.into_response(),
    };
    // large traces are CPU bound
    match tokio::task::spawn_blocking(move || api::trace(&req)).await {
        Ok(r) => reply(r),
        Err(e) => ApiError::Internal(e.to_string()).into_response(),
    }
}

async fn solve(b: Result<Json<SolveRequest>, JsonRejection>) -> Response {
    reply(body(b).and_then(|r| api::solve(&r)))
}

async fn infinity(q: Result<Query<LengthsQuery>, QueryRejection>) -> Response {
    reply(query_lengths(q).and_then(|(l, _)| api::infinity(l)))
}

async fn report(q: Result<Query<LengthsQuery>, QueryRejection>) -> Response {
    reply(query_lengths(q).and_then(|(l, _)| api::report(l)))
}

pub fn router() -> Router {
    Router::new()
        .route("/api/classify", get(classify))
        .route("/api/trace", post(trace))
        .route("/api/solve", post(solve))
        .route("/api/infinity", get(infinity))
        .route("/api/report", get(report))
        .layer(CorsLayer::permissive())
}
