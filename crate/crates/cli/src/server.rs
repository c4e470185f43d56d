//! JSON-over-HTTP session service.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::{json, Value};
use tokio::sync::Mutex;

use crate::session::{CreateRequest, MoveRequest, Session, SessionError, Status};

type Shared = Arc<Mutex<Session>>;

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, Shared>>>,
}

impl AppState {
    fn get(&self, id: &str) -> Option<Shared> {
        self.sessions.read().expect("session map lock").get(id).cloned()
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/moves", post(submit_move))
        .with_state(state)
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(AppState::default())).await
}

fn error(status: StatusCode, body: Value) -> Response {
    (status, Json(body)).into_response()
}

fn unknown(id: &str) -> Response {
    error(StatusCode::NOT_FOUND, json!({ "error": "unknown-session", "id": id }))
}

fn bad_json(rejection: JsonRejection) -> Response {
    error(StatusCode::BAD_REQUEST, json!({ "error": "bad-request", "message": rejection.body_text() }))
}

async fn create_session(
    State(state): State<AppState>,
    body: Result<Json<CreateRequest>, JsonRejection>,
) -> Response {
    let Json(request) = match body {
        Ok(b) => b,
        Err(r) => return bad_json(r),
    };
    let id = uuid::Uuid::new_v4().to_string();
    match Session::create(id.clone(), &request) {
        Ok(session) => {
            let snapshot = session.state();
            state.sessions.write().expect("session map lock").insert(id, Arc::new(Mutex::new(session)));
            (StatusCode::CREATED, Json(snapshot)).into_response()
        }
        Err(e) => error(StatusCode::UNPROCESSABLE_ENTITY, json!({ "error": "invalid-params", "message": e.to_string() })),
    }
}

async fn get_session(State(state): State<AppState>, Path(id): Path<String>) -> Response {
    let Some(session) = state.get(&id) else { return unknown(&id) };
    let snapshot = session.lock().await.state();
    Json(snapshot).into_response()
}

async fn submit_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<MoveRequest>, JsonRejection>,
) -> Response {
    let Some(session) = state.get(&id) else { return unknown(&id) };
    let Json(request) = match body {
        Ok(b) => b,
        Err(r) => return bad_json(r),
    };
    // One in-flight move per session.
    let Ok(mut guard) = session.try_lock_owned() else {
        return error(StatusCode::CONFLICT, json!({ "error": "move-in-progress" }));
    };
    let outcome = tokio::task::spawn_blocking(move || {
        let result = guard.submit(&request);
        (result, guard.state())
    })
    .await;
    let (result, snapshot) = match outcome {
        Ok(r) => r,
        Err(e) => return error(StatusCode::INTERNAL_SERVER_ERROR, json!({ "error": "internal", "message": e.to_string() })),
    };
    match result {
        Ok(response) => Json(response).into_response(),
        Err(SessionError::Illegal(violation)) => error(
            StatusCode::UNPROCESSABLE_ENTITY,
            json!({
                "error": "illegal-move",
                "status": Status::IllegalAttempted,
                "violation": violation,
                "state": snapshot,
            }),
        ),
        Err(SessionError::NotYourTurn(message)) => {
            error(StatusCode::CONFLICT, json!({ "error": "not-your-turn", "message": message }))
        }
        Err(SessionError::BadRequest(message)) => {
            error(StatusCode::BAD_REQUEST, json!({ "error": "bad-request", "message": message }))
        }
        Err(SessionError::Machine(message)) => {
            error(StatusCode::INTERNAL_SERVER_ERROR, json!({ "error": "machine-failed", "message": message }))
        }
    }
}
