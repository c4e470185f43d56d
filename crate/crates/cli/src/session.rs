//! Interactive sessions: a human plays one side, a machine strategy the other.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use schmidt_core::adversary::{bob_avoid_strategy, AdversaryError, Board, BobAvoidStrategy, FoilController};
use schmidt_core::game::{trace_records, validate_turn, GameHistory, GameParams, Role, Strategy, TraceRecord};
use schmidt_core::vitali::{alice_strategy, build_target_tree, TargetTree, TreeMode};
use schmidt_core::{Interval, Rational, Violation};

pub const DEFAULT_DEPTH_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SessionMode {
    HumanBobVsAliceTree,
    HumanAliceVsFoil,
    HumanAliceVsCantor,
}

impl SessionMode {
    pub fn name(self) -> &'static str {
        match self {
            SessionMode::HumanBobVsAliceTree => "human-bob-vs-alice-tree",
            SessionMode::HumanAliceVsFoil => "human-alice-vs-foil",
            SessionMode::HumanAliceVsCantor => "human-alice-vs-cantor",
        }
    }

    fn human(self) -> Role {
        match self {
            SessionMode::HumanBobVsAliceTree => Role::Bob,
            _ => Role::Alice,
        }
    }
}

impl fmt::Display for SessionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Open,
    Finished,
    IllegalAttempted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Turn {
    Human,
    Machine,
    None,
}

/// Body of `POST /sessions`. Rationals are `"p/q"` strings.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct CreateRequest {
    pub alpha: String,
    pub beta: String,
    pub mode: String,
    pub depth_limit: Option<usize>,
    /// Bob's opening in the modes where the machine plays Bob; `[0, 1]` by default.
    pub first_move: Option<WireInterval>,
    /// Points the Cantor-mode Bob avoids, `avoid[n - 1]` in round `n`.
    #[serde(default)]
    pub avoid: Vec<String>,
}

/// Body of `POST /sessions/{id}/moves`.
#[derive(Debug, Clone, Deserialize)]
pub struct MoveRequest {
    pub lo: String,
    pub hi: String,
    pub board: Option<Board>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireInterval {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardState {
    pub board: String,
    pub moves: Vec<TraceRecord>,
    pub required_length: Option<Rational>,
    pub enclosing: Option<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionState {
    pub id: String,
    pub alpha: Rational,
    pub beta: Rational,
    pub mode: SessionMode,
    pub depth_limit: usize,
    pub status: Status,
    pub turn: Turn,
    pub human_role: Role,
    /// Board awaiting the human's move; `None` once finished.
    pub next_board: Option<String>,
    pub round: usize,
    pub required_length: Option<Rational>,
    pub enclosing: Option<Interval>,
    pub boards: Vec<BoardState>,
    /// The foiling shift, once fixed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reply {
    pub board: String,
    pub role: Role,
    pub interval: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveResponse {
    pub accepted: Reply,
    pub replies: Vec<Reply>,
    pub state: SessionState,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SessionError {
    BadRequest(String),
    Illegal(Violation),
    NotYourTurn(String),
    Machine(String),
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SessionError::BadRequest(m) => write!(f, "bad request: {m}"),
            SessionError::Illegal(v) => write!(f, "illegal move: {v}"),
            SessionError::NotYourTurn(m) => write!(f, "not your turn: {m}"),
            SessionError::Machine(m) => write!(f, "machine strategy failed: {m}"),
        }
    }
}

impl std::error::Error for SessionError {}

fn parse_rational(field: &str, s: &str) -> Result<Rational, SessionError> {
    Rational::from_str(s).map_err(|e| SessionError::BadRequest(format!("{field}: {e}")))
}

fn parse_interval(lo: &str, hi: &str) -> Result<Interval, SessionError> {
    let (lo, hi) = (parse_rational("lo", lo)?, parse_rational("hi", hi)?);
    Interval::new(lo, hi).map_err(|e| SessionError::BadRequest(e.to_string()))
}

const MAIN_BOARD: &str = "main";

enum Engine {
    /// The tree is built from the human's opening move.
    AliceTree { history: GameHistory, tree: Option<TargetTree> },
    Foil { controller: FoilController },
    Cantor { history: GameHistory, bob: BobAvoidStrategy },
}

pub struct Session {
    id: String,
    params: GameParams,
    mode: SessionMode,
    depth_limit: usize,
    engine: Engine,
}

impl Session {
    pub fn create(id: String, request: &CreateRequest) -> Result<Session, SessionError> {
        let alpha = parse_rational("alpha", &request.alpha)?;
        let beta = parse_rational("beta", &request.beta)?;
        let params = GameParams::new(alpha, beta).map_err(|e| SessionError::BadRequest(e.to_string()))?;
        let mode = serde_json::from_value::<SessionMode>(serde_json::Value::String(request.mode.clone()))
            .map_err(|_| SessionError::BadRequest(format!("unknown mode {:?}", request.mode)))?;
        let depth_limit = request.depth_limit.unwrap_or(DEFAULT_DEPTH_LIMIT);
        if depth_limit == 0 {
            return Err(SessionError::BadRequest("depth_limit must be at least 1".into()));
        }
        let first_move = match &request.first_move {
            Some(w) => parse_interval(&w.lo, &w.hi)?,
            None => Interval::new(Rational::zero(), Rational::one()).expect("unit interval"),
        };
        let bad = |e: AdversaryError| SessionError::BadRequest(e.to_string());
        let engine = match mode {
            SessionMode::HumanBobVsAliceTree => {
                // Reject parameters the tree builder cannot handle before the first move.
                build_target_tree(&[first_move], &params, 1, TreeMode::Single)
                    .map_err(|e| SessionError::BadRequest(e.to_string()))?;
                Engine::AliceTree { history: GameHistory::new(params.clone()), tree: None }
            }
            SessionMode::HumanAliceVsFoil => Engine::Foil {
                controller: FoilController::new(&params, first_move, depth_limit).map_err(bad)?,
            },
            SessionMode::HumanAliceVsCantor => {
                let avoid = request
                    .avoid
                    .iter()
                    .map(|s| parse_rational("avoid", s))
                    .collect::<Result<Vec<_>, _>>()?;
                let bob = bob_avoid_strategy(avoid, first_move, &params).map_err(bad)?;
                let mut history = GameHistory::new(params.clone());
                let open = bob.propose(&history).map_err(|e| SessionError::Machine(e.to_string()))?;
                history.push(Role::Bob, open).expect("an opening move is always legal");
                Engine::Cantor { history, bob }
            }
        };
        Ok(Session { id, params, mode, depth_limit, engine })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    fn is_finished(&self) -> bool {
        match &self.engine {
            Engine::AliceTree { history, .. } | Engine::Cantor { history, .. } => {
                history.alice_moves().count() >= self.depth_limit
            }
            Engine::Foil { controller } => controller.is_finished(),
        }
    }

    fn board_state(name: &str, history: &GameHistory) -> BoardState {
        BoardState {
            board: name.to_string(),
            moves: trace_records(history),
            required_length: history.required_length(),
            enclosing: history.last().cloned(),
        }
    }

    pub fn state(&self) -> SessionState {
        let finished = self.is_finished();
        let (boards, next_board, q) = match &self.engine {
            Engine::AliceTree { history, .. } | Engine::Cantor { history, .. } => {
                (vec![Self::board_state(MAIN_BOARD, history)], MAIN_BOARD.to_string(), None)
            }
            Engine::Foil { controller } => (
                [Board::Primary, Board::Mirror]
                    .iter()
                    .map(|&b| Self::board_state(&b.to_string(), controller.history(b)))
                    .collect(),
                controller.next_board().to_string(),
                controller.q().cloned(),
            ),
        };
        let current = boards.iter().find(|b| b.board == next_board).expect("next board exists");
        SessionState {
            id: self.id.clone(),
            alpha: self.params.alpha().clone(),
            beta: self.params.beta().clone(),
            mode: self.mode,
            depth_limit: self.depth_limit,
            status: if finished { Status::Finished } else { Status::Open },
            turn: if finished { Turn::None } else { Turn::Human },
            human_role: self.mode.human(),
            next_board: (!finished).then(|| next_board.clone()),
            round: current.moves.len() / 2,
            required_length: if finished { None } else { current.required_length.clone() },
            enclosing: if finished { None } else { current.enclosing.clone() },
            boards,
            q,
        }
    }

    /// Applies the human's move and the machine's replies. On error the
    /// session is unchanged.
    pub fn submit(&mut self, request: &MoveRequest) -> Result<MoveResponse, SessionError> {
        let interval = parse_interval(&request.lo, &request.hi)?;
        if self.is_finished() {
            return Err(SessionError::NotYourTurn("the game is finished".into()));
        }
        let depth_limit = self.depth_limit;
        let human = self.mode.human();
        let accepted_on = |board: &str| Reply { board: board.to_string(), role: human, interval: interval.clone() };
        let (accepted, replies) = match &mut self.engine {
            Engine::AliceTree { history, tree } => {
                single_board(request.board)?;
                validate_turn(history, Role::Bob, &interval).map_err(SessionError::Illegal)?;
                if history.is_empty() {
                    let built = build_target_tree(&[interval.clone()], &self.params, (depth_limit - 1).max(1), TreeMode::Single)
                        .map_err(|e| SessionError::Machine(e.to_string()))?;
                    *tree = Some(built);
                }
                let tree_ref = tree.as_ref().expect("tree built on the opening move");
                let mut next = history.clone();
                next.push(Role::Bob, interval.clone()).map_err(SessionError::Illegal)?;
                let reply = alice_strategy(tree_ref).propose(&next).map_err(|e| SessionError::Machine(e.to_string()))?;
                next.push(Role::Alice, reply.clone()).map_err(|v| SessionError::Machine(v.to_string()))?;
                *history = next;
                let reply = Reply { board: MAIN_BOARD.into(), role: Role::Alice, interval: reply };
                (accepted_on(MAIN_BOARD), vec![reply])
            }
            Engine::Cantor { history, bob } => {
                single_board(request.board)?;
                validate_turn(history, Role::Alice, &interval).map_err(SessionError::Illegal)?;
                let mut next = history.clone();
                next.push(Role::Alice, interval.clone()).map_err(SessionError::Illegal)?;
                let mut replies = Vec::new();
                if next.alice_moves().count() < depth_limit {
                    let b = bob.propose(&next).map_err(|e| SessionError::Machine(e.to_string()))?;
                    next.push(Role::Bob, b.clone()).map_err(|v| SessionError::Machine(v.to_string()))?;
                    replies.push(Reply { board: MAIN_BOARD.into(), role: Role::Bob, interval: b });
                }
                *history = next;
                (accepted_on(MAIN_BOARD), replies)
            }
            Engine::Foil { controller } => {
                let expected = controller.next_board();
                let board = request.board.unwrap_or(expected);
                if board != expected {
                    return Err(SessionError::NotYourTurn(format!("expected a move on the {expected} board")));
                }
                validate_turn(controller.history(board), Role::Alice, &interval).map_err(SessionError::Illegal)?;
                let reply = controller.submit(board, interval.clone()).map_err(|e| match e {
                    AdversaryError::OracleIllegalMove { violation, .. } => SessionError::Illegal(violation),
                    AdversaryError::WrongBoard { .. } | AdversaryError::Finished => {
                        SessionError::NotYourTurn(e.to_string())
                    }
                    other => SessionError::Machine(other.to_string()),
                })?;
                let replies = reply
                    .map(|(b, i)| Reply { board: b.to_string(), role: Role::Bob, interval: i })
                    .into_iter()
                    .collect();
                (accepted_on(&board.to_string()), replies)
            }
        };
        Ok(MoveResponse { accepted, replies, state: self.state() })
    }
}

fn single_board(board: Option<Board>) -> Result<(), SessionError> {
    match board {
        Some(b) => Err(SessionError::BadRequest(format!("this mode has a single board, got {b}"))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn create(alpha: &str, beta: &str, mode: &str) -> Session {
        let request = CreateRequest {
            alpha: alpha.into(),
            beta: beta.into(),
            mode: mode.into(),
            depth_limit: Some(3),
            ..Default::default()
        };
        Session::create("s".into(), &request).unwrap()
    }

    fn mv(lo: &str, hi: &str) -> MoveRequest {
        MoveRequest { lo: lo.into(), hi: hi.into(), board: None }
    }

    #[test]
    fn tree_session_answers_with_designated_interval() {
        let mut s = create("1/20", "1/2", "human-bob-vs-alice-tree");
        let state = s.state();
        assert_eq!((state.turn, state.required_length.clone(), state.round), (Turn::Human, None, 0));
        let r = s.submit(&mv("0/1", "1/1")).unwrap();
        assert_eq!(r.replies[0].interval.length(), Rational::new(1, 20));
        assert_eq!(r.replies[0].interval.center(), Rational::new(1, 2));
        assert_eq!(r.state.required_length, Some(Rational::new(1, 40)));
    }

    #[test]
    fn illegal_move_leaves_state_unchanged() {
        let mut s = create("1/20", "1/2", "human-bob-vs-alice-tree");
        s.submit(&mv("0", "1")).unwrap();
        let before = s.state();
        let err = s.submit(&mv("0", "1/2")).unwrap_err();
        assert_eq!(err, SessionError::Illegal(Violation::LengthMismatch));
        assert_eq!(s.state(), before);
    }

    #[test]
    fn finished_after_depth_limit() {
        let mut s = create("1/3", "1/4", "human-alice-vs-cantor");
        for _ in 0..3 {
            let st = s.state();
            let enc = st.enclosing.unwrap();
            let len = st.required_length.unwrap();
            let a = Interval::with_length(enc.lo().clone(), &len);
            s.submit(&mv(&a.lo().to_string(), &a.hi().to_string())).unwrap();
        }
        let st = s.state();
        assert_eq!((st.status, st.turn), (Status::Finished, Turn::None));
        assert!(matches!(s.submit(&mv("0", "1")), Err(SessionError::NotYourTurn(_))));
    }

    #[test]
    fn rejects_bad_parameters() {
        let request = |alpha: &str, beta: &str, mode: &str| CreateRequest {
            alpha: alpha.into(),
            beta: beta.into(),
            mode: mode.into(),
            ..Default::default()
        };
        for (a, b, m) in [
            ("1/2", "1/4", "human-bob-vs-alice-tree"),
            ("1/4", "1/2", "human-alice-vs-foil"),
            ("1/2", "1/2", "human-alice-vs-cantor"),
            ("1/2", "1/4", "chess"),
            ("x", "1/4", "human-alice-vs-foil"),
        ] {
            assert!(matches!(Session::create("s".into(), &request(a, b, m)), Err(SessionError::BadRequest(_))));
        }
    }
}
