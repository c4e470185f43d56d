//! Rules of the (alpha, beta)-game on the real line: parameters, legality,
//! the strategy contract and a finite-depth game runner.
//!
//! Bob opens with any closed interval `B_0` of length `rho`. Alice answers
//! with `A_0 ⊆ B_0` of length `alpha * rho`, Bob with `B_1 ⊆ A_0` of length
//! `beta * |A_0|`, and so on. A run truncated after `depth` rounds reports the
//! last Alice interval as its outcome window.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::Interval;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(Rational),
    #[error("beta must lie strictly between 0 and 1, got {0}")]
    BetaOutOfRange(Rational),
}

/// The pair `(alpha, beta)`, both strictly inside `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GameParams {
    alpha: Rational,
    beta: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: Rational,
    beta: Rational,
}

impl<'de> Deserialize<'de> for GameParams {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawParams::deserialize(deserializer)?;
        GameParams::new(raw.alpha, raw.beta).map_err(serde::de::Error::custom)
    }
}

impl GameParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self, ParamsError> {
        let unit = |x: &Rational| x.is_positive() && x < &Rational::one();
        if !unit(&alpha) {
            return Err(ParamsError::AlphaOutOfRange(alpha));
        }
        if !unit(&beta) {
            return Err(ParamsError::BetaOutOfRange(beta));
        }
        Ok(GameParams { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `alpha * beta`, the per-round contraction.
    pub fn contraction(&self) -> Rational {
        &self.alpha * &self.beta
    }

    /// Length of Bob's move in round `k` when the opening has length `rho`.
    pub fn bob_length(&self, rho: &Rational, round: usize) -> Rational {
        rho * self.contraction().pow(round as i32)
    }

    /// Length of Alice's move in round `k` when the opening has length `rho`.
    pub fn alice_length(&self, rho: &Rational, round: usize) -> Rational {
        &self.alpha * self.bob_length(rho, round)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "B")]
    Bob,
    #[serde(rename = "A")]
    Alice,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Bob => Role::Alice,
            Role::Alice => Role::Bob,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Bob => "Bob",
            Role::Alice => "Alice",
        })
    }
}

/// Which rule a proposed move breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Error)]
#[serde(rename_all = "kebab-case")]
pub enum Violation {
    #[error("length-mismatch")]
    LengthMismatch,
    #[error("not-nested")]
    NotNested,
    #[error("wrong-turn")]
    WrongTurn,
    #[error("empty-interval")]
    EmptyInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub role: Role,
    pub interval: Interval,
}

/// A legal sequence of alternating moves, Bob first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameHistory {
    params: GameParams,
    moves: Vec<Move>,
}

impl GameHistory {
    pub fn new(params: GameParams) -> Self {
        GameHistory { params, moves: Vec::new() }
    }

    /// Replays `moves`, rejecting the first illegal one.
    pub fn from_moves(
        params: GameParams,
        moves: impl IntoIterator<Item = Move>,
    ) -> Result<Self, (usize, Violation)> {
        let mut history = GameHistory::new(params);
        for (i, m) in moves.into_iter().enumerate() {
            history.push(m.role, m.interval).map_err(|v| (i, v))?;
        }
        Ok(history)
    }

    pub fn params(&self) -> &GameParams {
        &self.params
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn next_role(&self) -> Role {
        if self.moves.len() % 2 == 0 {
            Role::Bob
        } else {
            Role::Alice
        }
    }

    /// Round index of the next move (`B_k` and `A_k` share round `k`).
    pub fn next_round(&self) -> usize {
        self.moves.len() / 2
    }

    pub fn last(&self) -> Option<&Interval> {
        self.moves.last().map(|m| &m.interval)
    }

    pub fn first_move(&self) -> Option<&Interval> {
        self.moves.first().map(|m| &m.interval)
    }

    /// Length of Bob's opening move.
    pub fn rho(&self) -> Option<Rational> {
        self.first_move().map(Interval::length)
    }

    pub fn bob_moves(&self) -> impl Iterator<Item = &Interval> {
        self.moves.iter().filter(|m| m.role == Role::Bob).map(|m| &m.interval)
    }

    pub fn alice_moves(&self) -> impl Iterator<Item = &Interval> {
        self.moves.iter().filter(|m| m.role == Role::Alice).map(|m| &m.interval)
    }

    /// The last Alice interval, i.e. the certified window around the outcome point.
    pub fn outcome_window(&self) -> Option<&Interval> {
        self.moves.iter().rev().find(|m| m.role == Role::Alice).map(|m| &m.interval)
    }

    /// Exact length the next move must have; `None` for Bob's unconstrained opening.
    pub fn required_length(&self) -> Option<Rational> {
        let last = self.last()?;
        let factor = match self.next_role() {
            Role::Alice => self.params.alpha(),
            Role::Bob => self.params.beta(),
        };
        Some(factor * last.length())
    }

    /// Validates and appends a move by `role`.
    pub fn push(&mut self, role: Role, interval: Interval) -> Result<(), Violation> {
        validate_turn(self, role, &interval)?;
        self.moves.push(Move { role, interval });
        Ok(())
    }

    /// Drops the trailing move, if any.
    pub fn pop(&mut self) -> Option<Move> {
        self.moves.pop()
    }
}

/// Checks `proposed` as the next move of whoever is on turn.
pub fn validate_move(history: &GameHistory, proposed: &Interval) -> Result<(), Violation> {
    if proposed.is_degenerate() {
        return Err(Violation::EmptyInterval);
    }
    let Some(last) = history.last() else {
        return Ok(());
    };
    let required = history.required_length().expect("non-empty history");
    if proposed.length() != required {
        return Err(Violation::LengthMismatch);
    }
    if !last.contains(proposed) {
        return Err(Violation::NotNested);
    }
    Ok(())
}

/// As [`validate_move`], additionally requiring that `role` is on turn.
pub fn validate_turn(history: &GameHistory, role: Role, proposed: &Interval) -> Result<(), Violation> {
    if history.next_role() != role {
        return Err(Violation::WrongTurn);
    }
    validate_move(history, proposed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("opening move {0} is not covered by any seed of the target tree")]
    SeedMismatch(Interval),
    #[error("round {round} is beyond the materialized depth {depth}")]
    DepthExceeded { round: usize, depth: usize },
    #[error("strategy cannot open the game")]
    NoOpening,
    #[error("no admissible move: {0}")]
    NoCandidate(String),
}

/// A deterministic rule mapping a history (ending with the opponent's move,
/// or empty for Bob's opening) to the next move.
pub trait Strategy {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError>;
}

impl<S: Strategy + ?Sized> Strategy for &S {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError> {
        (**self).propose(history)
    }
}

impl<S: Strategy + ?Sized> Strategy for Box<S> {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError> {
        (**self).propose(history)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("{role} proposed an illegal move in round {round}: {violation}")]
    IllegalStrategyMove { role: Role, round: usize, violation: Violation },
    #[error("{role}'s strategy failed in round {round}: {source}")]
    Strategy {
        role: Role,
        round: usize,
        #[source]
        source: StrategyError,
    },
}

/// Plays `depth` full rounds (Bob then Alice each round).
pub fn run_game(
    params: &GameParams,
    bob: &dyn Strategy,
    alice: &dyn Strategy,
    depth: usize,
) -> Result<GameHistory, GameError> {
    if depth == 0 {
        return Err(GameError::InvalidDepth);
    }
    let mut history = GameHistory::new(params.clone());
    for round in 0..depth {
        for (role, strategy) in [(Role::Bob, bob), (Role::Alice, alice)] {
            let proposed = strategy
                .propose(&history)
                .map_err(|source| GameError::Strategy { role, round, source })?;
            history
                .push(role, proposed)
                .map_err(|violation| GameError::IllegalStrategyMove { role, round, violation })?;
        }
    }
    Ok(history)
}

/// `[parent.lo + t * slack, ... + len]` where `slack = |parent| - len`, `t ∈ [0, 1]`.
pub fn sub_interval(parent: &Interval, len: &Rational, t: &Rational) -> Interval {
    let slack = parent.length() - len;
    Interval::with_length(parent.lo() + &(t * slack), len)
}

/// Placement rules for scripted strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Placement {
    Leftmost,
    Rightmost,
    Centered,
    /// Leftmost on even rounds, rightmost on odd rounds.
    Alternating,
    /// Offset `k/1000` of the slack with `k` drawn from a seeded generator
    /// keyed by the round and the opponent's last move.
    Random(u64),
}

impl Placement {
    fn offset(&self, history: &GameHistory) -> Rational {
        let round = history.next_round();
        match *self {
            Placement::Leftmost => Rational::zero(),
            Placement::Rightmost => Rational::one(),
            Placement::Centered => Rational::new(1, 2),
            Placement::Alternating => {
                if round % 2 == 0 {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            }
            Placement::Random(seed) => {
                let mut hasher = DefaultHasher::new();
                seed.hash(&mut hasher);
                history.len().hash(&mut hasher);
                if let Some(last) = history.last() {
                    last.hash(&mut hasher);
                }
                let mut rng = ChaCha8Rng::seed_from_u64(hasher.finish());
                // Endpoints get extra weight so edge placements are exercised.
                match rng.gen_range(0..10) {
                    0 => Rational::zero(),
                    1 => Rational::one(),
                    _ => Rational::new(rng.gen_range(0..=1000i64), 1000),
                }
            }
        }
    }
}

/// A strategy that always answers with the subinterval picked by a [`Placement`].
///
/// When it plays Bob it opens with `opening`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptedStrategy {
    pub opening: Option<Interval>,
    pub placement: Placement,
}

impl ScriptedStrategy {
    pub fn alice(placement: Placement) -> Self {
        ScriptedStrategy { opening: None, placement }
    }

    pub fn bob(opening: Interval, placement: Placement) -> Self {
        ScriptedStrategy { opening: Some(opening), placement }
    }
}

impl Strategy for ScriptedStrategy {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError> {
        let Some(last) = history.last() else {
            return self.opening.clone().ok_or(StrategyError::NoOpening);
        };
        let len = history.required_length().expect("non-empty history");
        Ok(sub_interval(last, &len, &self.placement.offset(history)))
    }
}

/// One line of a JSON-lines game trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub k: usize,
    pub role: Role,
    pub lo: Rational,
    pub hi: Rational,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: illegal move ({violation})")]
    Illegal { line: usize, violation: Violation },
}

pub fn trace_records(history: &GameHistory) -> Vec<TraceRecord> {
    history
        .moves()
        .iter()
        .enumerate()
        .map(|(i, m)| TraceRecord {
            k: i / 2,
            role: m.role,
            lo: m.interval.lo().clone(),
            hi: m.interval.hi().clone(),
        })
        .collect()
}

/// Serializes a history as JSON lines, one move per line.
pub fn write_trace(history: &GameHistory) -> String {
    let mut out = String::new();
    for record in trace_records(history) {
        out.push_str(&serde_json::to_string(&record).expect("trace record serializes"));
        out.push('\n');
    }
    out
}

/// Parses and re-validates a JSON-lines trace.
pub fn read_trace(params: &GameParams, text: &str) -> Result<GameHistory, TraceError> {
    let mut history = GameHistory::new(params.clone());
    for (i, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line = i + 1;
        let record: TraceRecord =
            serde_json::from_str(raw).map_err(|source| TraceError::Json { line, source })?;
        if record.k != history.next_round() {
            return Err(TraceError::Malformed {
                line,
                message: format!("expected round {}, found {}", history.next_round(), record.k),
            });
        }
        let interval = Interval::new(record.lo, record.hi)
            .map_err(|e| TraceError::Malformed { line, message: e.to_string() })?;
        history
            .push(record.role, interval)
            .map_err(|violation| TraceError::Illegal { line, violation })?;
    }
    Ok(history)
}
