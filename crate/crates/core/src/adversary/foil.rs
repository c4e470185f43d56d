//! Two interleaved games in which Bob forces Alice's outcomes to differ by a
//! fixed nonzero rational `q`.
//!
//! Game one opens with the given move `B_0` of length `rho`; game two opens
//! with `B'_0` of length `alpha * rho`, a distance `rho` to the right. Once
//! Alice has answered both, `q` is the simplest rational with
//! `A'_0 ⊆ A_0 + q`. From then on Bob plays `B_{n+1} ⊆ A_n` with
//! `B_{n+1} + q ⊆ A'_n` and `B'_{n+1} = A_{n+1} + q`, which keeps
//! `A'_n ⊆ A_n + q` in every round.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::simplest::simplest_in;
use super::AdversaryError;
use crate::game::{GameHistory, GameParams, Placement, Role, ScriptedStrategy, Strategy, StrategyError};
use crate::interval::Interval;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Board {
    Primary,
    Mirror,
}

impl Board {
    pub fn index(self) -> usize {
        match self {
            Board::Primary => 0,
            Board::Mirror => 1,
        }
    }

    pub fn other(self) -> Board {
        match self {
            Board::Primary => Board::Mirror,
            Board::Mirror => Board::Primary,
        }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Board::Primary => "primary",
            Board::Mirror => "mirror",
        })
    }
}

/// Alice's side of both games. Requests alternate between the boards,
/// primary first, and each history ends with Bob's move.
pub trait PairGameOracle {
    fn answer(&mut self, board: Board, history: &GameHistory) -> Result<Interval, StrategyError>;
}

/// Answers on both boards with the same placement rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScriptedOracle {
    pub placement: Placement,
}

impl PairGameOracle for ScriptedOracle {
    fn answer(&mut self, _board: Board, history: &GameHistory) -> Result<Interval, StrategyError> {
        ScriptedStrategy::alice(self.placement).propose(history)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoilRound {
    #[serde(rename = "A")]
    pub a: Interval,
    #[serde(rename = "Aprime")]
    pub a_prime: Interval,
    /// `A'_n ⊆ A_n + q`.
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoilCertificate {
    pub q: Rational,
    pub rounds: Vec<FoilRound>,
}

impl FoilCertificate {
    pub fn holds(&self) -> bool {
        !self.q.is_zero() && self.rounds.iter().all(|r| r.contained)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoilOutcome {
    pub certificate: FoilCertificate,
    pub primary: GameHistory,
    pub mirror: GameHistory,
}

/// Bob's side of the pairing, driven one Alice move at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoilController {
    games: [GameHistory; 2],
    q: Option<Rational>,
    depth: usize,
}

impl FoilController {
    /// Opens both games. `depth` is the number of rounds Alice plays on each board.
    pub fn new(params: &GameParams, first_move: Interval, depth: usize) -> Result<Self, AdversaryError> {
        if params.beta() >= params.alpha() {
            return Err(AdversaryError::PreconditionViolated("foiling needs beta < alpha".into()));
        }
        if depth == 0 {
            return Err(AdversaryError::PreconditionViolated("depth must be at least 1".into()));
        }
        if first_move.is_degenerate() {
            return Err(AdversaryError::PreconditionViolated("first move must have positive length".into()));
        }
        let rho = first_move.length();
        let mirror_open = Interval::with_length(first_move.hi() + &rho, &(params.alpha() * &rho));
        let mut primary = GameHistory::new(params.clone());
        primary.push(Role::Bob, first_move).expect("an opening move is always legal");
        let mut mirror = GameHistory::new(params.clone());
        mirror.push(Role::Bob, mirror_open).expect("an opening move is always legal");
        Ok(FoilController { games: [primary, mirror], q: None, depth })
    }

    pub fn history(&self, board: Board) -> &GameHistory {
        &self.games[board.index()]
    }

    pub fn q(&self) -> Option<&Rational> {
        self.q.as_ref()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Rounds Alice has completed on both boards.
    pub fn completed_rounds(&self) -> usize {
        self.games[1].alice_moves().count()
    }

    pub fn is_finished(&self) -> bool {
        self.completed_rounds() >= self.depth
    }

    /// The board awaiting Alice's next move.
    pub fn next_board(&self) -> Board {
        if self.games[0].alice_moves().count() == self.games[1].alice_moves().count() {
            Board::Primary
        } else {
            Board::Mirror
        }
    }

    /// Records Alice's move on `board` and returns Bob's reply, if one is due.
    /// An illegal move leaves the controller unchanged.
    pub fn submit(&mut self, board: Board, alice: Interval) -> Result<Option<(Board, Interval)>, AdversaryError> {
        if self.is_finished() {
            return Err(AdversaryError::Finished);
        }
        let expected = self.next_board();
        if board != expected {
            return Err(AdversaryError::WrongBoard { expected });
        }
        let game = &mut self.games[board.index()];
        let round = game.next_round();
        game.push(Role::Alice, alice).map_err(|violation| AdversaryError::OracleIllegalMove {
            board,
            round,
            violation,
        })?;

        let reply = match board {
            Board::Primary if self.q.is_none() => None,
            Board::Primary => {
                let q = self.q.as_ref().expect("q is fixed after round 0");
                let a = self.games[0].last().expect("just pushed").shift(q);
                let mirror = &self.games[1];
                let len = mirror.required_length().expect("mirror game is open");
                Some((Board::Mirror, Interval::with_length(a.lo().clone(), &len)))
            }
            Board::Mirror => {
                let a = self.games[0].last().expect("primary answered").clone();
                let a_prime = self.games[1].last().expect("just pushed").clone();
                if self.q.is_none() {
                    let lo = a_prime.hi() - a.hi();
                    let hi = a_prime.lo() - a.lo();
                    self.q = Some(simplest_in(&lo, &hi));
                }
                if self.is_finished() {
                    return Ok(None);
                }
                let q = self.q.as_ref().expect("q was just fixed");
                let len = self.games[0].required_length().expect("primary game is open");
                let lo = a.lo().clone().max(a_prime.lo() - q);
                Some((Board::Primary, Interval::with_length(lo, &len)))
            }
        };
        if let Some((target, bob)) = &reply {
            self.games[target.index()]
                .push(Role::Bob, bob.clone())
                .expect("Bob's pairing move is legal whenever beta < alpha");
        }
        Ok(reply)
    }

    /// Containment record for every completed round; `None` before `q` is fixed.
    pub fn certificate(&self) -> Option<FoilCertificate> {
        let q = self.q.clone()?;
        let rounds = self.games[0]
            .alice_moves()
            .zip(self.games[1].alice_moves())
            .map(|(a, a_prime)| FoilRound {
                contained: a.shift(&q).contains(a_prime),
                a: a.clone(),
                a_prime: a_prime.clone(),
            })
            .collect();
        Some(FoilCertificate { q, rounds })
    }
}

/// Runs the pairing against `tau` for `depth` rounds on each board.
pub fn foil(
    params: &GameParams,
    tau: &mut dyn PairGameOracle,
    depth: usize,
    first_move: Interval,
) -> Result<FoilOutcome, AdversaryError> {
    let mut controller = FoilController::new(params, first_move, depth)?;
    while !controller.is_finished() {
        let board = controller.next_board();
        let answer = tau
            .answer(board, controller.history(board))
            .map_err(|source| AdversaryError::Oracle { board, source })?;
        controller.submit(board, answer)?;
    }
    Ok(FoilOutcome {
        certificate: controller.certificate().expect("q is fixed once a round is complete"),
        primary: controller.games[0].clone(),
        mirror: controller.games[1].clone(),
    })
}
