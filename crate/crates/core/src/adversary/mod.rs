//! Bob's constructive counter-strategies: pairing two games so that Alice's
//! outcomes differ by a fixed rational when `beta < alpha`, and steering
//! outcomes away from a countable set when `beta < 1/3`.

mod cantor;
mod foil;
mod simplest;

use thiserror::Error;

use crate::game::{StrategyError, Violation};

pub use cantor::{
    bob_avoid_strategy, cantor_children, cantor_children_per_window, cantor_stage_count, cantor_windows,
    BobAvoidStrategy,
};
pub use foil::{
    foil, Board, FoilCertificate, FoilController, FoilOutcome, FoilRound, PairGameOracle, ScriptedOracle,
};
pub use simplest::simplest_in;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdversaryError {
    #[error("precondition-violated: {0}")]
    PreconditionViolated(String),
    #[error("oracle-illegal-move on the {board} board in round {round}: {violation}")]
    OracleIllegalMove { board: Board, round: usize, violation: Violation },
    #[error("oracle failed on the {board} board: {source}")]
    Oracle {
        board: Board,
        #[source]
        source: StrategyError,
    },
    #[error("expected a move on the {expected} board")]
    WrongBoard { expected: Board },
    #[error("the game is finished")]
    Finished,
}
