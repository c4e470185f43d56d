//! Bob's avoidance strategy for `beta < 1/3`.
//!
//! Inside a window `P` the next-stage windows have length `alpha beta |P|`
//! and start at multiples of `(alpha/3) |P|`. Every Alice move inside `P`
//! (length `alpha |P|`) covers three periods and so contains at least two
//! whole windows; a single point can spoil at most one of them.

use serde::{Deserialize, Serialize};

use super::AdversaryError;
use crate::game::{GameHistory, GameParams, Strategy, StrategyError};
use crate::interval::Interval;
use crate::rational::Rational;

fn check_beta(params: &GameParams) -> Result<(), AdversaryError> {
    if params.beta() >= &Rational::new(1, 3) {
        return Err(AdversaryError::PreconditionViolated("avoidance needs beta < 1/3".into()));
    }
    Ok(())
}

/// Number of next-stage windows inside each window.
pub fn cantor_children_per_window(params: &GameParams) -> usize {
    let period = params.alpha() / Rational::from_integer(3);
    let last = ((Rational::one() - params.contraction()) / period).floor();
    let last: usize = last.numer().try_into().expect("window count fits in usize");
    last + 1
}

/// Next-stage windows inside `window`, left to right.
pub fn cantor_children(window: &Interval, params: &GameParams) -> Vec<Interval> {
    let len = window.length();
    let child = params.contraction() * &len;
    let period = params.alpha() * &len / Rational::from_integer(3);
    (0..cantor_children_per_window(params))
        .map(|k| Interval::with_length(window.lo() + &(&period * Rational::from_integer(k as i64)), &child))
        .collect()
}

/// Number of stage-`n` windows.
pub fn cantor_stage_count(params: &GameParams, n: usize) -> num_bigint::BigUint {
    num_bigint::BigUint::from(cantor_children_per_window(params)).pow(n as u32)
}

/// All windows of stages `0..=depth`; stage 0 is the first move itself.
/// The count grows geometrically, so keep `depth` small.
pub fn cantor_windows(
    first_move: &Interval,
    params: &GameParams,
    depth: usize,
) -> Result<Vec<Vec<Interval>>, AdversaryError> {
    check_beta(params)?;
    if depth == 0 {
        return Err(AdversaryError::PreconditionViolated("depth must be at least 1".into()));
    }
    let mut stages = vec![vec![first_move.clone()]];
    for _ in 0..depth {
        let next = stages.last().expect("stage 0 exists").iter().flat_map(|w| cantor_children(w, params)).collect();
        stages.push(next);
    }
    Ok(stages)
}

/// Opens with `first_move`; in round `n >= 1` plays the leftmost next-stage
/// window inside Alice's move that avoids `avoid[n - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BobAvoidStrategy {
    pub params: GameParams,
    pub first_move: Interval,
    pub avoid: Vec<Rational>,
}

pub fn bob_avoid_strategy(
    avoid: Vec<Rational>,
    first_move: Interval,
    params: &GameParams,
) -> Result<BobAvoidStrategy, AdversaryError> {
    check_beta(params)?;
    if first_move.is_degenerate() {
        return Err(AdversaryError::PreconditionViolated("first move must have positive length".into()));
    }
    Ok(BobAvoidStrategy { params: params.clone(), first_move, avoid })
}

impl BobAvoidStrategy {
    /// The point Bob dodges in round `round` (rounds start at 0; round 0 has none).
    pub fn point_for_round(&self, round: usize) -> Option<&Rational> {
        round.checked_sub(1).and_then(|i| self.avoid.get(i))
    }
}

impl Strategy for BobAvoidStrategy {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError> {
        let Some(alice) = history.last() else {
            return Ok(self.first_move.clone());
        };
        let round = history.next_round();
        let window = history.bob_moves().last().expect("Bob opened the game");
        let point = self.point_for_round(round);
        cantor_children(window, &self.params)
            .into_iter()
            .filter(|w| alice.contains(w))
            .find(|w| point.map_or(true, |p| !w.contains_point(p)))
            .ok_or_else(|| StrategyError::NoCandidate(format!("no free window inside {alice}")))
    }
}
