use proptest::prelude::*;

use schmidt_core::adversary::{
    bob_avoid_strategy, cantor_children_per_window, cantor_stage_count, cantor_windows, foil, AdversaryError, Board,
    PairGameOracle, ScriptedOracle,
};
use schmidt_core::game::{
    run_game, sub_interval, GameHistory, GameParams, Placement, ScriptedStrategy, StrategyError,
};
use schmidt_core::rational::q;
use schmidt_core::{Interval, Rational};

fn iv(lo: Rational, hi: Rational) -> Interval {
    Interval::new(lo, hi).unwrap()
}

/// Plays opposite ends on the two boards.
struct Splitting;

impl PairGameOracle for Splitting {
    fn answer(&mut self, board: Board, h: &GameHistory) -> Result<Interval, StrategyError> {
        let t = if board == Board::Primary { Rational::zero() } else { Rational::one() };
        Ok(sub_interval(h.last().unwrap(), &h.required_length().unwrap(), &t))
    }
}

/// Answers with an interval of the wrong length on the mirror board.
struct Cheating;

impl PairGameOracle for Cheating {
    fn answer(&mut self, board: Board, h: &GameHistory) -> Result<Interval, StrategyError> {
        let len = h.required_length().unwrap();
        let len = if board == Board::Mirror { len * q(1, 2) } else { len };
        Ok(Interval::with_length(h.last().unwrap().lo().clone(), &len))
    }
}

#[test]
fn splitting_oracle_is_still_foiled() {
    let p = GameParams::new(q(3, 5), q(1, 3)).unwrap();
    let out = foil(&p, &mut Splitting, 12, iv(q(-1, 1), q(2, 1))).unwrap();
    let c = &out.certificate;
    assert!(c.holds());
    for r in &c.rounds {
        assert!(r.a.shift(&c.q).contains(&r.a_prime));
    }
    let w = out.primary.outcome_window().unwrap().shift(&c.q);
    assert!(w.contains(out.mirror.outcome_window().unwrap()));
}

#[test]
fn illegal_oracle_answer_is_reported() {
    let p = GameParams::new(q(1, 2), q(1, 4)).unwrap();
    let err = foil(&p, &mut Cheating, 3, iv(q(0, 1), q(1, 1))).unwrap_err();
    assert!(matches!(err, AdversaryError::OracleIllegalMove { board: Board::Mirror, round: 0, .. }), "{err:?}");
}

#[test]
fn foil_q_is_simplest_in_range() {
    // A_0 = [1/2, 1] and A'_0 = [9/4, 5/2] give the range [3/2, 7/4].
    let p = GameParams::new(q(1, 2), q(1, 4)).unwrap();
    let mut tau = ScriptedOracle { placement: Placement::Rightmost };
    let out = foil(&p, &mut tau, 2, iv(q(0, 1), q(1, 1))).unwrap();
    assert_eq!(out.certificate.q, q(3, 2));
}

#[test]
fn stage_counts_match_window_lists() {
    let p = GameParams::new(q(1, 2), q(1, 4)).unwrap();
    let stages = cantor_windows(&iv(q(0, 1), q(1, 1)), &p, 3).unwrap();
    let per = cantor_children_per_window(&p);
    assert_eq!(per, 6);
    for (n, stage) in stages.iter().enumerate() {
        assert_eq!(num_bigint::BigUint::from(stage.len()), cantor_stage_count(&p, n));
        assert_eq!(stage.len(), per.pow(n as u32));
        for w in stage {
            assert_eq!(w.length(), q(1, 8).pow(n as i32));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn avoided_points_include_window_endpoints(
        a in 1i64..30, b in 1i64..10, seed in any::<u64>(), picks in prop::collection::vec(0usize..4, 6),
    ) {
        let p = GameParams::new(q(a, 31), q(b, 31)).unwrap();
        let first = iv(q(0, 1), q(1, 1));
        let alice = ScriptedStrategy::alice(Placement::Random(seed));
        // Points are endpoints of the windows Bob is about to choose from.
        let mut avoid = Vec::new();
        let mut h = GameHistory::new(p.clone());
        for (round, pick) in picks.iter().enumerate() {
            let bob = bob_avoid_strategy(avoid.clone(), first.clone(), &p).unwrap();
            let b = schmidt_core::game::Strategy::propose(&bob, &h).unwrap();
            h.push(schmidt_core::game::Role::Bob, b).unwrap();
            let m = schmidt_core::game::Strategy::propose(&alice, &h).unwrap();
            h.push(schmidt_core::game::Role::Alice, m.clone()).unwrap();
            let children = schmidt_core::adversary::cantor_children(h.bob_moves().last().unwrap(), &p);
            let inside: Vec<&Interval> = children.iter().filter(|w| m.contains(w)).collect();
            prop_assert!(inside.len() >= 2);
            let w = inside[pick % inside.len()];
            avoid.push(if pick % 2 == 0 { w.lo().clone() } else { w.hi().clone() });
            for x in avoid.iter().take(round) {
                prop_assert!(!m.contains_point(x));
            }
        }
    }
}

#[test]
fn cantor_run_with_scripted_alice() {
    let p = GameParams::new(q(2, 3), q(1, 5)).unwrap();
    let avoid: Vec<Rational> = (1..=10).map(|k| q(k, 11)).collect();
    let bob = bob_avoid_strategy(avoid.clone(), iv(q(0, 1), q(1, 1)), &p).unwrap();
    for placement in [Placement::Leftmost, Placement::Rightmost, Placement::Centered] {
        let h = run_game(&p, &bob, &ScriptedStrategy::alice(placement), 11).unwrap();
        let w = h.outcome_window().unwrap();
        assert!(avoid.iter().all(|x| !w.contains_point(x)));
    }
}
