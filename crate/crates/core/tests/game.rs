use proptest::prelude::*;

use schmidt_core::game::{
    read_trace, run_game, validate_move, write_trace, GameHistory, GameParams, Placement, Role, ScriptedStrategy,
};
use schmidt_core::rational::q;
use schmidt_core::{Interval, Rational, Violation};

fn params_strategy() -> impl Strategy<Value = GameParams> {
    (1i64..40, 1i64..40, 41i64..60).prop_map(|(a, b, den)| GameParams::new(q(a, den), q(b, den)).unwrap())
}

fn placement_strategy() -> impl Strategy<Value = Placement> {
    prop_oneof![
        Just(Placement::Leftmost),
        Just(Placement::Rightmost),
        Just(Placement::Centered),
        Just(Placement::Alternating),
        any::<u64>().prop_map(Placement::Random),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scripted_runs_are_legal_and_nested(
        p in params_strategy(),
        lo in -50i64..50,
        len in 1i64..30,
        bob in placement_strategy(),
        alice in placement_strategy(),
        depth in 1usize..8,
    ) {
        let first = Interval::with_length(q(lo, 7), &q(len, 3));
        let h = run_game(&p, &ScriptedStrategy::bob(first.clone(), bob), &ScriptedStrategy::alice(alice), depth).unwrap();
        prop_assert_eq!(h.len(), 2 * depth);
        let rho = first.length();
        let moves: Vec<&Interval> = h.moves().iter().map(|m| &m.interval).collect();
        for (i, m) in moves.iter().enumerate() {
            let round = i / 2;
            let expected = if i % 2 == 0 { p.bob_length(&rho, round) } else { p.alice_length(&rho, round) };
            prop_assert_eq!(m.length(), expected);
            if i > 0 {
                prop_assert!(moves[i - 1].contains(m));
            }
        }
        // Closed form: |A_n| = alpha (alpha beta)^n rho.
        let ab = p.alpha() * p.beta();
        prop_assert_eq!(h.outcome_window().unwrap().length(), p.alpha() * ab.pow(depth as i32 - 1) * &rho);
        let text = write_trace(&h);
        let back = read_trace(&p, &text).unwrap();
        prop_assert_eq!(write_trace(&back), text);
    }

    #[test]
    fn validation_matches_definition(p in params_strategy(), a in -20i64..20, b in 1i64..20, c in -20i64..20, d in 1i64..40) {
        let mut h = GameHistory::new(p.clone());
        h.push(Role::Bob, Interval::new(q(0, 1), q(1, 1)).unwrap()).unwrap();
        let candidate = Interval::with_length(q(a, 20), &q(b, 20));
        let outside = Interval::with_length(q(c, 20), &q(d, 40));
        for proposed in [candidate, outside] {
            let right_length = proposed.length() == *p.alpha();
            let nested = Interval::new(q(0, 1), q(1, 1)).unwrap().contains(&proposed);
            let expected = if !right_length {
                Err(Violation::LengthMismatch)
            } else if !nested {
                Err(Violation::NotNested)
            } else {
                Ok(())
            };
            prop_assert_eq!(validate_move(&h, &proposed), expected);
        }
    }
}

#[test]
fn zero_length_opening_is_rejected() {
    let p = GameParams::new(q(1, 2), q(1, 2)).unwrap();
    let h = GameHistory::new(p);
    let point = Interval::point(Rational::one());
    assert_eq!(validate_move(&h, &point), Err(Violation::EmptyInterval));
}
