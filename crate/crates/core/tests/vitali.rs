use proptest::prelude::*;

use schmidt_core::game::{run_game, sub_interval, GameParams, Placement, ScriptedStrategy};
use schmidt_core::rational::q;
use schmidt_core::verify::{check_partial_vitali, check_run};
use schmidt_core::vitali::{
    alice_strategy, build_chains, build_target_tree_with, choose_alice_intervals, place_omegas, TargetTree, TaskKind,
    TreeConfig, TreeMode,
};
use schmidt_core::{Interval, Rational};

fn iv(lo: Rational, hi: Rational) -> Interval {
    Interval::new(lo, hi).unwrap()
}

fn running() -> GameParams {
    GameParams::new(q(1, 20), q(1, 2)).unwrap()
}

/// Every pair `(shift(a, q), b)` with `a` in `sources` and `b` in `targets` that meets, by direct comparison.
fn meeting_pairs(sources: &[Interval], targets: &[Interval], q: &Rational) -> usize {
    let mut sorted = targets.to_vec();
    sorted.sort_by(|x, y| x.lo().cmp(y.lo()));
    sources
        .iter()
        .map(|a| {
            let s = a.shift(q);
            let start = sorted.partition_point(|b| b.lo() <= s.lo()).saturating_sub(1);
            sorted[start..].iter().take_while(|b| b.lo() <= s.hi()).filter(|b| b.overlaps(&s)).count()
        })
        .sum()
}

fn thickened(tree: &TargetTree, seed: usize, level: usize) -> Vec<Interval> {
    tree.designated(seed, level)
        .unwrap()
        .iter()
        .map(|a| a.delta_thickening(tree.delta()).unwrap())
        .collect()
}

/// Recomputes every scheduled shift condition by brute force.
fn brute_force_tasks(tree: &TargetTree) -> (usize, usize) {
    let (mut intra, mut cross) = (0, 0);
    for task in tree.tasks() {
        let (sources, targets) = match task.kind {
            TaskKind::Intra { seed, level } => {
                intra += 1;
                let d = thickened(tree, seed, level);
                (d.clone(), d)
            }
            TaskKind::Cross { source_seed, source_level, target_seed, target_level } => {
                cross += 1;
                (thickened(tree, source_seed, source_level), thickened(tree, target_seed, target_level))
            }
        };
        assert_eq!(meeting_pairs(&sources, &targets, &task.q), 0, "task {task:?}");
    }
    (intra, cross)
}

fn build(seeds: &[Interval], mode: TreeMode, depth: usize, budget: usize) -> TargetTree {
    build_target_tree_with(seeds, &running(), &TreeConfig { depth, mode, node_budget: budget }).unwrap()
}

#[test]
fn pair_tree_cross_shifts_are_disjoint() {
    let tree = build(&[iv(q(0, 1), q(1, 1)), iv(q(2, 1), q(7, 2))], TreeMode::Pair, 20, 20_000);
    assert!(tree.rationals_handled() >= 2);
    let (intra, cross) = brute_force_tasks(&tree);
    assert!(intra >= 2 && cross >= 1, "{intra} {cross}");
    assert!(check_partial_vitali(&tree).passed());
}

#[test]
fn diagonal_tree_cross_shifts_are_disjoint() {
    let seeds = [iv(q(0, 1), q(1, 1)), iv(q(3, 1), q(9, 2)), iv(q(-5, 1), q(-4, 1))];
    let tree = build(&seeds, TreeMode::Diagonal, 12, 20_000);
    assert!(tree.rationals_handled() >= 1);
    let (intra, cross) = brute_force_tasks(&tree);
    // Each fully handled rational owns one stage per seed and one per pair of seeds.
    let handled = tree.rationals_handled();
    assert!(intra >= 3 * handled && cross >= 3 * handled, "{intra} {cross}");
    assert!(check_partial_vitali(&tree).passed());
}

#[test]
fn thickened_tree_keeps_thickened_intervals_apart() {
    let tree = build(&[iv(q(-1, 3), q(2, 3))], TreeMode::Thickened, 12, 5_000);
    assert_eq!(tree.delta(), &q(1, 12));
    brute_force_tasks(&tree);
    assert!(check_partial_vitali(&tree).passed());
}

#[test]
fn pair_tree_strategy_wins_from_both_seeds() {
    let seeds = [iv(q(0, 1), q(1, 1)), iv(q(2, 1), q(7, 2))];
    let tree = build(&seeds, TreeMode::Pair, 10, 5_000);
    for (k, seed) in seeds.iter().enumerate() {
        for placement in [Placement::Leftmost, Placement::Rightmost, Placement::Random(k as u64)] {
            let bob = ScriptedStrategy::bob(seed.clone(), placement);
            let h = run_game(&running(), &bob, &alice_strategy(&tree), 11).unwrap();
            assert!(check_run(&h, &tree).unwrap().passed());
        }
    }
}

fn params_strategy() -> impl Strategy<Value = GameParams> {
    (1i64..100, 2i64..200).prop_filter_map("beta above alpha", |(k, den)| {
        let alpha = q(k, 1200);
        (1..den).map(|j| q(j, den)).find(|b| b > &alpha).map(|b| GameParams::new(alpha, b).unwrap())
    })
}

fn parent_strategy() -> impl Strategy<Value = Interval> {
    (-100i64..100, 1i64..50, 1i64..200, 1i64..50)
        .prop_map(|(a, b, c, d)| Interval::with_length(q(a, b), &q(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omegas_follow_closed_form(p in params_strategy(), parent in parent_strategy()) {
        let omegas = place_omegas(&parent, &p, &q(4, 1)).unwrap();
        let len = parent.length();
        let (a, b) = (p.alpha().clone(), p.beta().clone());
        let period = &b * &len * (Rational::one() - q(4, 1) * &a);
        let omega_len = q(4, 1) * &a * &b * &len;
        let count = ((&len - &omega_len) / &period).floor() + Rational::one();
        prop_assert_eq!(Rational::from(omegas.len() as i64), count);
        for (i, w) in omegas.iter().enumerate() {
            prop_assert_eq!(w.length(), omega_len.clone());
            prop_assert!(parent.contains(w));
            prop_assert_eq!(w.lo() - parent.lo(), &period * Rational::from(i as i64));
        }
    }

    #[test]
    fn every_bob_move_holds_an_omega(p in params_strategy(), parent in parent_strategy(), t in 0i64..=997) {
        let omegas = place_omegas(&parent, &p, &q(4, 1)).unwrap();
        let bob_len = p.beta() * parent.length();
        for t in [q(0, 1), q(1, 1), q(t, 997)] {
            let bob = sub_interval(&parent, &bob_len, &t);
            prop_assert!(omegas.iter().any(|w| bob.contains(w)), "{} holds no omega", bob);
        }
    }

    #[test]
    fn designated_intervals_avoid_shifts(p in params_strategy(), parent in parent_strategy(), j in 1i64..40, k in 1i64..40) {
        let omegas = place_omegas(&parent, &p, &q(4, 1)).unwrap();
        let omega_len = omegas[0].length();
        // A shift longer than one omega, comparable to the spacing.
        let shift = &omega_len * q(j + 10, 10) * q(k, 1);
        let chains = build_chains(&omegas, &shift).unwrap();
        let u = &omega_len * q(1, 4);
        let chosen = choose_alice_intervals(&omegas, &chains, &shift, &u).unwrap();
        for (c, w) in chosen.iter().zip(&omegas) {
            prop_assert!(w.contains(c) && c.length() == u);
        }
        prop_assert_eq!(meeting_pairs(&chosen, &chosen, &shift), 0);
    }
}
