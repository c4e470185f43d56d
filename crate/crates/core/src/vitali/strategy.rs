//! Alice's strategy read off a target tree.

use super::tree::{NodeRef, TargetTree};
use crate::game::{GameHistory, Role, Strategy, StrategyError};
use crate::interval::Interval;
use crate::rational::Rational;

/// The seed a first move belongs to and the relative thickening `d` with
/// `first_move = thickening(seed, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedMatch {
    pub seed: usize,
    pub thickening: Rational,
}

impl TargetTree {
    /// Finds the seed whose `d`-thickening, `0 <= d <= delta`, is `first_move`.
    pub fn match_seed(&self, first_move: &Interval) -> Option<SeedMatch> {
        let center = first_move.center();
        self.seeds().iter().enumerate().find_map(|(i, s)| {
            if s.seed.center() != center {
                return None;
            }
            let d = (first_move.length() / s.seed.length() - Rational::one()) / Rational::from_integer(2);
            (!d.is_negative() && &d <= self.delta()).then(|| SeedMatch { seed: i, thickening: d })
        })
    }

    /// Follows Bob's moves of `history` down the tree: the returned path holds
    /// the root and then, for each later Bob move, the leftmost child whose
    /// omega it contains (or, failing that, whose thickened designated
    /// interval it contains).
    pub fn track(&self, history: &GameHistory) -> Result<(SeedMatch, Vec<NodeRef>), StrategyError> {
        let first = history.first_move().ok_or(StrategyError::NoOpening)?;
        let m = self.match_seed(first).ok_or_else(|| StrategyError::SeedMismatch(first.clone()))?;
        let mut path = vec![self.root_ref(m.seed)];
        for (round, bob) in history.bob_moves().enumerate().skip(1) {
            if round > self.depth() {
                return Err(StrategyError::DepthExceeded { round, depth: self.depth() });
            }
            let children = self.children(path.last().expect("path starts at the root"));
            let pick = children
                .iter()
                .find(|c| bob.contains(&c.omega))
                .or_else(|| children.iter().find(|c| bob.contains(&thicken(&c.node.alice, &m.thickening))))
                .ok_or_else(|| StrategyError::NoCandidate(format!("no omega inside Bob's move {bob} at round {round}")))?;
            path.push(pick.node.clone());
        }
        Ok((m, path))
    }
}

pub(crate) fn thicken(i: &Interval, d: &Rational) -> Interval {
    i.delta_thickening(d).expect("thickening is non-negative")
}

/// Plays, at every Alice turn, the (thickened) designated interval of the
/// node reached by [`TargetTree::track`].
#[derive(Debug, Clone, Copy)]
pub struct AliceTreeStrategy<'a> {
    tree: &'a TargetTree,
}

pub fn alice_strategy(tree: &TargetTree) -> AliceTreeStrategy<'_> {
    AliceTreeStrategy { tree }
}

impl AliceTreeStrategy<'_> {
    pub fn tree(&self) -> &TargetTree {
        self.tree
    }
}

impl Strategy for AliceTreeStrategy<'_> {
    fn propose(&self, history: &GameHistory) -> Result<Interval, StrategyError> {
        if history.is_empty() {
            return Err(StrategyError::NoOpening);
        }
        if history.next_role() != Role::Alice {
            return Err(StrategyError::NoCandidate("it is Bob's turn".into()));
        }
        let (m, path) = self.tree.track(history)?;
        let node = path.last().expect("path starts at the root");
        Ok(thicken(&node.alice, &m.thickening))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{run_game, GameParams, Placement, ScriptedStrategy};
    use crate::interval::iv;
    use crate::rational::q;
    use crate::vitali::{build_target_tree, TreeMode};

    fn running() -> GameParams {
        GameParams::new(q(1, 20), q(1, 2)).unwrap()
    }

    #[test]
    fn plays_designated_interval_of_leftmost_omega() {
        let tree = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 5, TreeMode::Single).unwrap();
        let bob = ScriptedStrategy::bob(iv(q(0, 1), q(1, 1)), Placement::Leftmost);
        let h = run_game(&running(), &bob, &alice_strategy(&tree), 6).unwrap();
        let alice: Vec<&Interval> = h.alice_moves().collect();
        assert_eq!(alice[0], &tree.seeds()[0].root);
        // Bob's leftmost move at round 1 starts at A_0's left end, so the first omega is inside.
        assert_eq!(alice[1], &tree.seeds()[0].levels[0].nodes[0].alice);
    }

    #[test]
    fn seed_mismatch_and_depth() {
        let tree = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 2, TreeMode::Single).unwrap();
        let bob = ScriptedStrategy::bob(iv(q(1, 1), q(2, 1)), Placement::Leftmost);
        let err = run_game(&running(), &bob, &alice_strategy(&tree), 1).unwrap_err();
        assert!(matches!(
            err,
            crate::game::GameError::Strategy { source: StrategyError::SeedMismatch(_), .. }
        ));
        let bob = ScriptedStrategy::bob(iv(q(0, 1), q(1, 1)), Placement::Rightmost);
        assert!(run_game(&running(), &bob, &alice_strategy(&tree), 3).is_ok());
        let err = run_game(&running(), &bob, &alice_strategy(&tree), 4).unwrap_err();
        assert!(matches!(
            err,
            crate::game::GameError::Strategy { source: StrategyError::DepthExceeded { round: 3, depth: 2 }, .. }
        ));
    }

    #[test]
    fn matches_thickened_seeds_only_within_tolerance() {
        let tree = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 2, TreeMode::Thickened).unwrap();
        assert_eq!(tree.delta(), &q(1, 12));
        let m = tree.match_seed(&iv(q(-1, 12), q(13, 12))).unwrap();
        assert_eq!(m.thickening, q(1, 12));
        assert!(tree.match_seed(&iv(q(-1, 10), q(11, 10))).is_none());
        assert!(tree.match_seed(&iv(q(0, 1), q(11, 10))).is_none());
        let single = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 2, TreeMode::Single).unwrap();
        assert!(single.match_seed(&iv(q(-1, 100), q(101, 100))).is_none());
    }
}
