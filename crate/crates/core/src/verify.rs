//! Finite brute-force checks of the construction's geometric claims. Each
//! check returns a [`Certificate`]; a failing one carries a witness that
//! re-running the check reproduces.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::adversary::cantor_children;
use crate::game::{GameHistory, GameParams};
use crate::interval::Interval;
use crate::rational::Rational;
use crate::vitali::{omega_layout_unchecked, TargetTree, TaskKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckResult {
    Pass,
    Fail,
}

/// Position of a designated interval in a target tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Located {
    pub seed: usize,
    pub level: usize,
    pub index: usize,
    pub interval: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Gap between consecutive omegas does not exceed their length.
    OmegaGap { gap: Rational, omega_length: Rational },
    /// A legal Bob move inside `parent` containing no whole omega.
    UncoveredMove { parent: Interval, bob_move: Interval },
    /// `shift(omegas[index], q)` meets more than one other omega.
    ChainBranch { index: usize, shifted: Interval, hits: Vec<usize> },
    /// The (thickened) `source` shifted by `q` meets the (thickened) `target`.
    ShiftOverlap { q_index: usize, q: Rational, source: Located, target: Located },
    /// The omega length at `level` is not below `|q|`.
    Threshold { q_index: usize, q: Rational, seed: usize, level: usize, omega_length: Rational },
    /// A node interval sticks out of the interval that should contain it.
    Containment { seed: usize, level: usize, index: usize, inner: Interval, outer: Interval },
    /// Alice's move in `round` is not a designated move of the tree.
    RunDeviation { round: usize, played: Interval },
    /// The run is longer than the tree's depth.
    BeyondDepth { round: usize, depth: usize },
    /// An Alice move holding fewer than two next-stage windows.
    CantorCoverage { alice_move: Interval, windows_inside: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub params: Option<GameParams>,
    pub depth: Option<usize>,
    pub result: CheckResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Certificate {
    fn new(check: &str, params: Option<&GameParams>, depth: Option<usize>, witness: Option<Witness>) -> Self {
        Certificate {
            check: check.to_string(),
            params: params.cloned(),
            depth,
            result: if witness.is_some() { CheckResult::Fail } else { CheckResult::Pass },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.result == CheckResult::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("history is empty")]
    EmptyHistory,
    #[error("seed-mismatch: first move {0} matches no seed")]
    SeedMismatch(Interval),
}

/// Every placement of a length-`len` move inside `parent` at which the set
/// of contained `targets` can change, plus midpoints between them.
pub fn critical_moves(parent: &Interval, len: &Rational, targets: &[Interval]) -> Vec<Interval> {
    let last = parent.hi() - len;
    let first = parent.lo().clone();
    if last < first {
        return Vec::new();
    }
    let mut offsets = vec![first.clone(), last.clone()];
    for t in targets {
        offsets.push(t.lo().clone());
        offsets.push(t.hi() - len);
    }
    offsets.retain(|o| &first <= o && o <= &last);
    offsets.sort();
    offsets.dedup();
    let mids: Vec<Rational> = offsets.windows(2).map(|w| Rational::midpoint(&w[0], &w[1])).collect();
    offsets.extend(mids);
    offsets.sort();
    offsets.into_iter().map(|o| Interval::with_length(o, len)).collect()
}

fn count_inside(outer: &Interval, targets: &[Interval]) -> usize {
    targets.iter().filter(|t| outer.contains(t)).count()
}

/// Omega layout inside the parent `[0, alpha]`: the gap between consecutive
/// omegas must exceed their length, and every Bob move of length `beta alpha`
/// must contain a whole omega.
pub fn check_omega_geometry(params: &GameParams) -> Certificate {
    let parent = Interval::with_length(Rational::zero(), params.alpha());
    let l = parent.length();
    let gap = params.beta() * &l * (Rational::one() - Rational::from_integer(8) * params.alpha());
    let omega_length = Rational::from_integer(4) * params.contraction() * &l;
    let witness = if gap <= omega_length {
        Some(Witness::OmegaGap { gap, omega_length })
    } else {
        let omegas: Vec<Interval> = omega_layout_unchecked(&parent, params, &Rational::from_integer(4))
            .into_iter()
            .map(|s| s.omega)
            .collect();
        let bob_len = params.beta() * &l;
        critical_moves(&parent, &bob_len, &omegas)
            .into_iter()
            .find(|b| count_inside(b, &omegas) == 0)
            .map(|bob_move| Witness::UncoveredMove { parent: parent.clone(), bob_move })
    };
    Certificate::new("omega-geometry", Some(params), None, witness)
}

/// Full pairwise check that each shifted omega meets at most one other omega.
pub fn check_chain_lemma(omegas: &[Interval], q: &Rational) -> Certificate {
    let witness = omegas.iter().enumerate().find_map(|(i, w)| {
        let shifted = w.shift(q);
        let hits: Vec<usize> =
            omegas.iter().enumerate().filter(|&(j, o)| j != i && o.overlaps(&shifted)).map(|(j, _)| j).collect();
        (hits.len() > 1).then_some(Witness::ChainBranch { index: i, shifted, hits })
    });
    Certificate::new("chain-lemma", None, None, witness)
}

fn thickened_level(tree: &TargetTree, seed: usize, level: usize) -> Vec<Interval> {
    let pad = tree.delta() * tree.alice_length(seed, level);
    tree.designated(seed, level).unwrap_or_default().iter().map(|a| a.expand(&pad)).collect()
}

/// First `(i, j)` with `sources[i] + q` meeting `targets[j]`.
fn first_shift_overlap(sources: &[Interval], targets: &[Interval], q: &Rational) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..targets.len()).collect();
    order.sort_by(|&a, &b| targets[a].lo().cmp(targets[b].lo()));
    // reach[k]: largest right end among the first k + 1 targets in `order`
    let mut reach: Vec<&Rational> = Vec::with_capacity(order.len());
    for &t in &order {
        let hi = targets[t].hi();
        reach.push(reach.last().map_or(hi, |r| if hi > *r { hi } else { *r }));
    }
    sources.iter().enumerate().find_map(|(i, a)| {
        let s = a.shift(q);
        let end = order.partition_point(|&t| targets[t].lo() <= s.hi());
        if end == 0 || reach[end - 1] < s.lo() {
            return None;
        }
        order[..end].iter().rev().find(|&&t| targets[t].hi() >= s.lo()).map(|&j| (i, j))
    })
}

fn containment_witness(tree: &TargetTree) -> Option<Witness> {
    for (si, s) in tree.seeds().iter().enumerate() {
        if !s.seed.contains(&s.root) {
            return Some(Witness::Containment {
                seed: si,
                level: 0,
                index: 0,
                inner: s.root.clone(),
                outer: s.seed.clone(),
            });
        }
        for (li, l) in s.levels.iter().enumerate() {
            for (ni, n) in l.nodes.iter().enumerate() {
                let parent = if li == 0 { &s.root } else { &s.levels[li - 1].nodes[n.parent].alice };
                let pairs = [(&n.alice, &n.window), (&n.window, &n.omega), (&n.omega, parent)];
                if let Some((inner, outer)) = pairs.into_iter().find(|(i, o)| !o.contains(i)) {
                    return Some(Witness::Containment {
                        seed: si,
                        level: l.level,
                        index: ni,
                        inner: inner.clone(),
                        outer: outer.clone(),
                    });
                }
            }
        }
    }
    None
}

/// For every scheduled rational: no (thickened) designated interval shifted
/// by `q` meets another one in the scope of its task, and the omega length
/// at the levels involved is below `|q|`. Node nesting is checked last.
pub fn check_partial_vitali(tree: &TargetTree) -> Certificate {
    let params = tree.params();
    let omega_len = |seed: usize, level: usize| {
        Rational::from_integer(4) * params.alice_length(&tree.seeds()[seed].rho(), level)
    };
    let mut witness = None;
    'tasks: for task in tree.tasks() {
        let (sides, pairs) = match task.kind {
            TaskKind::Intra { seed, level } => (vec![(seed, level)], ((seed, level), (seed, level))),
            TaskKind::Cross { source_seed, source_level, target_seed, target_level } => (
                vec![(source_seed, source_level), (target_seed, target_level)],
                ((source_seed, source_level), (target_seed, target_level)),
            ),
        };
        let ((ss, sl), (ts, tl)) = pairs;
        let sources = thickened_level(tree, ss, sl);
        let targets = thickened_level(tree, ts, tl);
        if let Some((i, j)) = first_shift_overlap(&sources, &targets, &task.q) {
            let designated = |seed: usize, level: usize, index: usize| tree.designated(seed, level).expect("explicit level")[index].clone();
            witness = Some(Witness::ShiftOverlap {
                q_index: task.q_index,
                q: task.q.clone(),
                source: Located { seed: ss, level: sl, index: i, interval: designated(ss, sl, i) },
                target: Located { seed: ts, level: tl, index: j, interval: designated(ts, tl, j) },
            });
            break 'tasks;
        }
        for (seed, level) in sides {
            let len = omega_len(seed, level);
            if len >= task.q.abs() {
                witness = Some(Witness::Threshold {
                    q_index: task.q_index,
                    q: task.q.clone(),
                    seed,
                    level,
                    omega_length: len,
                });
                break 'tasks;
            }
        }
    }
    let witness = witness.or_else(|| containment_witness(tree));
    Certificate::new("partial-vitali", Some(params), Some(tree.depth()), witness)
}

/// Whether every Alice move of `history` is the (thickened) designated move
/// of a child of the node her previous move came from.
pub fn check_run(history: &GameHistory, tree: &TargetTree) -> Result<Certificate, VerifyError> {
    let first = history.first_move().ok_or(VerifyError::EmptyHistory)?;
    let m = tree.match_seed(first).ok_or_else(|| VerifyError::SeedMismatch(first.clone()))?;
    let thick = |i: &Interval| i.delta_thickening(&m.thickening).expect("non-negative thickening");
    let mut cursor = tree.root_ref(m.seed);
    let mut witness = None;
    for (round, played) in history.alice_moves().enumerate() {
        if round > tree.depth() {
            witness = Some(Witness::BeyondDepth { round, depth: tree.depth() });
            break;
        }
        let next = if round == 0 {
            (thick(&cursor.alice) == *played).then(|| cursor.clone())
        } else {
            tree.children(&cursor).into_iter().map(|c| c.node).find(|n| thick(&n.alice) == *played)
        };
        match next {
            Some(n) => cursor = n,
            None => {
                witness = Some(Witness::RunDeviation { round, played: played.clone() });
                break;
            }
        }
    }
    Ok(Certificate::new("run", Some(history.params()), Some(tree.depth()), witness))
}

/// Every Alice move inside a window contains at least two next-stage windows.
/// Scale invariant, so the unit window decides it.
pub fn check_cantor(params: &GameParams) -> Certificate {
    let unit = Interval::with_length(Rational::zero(), &Rational::one());
    let windows = cantor_children(&unit, params);
    let witness = critical_moves(&unit, params.alpha(), &windows).into_iter().find_map(|a| {
        let inside = count_inside(&a, &windows);
        (inside < 2).then_some(Witness::CantorCoverage { alice_move: a, windows_inside: inside })
    });
    Certificate::new("cantor", Some(params), Some(1), witness)
}
