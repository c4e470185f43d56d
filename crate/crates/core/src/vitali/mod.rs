//! The staged omega-interval tree behind a partial Vitali target set, and the
//! Alice strategy that tracks it.

mod chains;
mod enumerate;
mod placement;
mod strategy;
mod tree;

use thiserror::Error;

use crate::interval::Interval;
use crate::rational::Rational;

pub use chains::{build_chains, choose_alice_intervals, choose_in_windows, place_avoiding, slots};
pub use enumerate::{calkin_wilf_next, enumerate_rationals, first_rationals, RationalEnumeration};
pub use placement::{
    alpha_admissible, cross_condition, edge_condition, omega_layout_unchecked, omega_length,
    omega_period, omega_slots, place_omegas, ratio_in_sync_window, right_slack_fraction,
    shrink_admissible, stage_threshold, synchronize_from, synchronize_stages, thickening_tolerance,
    OmegaSlot, TOLERANCE_BITS,
};
pub use strategy::{alice_strategy, AliceTreeStrategy, SeedMatch};
pub use tree::{
    build_target_tree, build_target_tree_with, membership, Child, Level, Membership, Node, NodeRef,
    OmegaDump, SeedTree, StageDump, StageRole, TargetTree, Task, TaskKind, TreeConfig, TreeDump, TreeMode, DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("alpha-too-large: alpha = {0} is not below 1/12")]
    AlphaTooLarge(Rational),
    #[error("shrink factor {0} is not in (3, 4]")]
    InvalidShrink(Rational),
    #[error("invalid-params: {0}")]
    InvalidParams(String),
    #[error("omega length {omega_length} is not below |q| = {q}")]
    ThresholdNotMet { omega_length: Rational, q: Rational },
    #[error("omegas must share one length")]
    UnequalLengths,
    #[error("chain-lemma-violation at omega {index}: {detail}")]
    ChainLemmaViolation { index: usize, detail: String },
    #[error("no-free-slot in omega {index}")]
    NoFreeSlot { index: usize },
    #[error("no admissible placement inside {window}")]
    NoAdmissiblePlacement { window: Interval },
}
