//! The target tree: per seed, a root Alice interval and levels of omegas
//! with designated Alice intervals, scheduled so that every handled rational
//! is excluded as a difference of surviving points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::chains::{build_chains, choose_in_windows, place_avoiding};
use super::enumerate::RationalEnumeration;
use super::placement::{
    alpha_admissible, omega_layout_unchecked, omega_slots, stage_threshold, synchronize_from,
    thickening_tolerance,
};
use super::ConstructionError;
use crate::game::GameParams;
use crate::interval::Interval;
use crate::rational::Rational;

/// Cap on materialized nodes when none is given.
pub const DEFAULT_NODE_BUDGET: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeMode {
    Single,
    Pair,
    Diagonal,
    Thickened,
}

impl TreeMode {
    pub fn name(self) -> &'static str {
        match self {
            TreeMode::Single => "single",
            TreeMode::Pair => "pair",
            TreeMode::Diagonal => "diagonal",
            TreeMode::Thickened => "thickened",
        }
    }
}

impl fmt::Display for TreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "single" => Ok(TreeMode::Single),
            "pair" => Ok(TreeMode::Pair),
            "diagonal" => Ok(TreeMode::Diagonal),
            "thickened" => Ok(TreeMode::Thickened),
            other => Err(format!("unknown tree mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeConfig {
    /// Deepest level Alice's strategy answers for.
    pub depth: usize,
    pub mode: TreeMode,
    /// Scheduling stops before the materialized node count would exceed this.
    pub node_budget: usize,
}

impl TreeConfig {
    pub fn new(depth: usize, mode: TreeMode) -> Self {
        TreeConfig { depth, mode, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// What a level of one seed's tree is used for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "kebab-case")]
pub enum StageRole {
    /// Centered designated intervals.
    Filler,
    /// Slot rule along the chains of `q` within this seed.
    Intra { q_index: usize, q: Rational },
    /// Designated intervals placed clear of the partner level's.
    CrossLead { q_index: usize, q: Rational, partner_seed: usize, partner_level: usize },
    /// Centered; the lead level dodges these.
    CrossPartner { q_index: usize, q: Rational, lead_seed: usize, lead_level: usize },
}

impl StageRole {
    pub fn q_index(&self) -> Option<usize> {
        match self {
            StageRole::Filler => None,
            StageRole::Intra { q_index, .. }
            | StageRole::CrossLead { q_index, .. }
            | StageRole::CrossPartner { q_index, .. } => Some(*q_index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    /// Index of the parent in the previous level (0 for children of the root).
    pub parent: usize,
    pub omega: Interval,
    pub window: Interval,
    pub chain: Option<usize>,
    pub alice: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub level: usize,
    pub role: StageRole,
    /// Sorted by position; children of one parent are contiguous.
    pub nodes: Vec<Node>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedTree {
    pub seed: Interval,
    /// Alice's designated answer to the seed.
    pub root: Interval,
    /// `levels[k - 1]` is level `k`.
    pub levels: Vec<Level>,
}

impl SeedTree {
    pub fn explicit_depth(&self) -> usize {
        self.levels.len()
    }

    pub fn rho(&self) -> Rational {
        self.seed.length()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TaskKind {
    Intra { seed: usize, level: usize },
    /// `shift(A, q)` for designated `A` at the source level must miss every
    /// designated interval at the target level.
    Cross { source_seed: usize, source_level: usize, target_seed: usize, target_level: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub q_index: usize,
    pub q: Rational,
    pub kind: TaskKind,
}

/// A reference to one node: the root (`level == 0`), an explicit node
/// (`index` set) or an implicit filler node identified by its interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeRef {
    pub seed: usize,
    pub level: usize,
    pub index: Option<usize>,
    pub alice: Interval,
}

/// A child as seen from its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Child {
    pub node: NodeRef,
    pub omega: Interval,
    pub window: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetTree {
    params: GameParams,
    mode: TreeMode,
    depth: usize,
    shrink: Rational,
    delta: Rational,
    seeds: Vec<SeedTree>,
    tasks: Vec<Task>,
    rationals_handled: usize,
}

impl TargetTree {
    pub fn params(&self) -> &GameParams {
        &self.params
    }

    pub fn mode(&self) -> TreeMode {
        self.mode
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn shrink(&self) -> &Rational {
        &self.shrink
    }

    /// Thickening tolerance; zero outside thickened mode.
    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn seeds(&self) -> &[SeedTree] {
        &self.seeds
    }

    pub fn tasks(&self) -> &[Task] {
        &self.tasks
    }

    /// Number of leading rationals of the enumeration whose tasks were all scheduled.
    pub fn rationals_handled(&self) -> usize {
        self.rationals_handled
    }

    pub fn node_count(&self) -> usize {
        self.seeds.iter().map(|s| 1 + s.levels.iter().map(|l| l.nodes.len()).sum::<usize>()).sum()
    }

    /// Length of designated intervals of `seed` at `level`.
    pub fn alice_length(&self, seed: usize, level: usize) -> Rational {
        self.params.alice_length(&self.seeds[seed].rho(), level)
    }

    /// Designated intervals of an explicit level (the root for level 0).
    pub fn designated(&self, seed: usize, level: usize) -> Option<Vec<Interval>> {
        let s = &self.seeds[seed];
        if level == 0 {
            return Some(vec![s.root.clone()]);
        }
        s.levels.get(level - 1).map(|l| l.nodes.iter().map(|n| n.alice.clone()).collect())
    }

    pub fn root_ref(&self, seed: usize) -> NodeRef {
        NodeRef { seed, level: 0, index: Some(0), alice: self.seeds[seed].root.clone() }
    }

    /// Children of `parent`, explicit where materialized and centered fillers beyond.
    pub fn children(&self, parent: &NodeRef) -> Vec<Child> {
        let s = &self.seeds[parent.seed];
        let level = parent.level + 1;
        if let (Some(l), Some(p)) = (s.levels.get(level - 1), parent.index) {
            let start = l.nodes.partition_point(|n| n.parent < p);
            let end = l.nodes.partition_point(|n| n.parent <= p);
            return (start..end)
                .map(|i| {
                    let n = &l.nodes[i];
                    Child {
                        node: NodeRef { seed: parent.seed, level, index: Some(i), alice: n.alice.clone() },
                        omega: n.omega.clone(),
                        window: n.window.clone(),
                    }
                })
                .collect();
        }
        let u = &self.params.contraction() * parent.alice.length();
        omega_layout_unchecked(&parent.alice, &self.params, &self.shrink)
            .into_iter()
            .map(|slot| Child {
                node: NodeRef {
                    seed: parent.seed,
                    level,
                    index: None,
                    alice: Interval::centered(&slot.window.center(), &u),
                },
                omega: slot.omega,
                window: slot.window,
            })
            .collect()
    }

    /// A copy with one designated interval replaced (level 0 replaces the root).
    pub fn with_designated(
        &self,
        seed: usize,
        level: usize,
        index: usize,
        alice: Interval,
    ) -> Option<TargetTree> {
        let mut out = self.clone();
        let s = out.seeds.get_mut(seed)?;
        if level == 0 {
            s.root = alice;
        } else {
            s.levels.get_mut(level - 1)?.nodes.get_mut(index)?.alice = alice;
        }
        Some(out)
    }

    /// JSON-friendly view listing every explicit stage.
    pub fn dump(&self) -> TreeDump {
        let mut stages = Vec::new();
        for (si, s) in self.seeds.iter().enumerate() {
            for l in &s.levels {
                let q = match &l.role {
                    StageRole::Filler => None,
                    StageRole::Intra { q, .. }
                    | StageRole::CrossLead { q, .. }
                    | StageRole::CrossPartner { q, .. } => Some(q.clone()),
                };
                stages.push(StageDump {
                    seed: si,
                    n: l.level,
                    q_index: l.role.q_index(),
                    q,
                    omegas: l
                        .nodes
                        .iter()
                        .map(|n| OmegaDump {
                            lo: n.omega.lo().clone(),
                            hi: n.omega.hi().clone(),
                            chain: n.chain,
                            alice: n.alice.clone(),
                        })
                        .collect(),
                });
            }
        }
        TreeDump {
            params: self.params.clone(),
            mode: self.mode,
            depth: self.depth,
            delta: self.delta.clone(),
            rationals_handled: self.rationals_handled,
            seeds: self.seeds.iter().map(|s| s.seed.clone()).collect(),
            roots: self.seeds.iter().map(|s| s.root.clone()).collect(),
            stages,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaDump {
    pub lo: Rational,
    pub hi: Rational,
    pub chain: Option<usize>,
    pub alice: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageDump {
    pub seed: usize,
    pub n: usize,
    pub q_index: Option<usize>,
    pub q: Option<Rational>,
    pub omegas: Vec<OmegaDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDump {
    pub params: GameParams,
    pub mode: TreeMode,
    pub depth: usize,
    pub delta: Rational,
    pub rationals_handled: usize,
    pub seeds: Vec<Interval>,
    pub roots: Vec<Interval>,
    pub stages: Vec<StageDump>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    InWindow,
    Out,
    Unresolved,
}

/// Whether `x` survives in some seed's designated intervals at every level up to `depth`.
pub fn membership(tree: &TargetTree, x: &Rational, depth: usize) -> Membership {
    if depth > tree.depth {
        return Membership::Unresolved;
    }
    'seeds: for seed in 0..tree.seeds.len() {
        let mut cursor = tree.root_ref(seed);
        if !cursor.alice.contains_point(x) {
            continue;
        }
        for _ in 0..depth {
            match tree.children(&cursor).into_iter().find(|c| c.node.alice.contains_point(x)) {
                Some(c) => cursor = c.node,
                None => continue 'seeds,
            }
        }
        return Membership::InWindow;
    }
    Membership::Out
}

pub fn build_target_tree(
    seeds: &[Interval],
    params: &GameParams,
    depth: usize,
    mode: TreeMode,
) -> Result<TargetTree, ConstructionError> {
    build_target_tree_with(seeds, params, &TreeConfig::new(depth, mode))
}

fn validate(seeds: &[Interval], params: &GameParams, config: &TreeConfig) -> Result<(), ConstructionError> {
    let invalid = |m: &str| Err(ConstructionError::InvalidParams(m.to_string()));
    if config.depth == 0 {
        return invalid("depth must be at least 1");
    }
    let count_ok = match config.mode {
        TreeMode::Single => seeds.len() == 1,
        TreeMode::Pair => seeds.len() == 2,
        TreeMode::Diagonal | TreeMode::Thickened => !seeds.is_empty(),
    };
    if !count_ok {
        return invalid(&format!("{} mode does not take {} seeds", config.mode, seeds.len()));
    }
    if seeds.iter().any(Interval::is_degenerate) {
        return invalid("seeds must have positive length");
    }
    if !alpha_admissible(params) {
        return Err(ConstructionError::AlphaTooLarge(params.alpha().clone()));
    }
    if params.alpha() >= params.beta() {
        return invalid("construction needs alpha < beta");
    }
    let unequal = seeds.windows(2).any(|w| w[0].length() != w[1].length());
    if unequal {
        let d = Rational::one() - Rational::from_integer(8) * params.alpha();
        if params.beta() <= &(params.alpha() / (&d * &d)) {
            return invalid("seeds of different lengths need beta > alpha / (1 - 8 alpha)^2");
        }
    }
    if config.mode == TreeMode::Thickened {
        let d = Rational::one() - Rational::from_integer(5) * params.alpha();
        if params.beta() <= &(params.alpha() / (&d * &d)) {
            return invalid("thickened mode needs beta > alpha / (1 - 5 alpha)^2");
        }
    }
    Ok(())
}

/// Tasks for rational `j`, in scheduling order.
fn tasks_for(mode: TreeMode, seeds: usize) -> Vec<(usize, Option<usize>)> {
    let mut out: Vec<(usize, Option<usize>)> = (0..seeds).map(|s| (s, None)).collect();
    if mode != TreeMode::Single {
        for k in 0..seeds {
            for l in k + 1..seeds {
                out.push((k, Some(l)));
            }
        }
    }
    out
}

struct Builder<'a> {
    params: &'a GameParams,
    config: &'a TreeConfig,
    shrink: Rational,
    delta: Rational,
    per_parent: u128,
    seeds: Vec<SeedTree>,
    roles: Vec<Vec<StageRole>>,
    tasks: Vec<Task>,
    nodes: u128,
}

impl Builder<'_> {
    fn frontier(&self, seed: usize) -> usize {
        self.roles[seed].len() + 1
    }

    fn threshold(&self, q: &Rational, seed: usize) -> usize {
        stage_threshold(q, &self.seeds[seed].rho(), self.params)
    }

    /// Nodes added by materializing levels `from..=to`.
    fn cost(&self, from: usize, to: usize) -> u128 {
        (from..=to).map(|k| self.per_parent.saturating_pow(k as u32)).fold(0u128, u128::saturating_add)
    }

    fn assign(&mut self, seed: usize, level: usize, role: StageRole) {
        while self.roles[seed].len() + 1 < level {
            self.roles[seed].push(StageRole::Filler);
        }
        self.roles[seed].push(role);
    }

    fn materialize(&mut self, seed: usize) -> Result<(), ConstructionError> {
        while self.seeds[seed].levels.len() < self.roles[seed].len() {
            let level = self.seeds[seed].levels.len() + 1;
            let role = self.roles[seed][level - 1].clone();
            let nodes = self.build_level(seed, level, &role)?;
            self.nodes += nodes.len() as u128;
            self.seeds[seed].levels.push(Level { level, role, nodes });
        }
        Ok(())
    }

    fn build_level(&self, seed: usize, level: usize, role: &StageRole) -> Result<Vec<Node>, ConstructionError> {
        let s = &self.seeds[seed];
        let parents: Vec<&Interval> = if level == 1 {
            vec![&s.root]
        } else {
            s.levels[level - 2].nodes.iter().map(|n| &n.alice).collect()
        };
        let mut nodes = Vec::new();
        for (pi, parent) in parents.into_iter().enumerate() {
            for slot in omega_slots(parent, self.params, &self.shrink)? {
                nodes.push(Node {
                    parent: pi,
                    alice: slot.window.clone(),
                    omega: slot.omega,
                    window: slot.window,
                    chain: None,
                });
            }
        }
        let u = self.params.alice_length(&s.rho(), level);
        let pad = &self.delta * &u;
        match role {
            StageRole::Filler | StageRole::CrossPartner { .. } => {
                for n in &mut nodes {
                    n.alice = Interval::centered(&n.window.center(), &u);
                }
            }
            StageRole::Intra { q, .. } => {
                let omegas: Vec<Interval> = nodes.iter().map(|n| n.omega.clone()).collect();
                let windows: Vec<Interval> = nodes.iter().map(|n| n.window.clone()).collect();
                let chains = build_chains(&omegas, q)?;
                let chosen = choose_in_windows(&windows, &chains, q, &u, &pad)?;
                for (ci, chain) in chains.iter().enumerate() {
                    for &i in chain {
                        nodes[i].chain = Some(ci);
                    }
                }
                for (n, a) in nodes.iter_mut().zip(chosen) {
                    n.alice = a;
                }
            }
            StageRole::CrossLead { q, partner_seed, partner_level, .. } => {
                let partner = &self.seeds[*partner_seed].levels[*partner_level - 1];
                let partner_len = self.params.alice_length(&self.seeds[*partner_seed].rho(), *partner_level);
                // The lower seed index is the source of the shift.
                let offset = if seed < *partner_seed { -q } else { q.clone() };
                let grow = &self.delta * &partner_len;
                let blockers: Vec<Interval> =
                    partner.nodes.iter().map(|n| n.alice.shift(&offset).expand(&grow)).collect();
                let padded_len = &u + &(&pad * Rational::from_integer(2));
                for n in &mut nodes {
                    let window = n.window.expand(&pad);
                    let start = blockers.partition_point(|b| b.hi() < window.lo());
                    let end = blockers.partition_point(|b| b.lo() <= window.hi());
                    let placed = place_avoiding(&window, &padded_len, &blockers[start..end.max(start)])
                        .ok_or_else(|| ConstructionError::NoAdmissiblePlacement { window: n.window.clone() })?;
                    n.alice = Interval::with_length(placed.lo() + &pad, &u);
                }
            }
        }
        Ok(nodes)
    }

    fn level_fits(&self, seed: usize, level: usize) -> bool {
        level <= self.config.depth
            && self.nodes.saturating_add(self.cost(self.frontier(seed), level)) <= self.config.node_budget as u128
    }

    fn schedule_intra(&mut self, seed: usize, q_index: usize, q: &Rational) -> Result<bool, ConstructionError> {
        let level = self.frontier(seed).max(self.threshold(q, seed));
        if !self.level_fits(seed, level) {
            return Ok(false);
        }
        self.assign(seed, level, StageRole::Intra { q_index, q: q.clone() });
        self.materialize(seed)?;
        self.tasks.push(Task { q_index, q: q.clone(), kind: TaskKind::Intra { seed, level } });
        Ok(true)
    }

    fn schedule_cross(&mut self, k: usize, l: usize, q_index: usize, q: &Rational) -> Result<bool, ConstructionError> {
        let m_min = self.frontier(k).max(self.threshold(q, k));
        let n_min = self.frontier(l).max(self.threshold(q, l));
        let (rho_k, rho_l) = (self.seeds[k].rho(), self.seeds[l].rho());
        let (m, n) = synchronize_from(&rho_k, &rho_l, self.params, m_min, n_min);
        if m > self.config.depth || n > self.config.depth {
            return Ok(false);
        }
        let total = self
            .nodes
            .saturating_add(self.cost(self.frontier(k), m))
            .saturating_add(self.cost(self.frontier(l), n));
        if total > self.config.node_budget as u128 {
            return Ok(false);
        }
        let k_leads = self.params.alice_length(&rho_k, m) >= self.params.alice_length(&rho_l, n);
        let (lead, lead_level, partner, partner_level) = if k_leads { (k, m, l, n) } else { (l, n, k, m) };
        self.assign(
            partner,
            partner_level,
            StageRole::CrossPartner { q_index, q: q.clone(), lead_seed: lead, lead_level },
        );
        self.materialize(partner)?;
        self.assign(
            lead,
            lead_level,
            StageRole::CrossLead { q_index, q: q.clone(), partner_seed: partner, partner_level },
        );
        self.materialize(lead)?;
        self.tasks.push(Task {
            q_index,
            q: q.clone(),
            kind: TaskKind::Cross { source_seed: k, source_level: m, target_seed: l, target_level: n },
        });
        Ok(true)
    }
}

/// Builds the tree for `seeds`, scheduling rationals in enumeration order
/// until the next one no longer fits in `config.depth` levels or the node
/// budget.
pub fn build_target_tree_with(
    seeds: &[Interval],
    params: &GameParams,
    config: &TreeConfig,
) -> Result<TargetTree, ConstructionError> {
    validate(seeds, params, config)?;
    let (shrink, delta) = match config.mode {
        TreeMode::Thickened => (Rational::new(7, 2), thickening_tolerance(params)?),
        _ => (Rational::from_integer(4), Rational::zero()),
    };
    let unit = Interval::with_length(Rational::zero(), &Rational::one());
    let per_parent = omega_layout_unchecked(&unit, params, &shrink).len() as u128;
    let seed_trees: Vec<SeedTree> = seeds
        .iter()
        .map(|s| SeedTree {
            seed: s.clone(),
            root: Interval::centered(&s.center(), &(params.alpha() * s.length())),
            levels: Vec::new(),
        })
        .collect();
    let mut b = Builder {
        params,
        config,
        shrink: shrink.clone(),
        delta: delta.clone(),
        per_parent,
        roles: vec![Vec::new(); seeds.len()],
        nodes: seed_trees.len() as u128,
        seeds: seed_trees,
        tasks: Vec::new(),
    };

    let mut handled = 0;
    'rationals: for (q_index, q) in RationalEnumeration::new().enumerate() {
        for (k, other) in tasks_for(config.mode, seeds.len()) {
            let done = match other {
                None => b.schedule_intra(k, q_index, &q)?,
                Some(l) => b.schedule_cross(k, l, q_index, &q)?,
            };
            if !done {
                break 'rationals;
            }
        }
        handled = q_index + 1;
    }

    Ok(TargetTree {
        params: params.clone(),
        mode: config.mode,
        depth: config.depth,
        shrink,
        delta,
        seeds: b.seeds,
        tasks: b.tasks,
        rationals_handled: handled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::iv;
    use crate::rational::q;

    fn running() -> GameParams {
        GameParams::new(q(1, 20), q(1, 2)).unwrap()
    }

    #[test]
    fn single_seed_schedule() {
        let tree = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 4, TreeMode::Single).unwrap();
        assert_eq!(tree.rationals_handled(), 4);
        let levels: Vec<_> = tree.tasks().iter().map(|t| (t.q_index, t.kind.clone())).collect();
        assert_eq!(levels[0], (0, TaskKind::Intra { seed: 0, level: 1 }));
        assert_eq!(levels[1], (1, TaskKind::Intra { seed: 0, level: 2 }));
        let s = &tree.seeds()[0];
        assert_eq!(s.root, iv(q(19, 40), q(21, 40)));
        assert_eq!(s.levels[0].nodes.len(), 3);
        assert_eq!(s.levels[3].nodes.len(), 81);
    }

    #[test]
    fn rejects_bad_configurations() {
        let seed = [iv(q(0, 1), q(1, 1))];
        assert!(matches!(
            build_target_tree(&seed, &running(), 0, TreeMode::Single),
            Err(ConstructionError::InvalidParams(_))
        ));
        assert!(build_target_tree(&seed, &running(), 3, TreeMode::Pair).is_err());
        let p = GameParams::new(q(1, 12), q(1, 2)).unwrap();
        assert!(matches!(
            build_target_tree(&seed, &p, 3, TreeMode::Single),
            Err(ConstructionError::AlphaTooLarge(_))
        ));
        let p = GameParams::new(q(1, 20), q(1, 30)).unwrap();
        assert!(build_target_tree(&seed, &p, 3, TreeMode::Single).is_err());
    }

    #[test]
    fn budget_limits_materialization() {
        let config = TreeConfig { depth: 20, mode: TreeMode::Single, node_budget: 200 };
        let tree = build_target_tree_with(&[iv(q(0, 1), q(1, 1))], &running(), &config).unwrap();
        assert!(tree.node_count() <= 200);
        assert_eq!(tree.seeds()[0].explicit_depth(), 4);
        assert_eq!(tree.rationals_handled(), 4);
    }

    #[test]
    fn implicit_children_are_centered() {
        let config = TreeConfig { depth: 6, mode: TreeMode::Single, node_budget: 50 };
        let tree = build_target_tree_with(&[iv(q(0, 1), q(1, 1))], &running(), &config).unwrap();
        let mut cursor = tree.root_ref(0);
        for _ in 0..6 {
            let kids = tree.children(&cursor);
            assert_eq!(kids.len(), 3);
            cursor = kids[0].node.clone();
        }
        assert_eq!(cursor.index, None);
        assert_eq!(cursor.alice.length(), q(1, 20) * q(1, 40).pow(6));
    }

    #[test]
    fn membership_examples() {
        let tree = build_target_tree(&[iv(q(0, 1), q(1, 1))], &running(), 3, TreeMode::Single).unwrap();
        assert_eq!(membership(&tree, &q(2, 1), 1), Membership::Out);
        assert_eq!(membership(&tree, &q(1, 2), 4), Membership::Unresolved);
        let mut cursor = tree.root_ref(0);
        for _ in 0..3 {
            cursor = tree.children(&cursor)[0].node.clone();
        }
        assert_eq!(membership(&tree, cursor.alice.lo(), 3), Membership::InWindow);
        // inside the first level-1 omega but outside its designated interval
        let first = &tree.seeds()[0].levels[0].nodes[0];
        assert_eq!(first.alice.lo(), first.omega.lo());
        assert_eq!(membership(&tree, first.omega.hi(), 1), Membership::Out);
    }
}
