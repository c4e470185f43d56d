//! Parameter-region classifier for the Vitali-set game.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::game::GameParams;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    /// `alpha < 2 - 1/beta`: every dense target set is winning.
    TrivialDenseWinning,
    /// `beta < 2 - 1/alpha`: only the whole line is winning.
    TrivialOnlyFullSpace,
    /// `beta < alpha`: no Vitali set is winning.
    VitaliAllLosing,
    /// `alpha < 1/12` and `beta > alpha / (1 - 5 alpha)^2`: some Vitali set is winning.
    VitaliSomeWinning,
    Unknown,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 5] = [
        RegionLabel::TrivialDenseWinning,
        RegionLabel::TrivialOnlyFullSpace,
        RegionLabel::VitaliAllLosing,
        RegionLabel::VitaliSomeWinning,
        RegionLabel::Unknown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionLabel::TrivialDenseWinning => "TrivialDenseWinning",
            RegionLabel::TrivialOnlyFullSpace => "TrivialOnlyFullSpace",
            RegionLabel::VitaliAllLosing => "VitaliAllLosing",
            RegionLabel::VitaliSomeWinning => "VitaliSomeWinning",
            RegionLabel::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `alpha / (1 - 5 alpha)^2`, the lower bound on beta for a winning Vitali set.
pub fn winning_beta_bound(alpha: &Rational) -> Rational {
    let d = Rational::one() - Rational::from_integer(5) * alpha;
    alpha / (&d * &d)
}

/// All region labels that apply to `params`. Boundary points of every
/// inequality fall outside the corresponding label.
pub fn classify_region(params: &GameParams) -> BTreeSet<RegionLabel> {
    let (a, b) = (params.alpha(), params.beta());
    let two = Rational::from_integer(2);
    let mut labels = BTreeSet::new();
    if a < &(&two - b.recip()) {
        labels.insert(RegionLabel::TrivialDenseWinning);
    }
    if b < &(&two - a.recip()) {
        labels.insert(RegionLabel::TrivialOnlyFullSpace);
    }
    if b < a {
        labels.insert(RegionLabel::VitaliAllLosing);
    }
    if a < &Rational::new(1, 12) && b > &winning_beta_bound(a) {
        labels.insert(RegionLabel::VitaliSomeWinning);
    }
    if labels.is_empty() {
        labels.insert(RegionLabel::Unknown);
    }
    labels
}

/// Semicolon-joined label names, as used by the sweep CSV and the CLI.
pub fn join_labels(labels: &BTreeSet<RegionLabel>) -> String {
    labels.iter().map(|l| l.name()).collect::<Vec<_>>().join(";")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub alpha: Rational,
    pub beta: Rational,
    pub labels: BTreeSet<RegionLabel>,
}

/// Classifies the grid `alpha = i/(n+1)`, `beta = j/(n+1)` for `1 <= i, j <= n`.
pub fn sweep(grid: usize) -> Vec<SweepRow> {
    let den = grid as i64 + 1;
    let mut rows = Vec::with_capacity(grid * grid);
    for i in 1..=grid as i64 {
        for j in 1..=grid as i64 {
            let params = GameParams::new(Rational::new(i, den), Rational::new(j, den))
                .expect("grid points lie strictly inside the unit square");
            let labels = classify_region(&params);
            rows.push(SweepRow {
                alpha: params.alpha().clone(),
                beta: params.beta().clone(),
                labels,
            });
        }
    }
    rows
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("alpha,beta,labels\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.alpha, row.beta, join_labels(&row.labels)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn labels(a: Rational, b: Rational) -> Vec<RegionLabel> {
        classify_region(&GameParams::new(a, b).unwrap()).into_iter().collect()
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(labels(q(1, 2), q(1, 4)), vec![RegionLabel::VitaliAllLosing]);
        assert_eq!(labels(q(1, 20), q(1, 2)), vec![RegionLabel::VitaliSomeWinning]);
        assert_eq!(labels(q(1, 10), q(9, 10)), vec![RegionLabel::TrivialDenseWinning]);
        // beta < alpha also holds here, so the losing label applies alongside.
        assert_eq!(
            labels(q(19, 20), q(1, 10)),
            vec![RegionLabel::TrivialOnlyFullSpace, RegionLabel::VitaliAllLosing]
        );
    }

    #[test]
    fn winning_bound_value() {
        assert_eq!(winning_beta_bound(&q(1, 20)), q(4, 45));
    }

    #[test]
    fn boundaries_are_unknown() {
        assert_eq!(labels(q(1, 3), q(1, 3)), vec![RegionLabel::Unknown]);
        // beta exactly at alpha / (1 - 5 alpha)^2
        assert_eq!(labels(q(1, 20), q(4, 45)), vec![RegionLabel::Unknown]);
    }

    #[test]
    fn csv_shape() {
        let rows = sweep(2);
        let csv = sweep_csv(&rows);
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("alpha,beta,labels\n1/3,1/3,Unknown\n"));
    }
}
