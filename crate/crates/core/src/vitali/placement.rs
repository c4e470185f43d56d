//! Placement of the omega intervals inside an Alice interval, stage
//! thresholds, stage synchronization for seeds of different lengths and the
//! thickening tolerance.

use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::game::GameParams;
use crate::interval::Interval;
use crate::rational::Rational;

/// One placed omega: the full interval `omega` (length `4 alpha beta L`) and
/// the `window` with the same center in which Alice's interval is chosen
/// (length `shrink * alpha * beta * L`; equal to `omega` when `shrink == 4`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSlot {
    pub omega: Interval,
    pub window: Interval,
}

pub(crate) fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `alpha < 1/12`, the strict gap condition.
pub fn alpha_admissible(params: &GameParams) -> bool {
    params.alpha() < &r(1, 12)
}

/// Shrink factors `4` and `4 - 2 eps` with `0 < eps < 1/2` (so `7/2` included).
pub fn shrink_admissible(shrink: &Rational) -> bool {
    shrink > &r(3, 1) && shrink <= &r(4, 1)
}

/// Period of the omega layout inside a parent of length `parent_len`: `beta L (1 - 4 alpha)`.
pub fn omega_period(params: &GameParams, parent_len: &Rational) -> Rational {
    params.beta() * parent_len * (Rational::one() - r(4, 1) * params.alpha())
}

/// Full omega length inside a parent of length `parent_len`: `4 alpha beta L`.
pub fn omega_length(params: &GameParams, parent_len: &Rational) -> Rational {
    r(4, 1) * params.alpha() * params.beta() * parent_len
}

/// Layout without the `alpha < 1/12` check; used by the verification harness
/// to examine inadmissible parameters.
pub fn omega_layout_unchecked(parent: &Interval, params: &GameParams, shrink: &Rational) -> Vec<OmegaSlot> {
    let len = parent.length();
    let period = omega_period(params, &len);
    let full = omega_length(params, &len);
    if full > len || !period.is_positive() {
        return Vec::new();
    }
    // largest l with l * period + full <= len
    let last = ((&len - &full) / &period).floor();
    let count: usize = last.numer().try_into().expect("omega count fits in usize");
    let window_len = shrink * params.alpha() * params.beta() * &len;
    let half_full = &full / r(2, 1);
    (0..=count)
        .map(|l| {
            let lo = parent.lo() + &(&period * Rational::from_integer(l as i64));
            let omega = Interval::with_length(lo, &full);
            let center = omega.lo() + &half_full;
            let window = Interval::centered(&center, &window_len);
            OmegaSlot { omega, window }
        })
        .collect()
}

/// Omega intervals (windows of the given shrink) inside Alice interval `parent`.
///
/// `omega_l` starts at `parent.lo + l * beta L (1 - 4 alpha)` and `l` runs up
/// to the largest index whose full omega still fits. Windows for a shrink
/// below 4 keep the center of the full omega.
pub fn place_omegas(
    parent: &Interval,
    params: &GameParams,
    shrink: &Rational,
) -> Result<Vec<Interval>, ConstructionError> {
    Ok(omega_slots(parent, params, shrink)?.into_iter().map(|s| s.window).collect())
}

pub fn omega_slots(
    parent: &Interval,
    params: &GameParams,
    shrink: &Rational,
) -> Result<Vec<OmegaSlot>, ConstructionError> {
    if !alpha_admissible(params) {
        return Err(ConstructionError::AlphaTooLarge(params.alpha().clone()));
    }
    if !shrink_admissible(shrink) {
        return Err(ConstructionError::InvalidShrink(shrink.clone()));
    }
    Ok(omega_layout_unchecked(parent, params, shrink))
}

/// Least `n >= 1` with `4 alpha (alpha beta)^n rho < |q|`.
pub fn stage_threshold(q: &Rational, rho: &Rational, params: &GameParams) -> usize {
    assert!(!q.is_zero(), "threshold of q = 0 is undefined");
    assert!(rho.is_positive(), "rho must be positive");
    let target = q.abs();
    let ab = params.contraction();
    let mut len = r(4, 1) * params.alpha() * &ab * rho;
    let mut n = 1;
    while len >= target {
        len = len * &ab;
        n += 1;
    }
    n
}

/// Whether `ratio` lies in `[sqrt(ab), 1/sqrt(ab)]`, decided by squaring.
pub fn ratio_in_sync_window(ratio: &Rational, ab: &Rational) -> bool {
    let sq = ratio * ratio;
    ab <= &sq && sq <= ab.recip()
}

/// Lexicographically least `(m, n)` with `m >= m_min`, `n >= n_min` and
/// `(rho2 / rho1) (alpha beta)^(n - m)` inside the synchronization window.
pub fn synchronize_from(
    rho1: &Rational,
    rho2: &Rational,
    params: &GameParams,
    m_min: usize,
    n_min: usize,
) -> (usize, usize) {
    assert!(rho1.is_positive() && rho2.is_positive(), "lengths must be positive");
    let ab = params.contraction();
    let upper_sq = ab.recip();
    let base = rho2 / rho1;
    let mut m = m_min;
    loop {
        // ratio at (m, n_min); it shrinks by ab for every step in n.
        let mut ratio = &base * ab.pow(n_min as i32 - m as i32);
        let mut n = n_min;
        while &ratio * &ratio > upper_sq {
            ratio = ratio * &ab;
            n += 1;
        }
        if ratio_in_sync_window(&ratio, &ab) {
            return (m, n);
        }
        m += 1;
    }
}

/// Round counts `(m, n)`, both at least 1, aligning games of opening lengths
/// `rho1` and `rho2` to within a factor `1/sqrt(alpha beta)`.
pub fn synchronize_stages(rho1: &Rational, rho2: &Rational, params: &GameParams) -> (usize, usize) {
    synchronize_from(rho1, rho2, params, 1, 1)
}

/// Slack left to the right of the last full omega, as a fraction of the
/// parent length. Scale invariant, so one value covers every level.
pub fn right_slack_fraction(params: &GameParams) -> Rational {
    let unit = Interval::with_length(Rational::zero(), &Rational::one());
    let slots = omega_layout_unchecked(&unit, params, &r(4, 1));
    match slots.last() {
        Some(last) => Rational::one() - last.omega.hi(),
        None => Rational::one(),
    }
}

/// Denominator exponent of the dyadic grid searched for the tolerance.
pub const TOLERANCE_BITS: u32 = 32;

/// Cross-game disjointness at ratio `r = sqrt(alpha beta)`, strict:
/// `r (1 - 5 alpha - 2 alpha d) > alpha (1 + 2 d)`, compared after squaring.
pub fn cross_condition(params: &GameParams, d: &Rational) -> bool {
    let a = params.alpha();
    let spread = Rational::one() + r(2, 1) * d;
    let room = Rational::one() - r(5, 1) * a - r(2, 1) * a * d;
    if !room.is_positive() {
        return false;
    }
    let lhs = params.contraction() * &room * &room;
    let rhs = a * a * &spread * &spread;
    lhs > rhs
}

/// Edge containment: a Bob move that pokes out of a `d`-thickened parent still
/// contains the first (and last) full omega:
/// `d (1 - 2 beta) <= beta (1 - 4 alpha) - right slack`.
pub fn edge_condition(params: &GameParams, d: &Rational) -> bool {
    let b = params.beta();
    let lhs = d * (Rational::one() - r(2, 1) * b);
    let rhs = b * (Rational::one() - r(4, 1) * params.alpha()) - right_slack_fraction(params);
    lhs <= rhs
}

fn tolerance_holds(params: &GameParams, d: &Rational) -> bool {
    cross_condition(params, d) && edge_condition(params, d)
}

/// The thickening tolerance `delta`: `1/12` if it qualifies, otherwise the
/// largest `k / 2^32 <= 1/12` satisfying both the cross-game and the edge
/// inequality, found by bisection on `k`.
pub fn thickening_tolerance(params: &GameParams) -> Result<Rational, ConstructionError> {
    if !alpha_admissible(params) {
        return Err(ConstructionError::AlphaTooLarge(params.alpha().clone()));
    }
    let cap = r(1, 12);
    if tolerance_holds(params, &cap) {
        return Ok(cap);
    }
    if !tolerance_holds(params, &Rational::zero()) {
        return Err(ConstructionError::InvalidParams(
            "thickened mode needs beta > alpha / (1 - 5 alpha)^2".into(),
        ));
    }
    let scale = Rational::from_integer(1i64 << TOLERANCE_BITS);
    let at = |k: i64| Rational::new(k, 1i64 << TOLERANCE_BITS);
    let (mut lo, mut hi) = (0i64, (&cap * &scale).floor().numer().try_into().unwrap());
    if tolerance_holds(params, &at(hi)) {
        return Ok(at(hi));
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if tolerance_holds(params, &at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(at(lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: Rational, b: Rational) -> GameParams {
        GameParams::new(a, b).unwrap()
    }

    fn iv(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn running_example_layout() {
        let p = params(r(1, 20), r(1, 2));
        let parent = iv(r(0, 1), r(1, 20));
        let omegas = place_omegas(&parent, &p, &r(4, 1)).unwrap();
        assert_eq!(
            omegas,
            vec![
                iv(r(0, 1), r(1, 200)),
                iv(r(4, 200), r(5, 200)),
                iv(r(8, 200), r(9, 200))
            ]
        );
    }

    #[test]
    fn shrunk_windows_keep_centers() {
        let p = params(r(1, 20), r(1, 2));
        let parent = iv(r(0, 1), r(1, 20));
        let full = place_omegas(&parent, &p, &r(4, 1)).unwrap();
        let shrunk = place_omegas(&parent, &p, &r(7, 2)).unwrap();
        assert_eq!(full.len(), shrunk.len());
        for (f, s) in full.iter().zip(&shrunk) {
            assert_eq!(f.center(), s.center());
            assert_eq!(s.length(), r(7, 1600));
            assert!(f.contains(s));
        }
    }

    #[test]
    fn alpha_at_boundary_rejected() {
        let p = params(r(1, 12), r(1, 2));
        let parent = iv(r(0, 1), r(1, 20));
        assert!(matches!(
            place_omegas(&parent, &p, &r(4, 1)),
            Err(ConstructionError::AlphaTooLarge(_))
        ));
        let p = params(r(1, 20), r(1, 2));
        assert!(matches!(
            place_omegas(&parent, &p, &r(3, 1)),
            Err(ConstructionError::InvalidShrink(_))
        ));
    }

    #[test]
    fn threshold_examples() {
        let p = params(r(1, 20), r(1, 2));
        assert_eq!(stage_threshold(&r(1, 1), &r(1, 1), &p), 1);
        assert_eq!(stage_threshold(&r(1, 300), &r(1, 1), &p), 2);
        assert_eq!(stage_threshold(&r(-1, 300), &r(1, 1), &p), 2);
        assert_eq!(stage_threshold(&r(1_000_000, 1), &r(1, 1), &p), 1);
        // 1/200 is not < 1/200
        assert_eq!(stage_threshold(&r(1, 200), &r(1, 1), &p), 2);
    }

    #[test]
    fn synchronize_examples() {
        let p = params(r(1, 20), r(1, 2));
        assert_eq!(synchronize_stages(&r(1, 1), &r(1, 1), &p), (1, 1));
        assert_eq!(synchronize_stages(&r(1, 1), &r(1, 40), &p), (2, 1));
        assert_eq!(synchronize_stages(&r(3, 1), &r(3, 40), &p), (2, 1));
        // rho2 much larger than rho1: the second game has to run ahead.
        assert_eq!(synchronize_stages(&r(1, 1), &r(1600, 1), &p), (1, 3));
    }

    #[test]
    fn tolerance_running_example_is_cap() {
        let p = params(r(1, 20), r(1, 2));
        assert_eq!(thickening_tolerance(&p).unwrap(), r(1, 12));
    }

    #[test]
    fn tolerance_is_maximal_on_dyadic_grid() {
        // small beta: the edge inequality binds
        let p = params(r(1, 100), r(1, 20));
        let d = thickening_tolerance(&p).unwrap();
        assert!(d < r(1, 12));
        assert!(cross_condition(&p, &d) && edge_condition(&p, &d));
        let next = &d + &Rational::new(1, 1i64 << TOLERANCE_BITS);
        assert!(!(cross_condition(&p, &next) && edge_condition(&p, &next)));
    }

    #[test]
    fn tolerance_needs_winning_region() {
        // beta below alpha / (1 - 5 alpha)^2 = 4/45
        let p = params(r(1, 20), r(4, 45));
        assert!(thickening_tolerance(&p).is_err());
    }
}
