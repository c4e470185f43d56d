//! Chains of omegas under a shift and the choice of designated Alice
//! intervals that dodge their shifted predecessors.

use super::ConstructionError;
use crate::interval::Interval;
use crate::rational::Rational;

/// Indices of `sorted` (ordered by `lo`, equal lengths, so also by `hi`)
/// overlapping `probe`.
fn overlapping(sorted: &[(usize, &Interval)], probe: &Interval) -> Vec<usize> {
    let start = sorted.partition_point(|(_, w)| w.hi() < probe.lo());
    sorted[start..]
        .iter()
        .take_while(|(_, w)| w.lo() <= probe.hi())
        .map(|(i, _)| *i)
        .collect()
}

/// Splits omega indices into chains under "`shift(omega_i, q)` overlaps
/// `omega_j`". Each chain is listed from its head; a member's shift meets
/// only its successor.
pub fn build_chains(omegas: &[Interval], q: &Rational) -> Result<Vec<Vec<usize>>, ConstructionError> {
    let Some(first) = omegas.first() else {
        return Ok(Vec::new());
    };
    let len = first.length();
    if omegas.iter().any(|w| w.length() != len) {
        return Err(ConstructionError::UnequalLengths);
    }
    if len >= q.abs() {
        return Err(ConstructionError::ThresholdNotMet { omega_length: len, q: q.clone() });
    }
    let mut sorted: Vec<(usize, &Interval)> = omegas.iter().enumerate().collect();
    sorted.sort_by(|a, b| a.1.lo().cmp(b.1.lo()));

    let n = omegas.len();
    let mut succ: Vec<Option<usize>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for (i, w) in omegas.iter().enumerate() {
        let hits: Vec<usize> = overlapping(&sorted, &w.shift(q)).into_iter().filter(|&j| j != i).collect();
        match hits.as_slice() {
            [] => {}
            [j] => {
                if let Some(other) = pred[*j] {
                    return Err(ConstructionError::ChainLemmaViolation {
                        index: *j,
                        detail: format!("reached from both {other} and {i}"),
                    });
                }
                succ[i] = Some(*j);
                pred[*j] = Some(i);
            }
            _ => {
                return Err(ConstructionError::ChainLemmaViolation {
                    index: i,
                    detail: format!("shift meets {} omegas", hits.len()),
                })
            }
        }
    }

    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    for head in (0..n).filter(|&i| pred[i].is_none()) {
        let mut chain = Vec::new();
        let mut cur = Some(head);
        while let Some(i) = cur {
            seen[i] = true;
            chain.push(i);
            cur = succ[i];
        }
        chains.push(chain);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(ConstructionError::ChainLemmaViolation { index: i, detail: "cycle".into() });
    }
    Ok(chains)
}

/// Three candidate slots of length `u` inside `window`: flush left,
/// centered and flush right.
pub fn slots(window: &Interval, u: &Rational) -> [Interval; 3] {
    [
        Interval::with_length(window.lo().clone(), u),
        Interval::centered(&window.center(), u),
        Interval::with_length(window.hi() - u, u),
    ]
}

/// Slot rule over arbitrary windows. Every candidate and every shifted
/// predecessor is grown by `pad` on both sides before the disjointness test,
/// which covers thickenings of relative size `pad / u`.
pub fn choose_in_windows(
    windows: &[Interval],
    chains: &[Vec<usize>],
    q: &Rational,
    u: &Rational,
    pad: &Rational,
) -> Result<Vec<Interval>, ConstructionError> {
    let mut chosen: Vec<Option<Interval>> = vec![None; windows.len()];
    for chain in chains {
        let mut blocker: Option<Interval> = None;
        for &i in chain {
            let pick = slots(&windows[i], u)
                .into_iter()
                .find(|s| blocker.as_ref().map_or(true, |b| s.expand(pad).is_disjoint(b)))
                .ok_or(ConstructionError::NoFreeSlot { index: i })?;
            blocker = Some(pick.shift(q).expand(pad));
            chosen[i] = Some(pick);
        }
    }
    chosen
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or(ConstructionError::NoFreeSlot { index: i }))
        .collect()
}

/// One designated interval of length `alice_len` per omega such that no
/// shifted designated interval meets another designated interval.
pub fn choose_alice_intervals(
    omegas: &[Interval],
    chains: &[Vec<usize>],
    q: &Rational,
    alice_len: &Rational,
) -> Result<Vec<Interval>, ConstructionError> {
    if let Some(w) = omegas.first() {
        if alice_len * Rational::from_integer(4) > w.length() {
            return Err(ConstructionError::InvalidParams(format!(
                "alice length {alice_len} exceeds a quarter of omega length {}",
                w.length()
            )));
        }
    }
    choose_in_windows(omegas, chains, q, alice_len, &Rational::zero())
}

/// Leftmost interval of length `len` inside `window` strictly disjoint from
/// every blocker. A free gap touching the window's left end is used flush
/// left, an interior gap centered and the gap touching the right end flush
/// right.
pub fn place_avoiding(window: &Interval, len: &Rational, blockers: &[Interval]) -> Option<Interval> {
    let mut relevant: Vec<&Interval> = blockers.iter().filter(|b| b.overlaps(window)).collect();
    relevant.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut merged: Vec<Interval> = Vec::new();
    for b in relevant {
        match merged.last_mut() {
            Some(last) if b.lo() <= last.hi() => {
                if b.hi() > last.hi() {
                    *last = Interval::new(last.lo().clone(), b.hi().clone()).expect("ordered");
                }
            }
            _ => merged.push(b.clone()),
        }
    }

    let mut cursor = window.lo().clone();
    let mut closed = true;
    for b in &merged {
        if b.lo() >= &cursor {
            let room = b.lo() - &cursor;
            if closed && &room > len {
                return Some(Interval::with_length(cursor, len));
            }
            if !closed && &room > len {
                return Some(Interval::centered(&Rational::midpoint(&cursor, b.lo()), len));
            }
        }
        if b.hi() >= &cursor {
            cursor = b.hi().clone();
            closed = false;
        }
        if &cursor >= window.hi() {
            return None;
        }
    }
    let room = window.hi() - &cursor;
    if closed && &room >= len {
        Some(Interval::with_length(cursor, len))
    } else if !closed && &room > len {
        Some(Interval::with_length(window.hi() - len, len))
    } else {
        None
    }
}
