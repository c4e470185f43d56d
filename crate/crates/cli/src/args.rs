//! Parsers for command-line values.

use std::str::FromStr;

use schmidt_core::game::Placement;
use schmidt_core::{Interval, Rational};

/// `"lo,hi"` with exact rational endpoints.
pub fn parse_interval(s: &str) -> Result<Interval, String> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let lo = Rational::from_str(lo).map_err(|e| e.to_string())?;
    let hi = Rational::from_str(hi).map_err(|e| e.to_string())?;
    Interval::new(lo, hi).map_err(|e| e.to_string())
}

/// `leftmost`, `rightmost`, `centered`, `alternating` or `random:<seed>`.
pub fn parse_placement(s: &str) -> Result<Placement, String> {
    match s {
        "leftmost" => Ok(Placement::Leftmost),
        "rightmost" => Ok(Placement::Rightmost),
        "centered" => Ok(Placement::Centered),
        "alternating" => Ok(Placement::Alternating),
        _ => s
            .strip_prefix("random:")
            .and_then(|n| n.parse().ok())
            .map(Placement::Random)
            .ok_or_else(|| format!("unknown placement {s:?}")),
    }
}
