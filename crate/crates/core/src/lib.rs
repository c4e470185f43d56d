//! Exact-arithmetic engine for Schmidt's (alpha, beta)-game on the real line.
//!
//! * [`rational`] and [`interval`]: canonical exact rationals and closed intervals.
//! * [`game`]: legality, strategies, the game runner and JSON-lines traces.
//! * [`region`]: the parameter-region classifier.
//! * [`vitali`]: the staged target tree of a partial Vitali set and Alice's
//!   strategy that keeps every run inside it.
//! * [`adversary`]: Bob's foiling pairing (beta < alpha) and his Cantor
//!   avoidance strategy (beta < 1/3).
//! * [`verify`]: brute-force finite checks producing serializable certificates.

pub mod adversary;
pub mod game;
pub mod interval;
pub mod rational;
pub mod region;
pub mod verify;
pub mod vitali;

pub use game::{GameHistory, GameParams, Role, Strategy, Violation};
pub use interval::{Interval, Relation};
pub use rational::Rational;
pub use region::RegionLabel;
