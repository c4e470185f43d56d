//! Command-line front end and HTTP session service for the game engine.

pub mod args;
pub mod server;
pub mod session;
