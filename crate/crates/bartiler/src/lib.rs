//! Exact weighted enumeration of tilings of a `2k × n` rectangle by straight
//! `k × 1` bars: polynomial and series arithmetic over `Z[a,b]`, the transfer
//! determinants and their closed forms, brute-force tiling oracles, and the
//! symmetric-function cross-checks.

pub mod comb;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod poly;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
