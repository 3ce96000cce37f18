//! Exact-arithmetic verification engine for overpartition M2-rank and
//! Hurwitz class number identities.
//!
//! Every arithmetic ingredient is computed by at least two independent
//! routes (combinatorial brute force vs. closed form) and each identity is
//! certified as an exact equality over configurable ranges. All
//! coefficients are exact rationals; no floating point enters the core.

pub mod arith;
pub mod classnum;
pub mod localcount;
pub mod overpart;
pub mod qseries;
pub mod verify;
pub mod zsqrt2;
