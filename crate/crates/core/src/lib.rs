//! Colouring bijections of finite groups.
//!
//! A bijection `σ` of a group `G` is a colouring bijection when the three maps
//! `x ↦ σ(x)x`, `x ↦ x⁻¹σ(x)` and `x ↦ x⁻¹σ(x)x` are bijections. Such a `σ`
//! properly colours the Cayley graph on `G³` with `|G|` colours. This crate
//! builds small groups as explicit tables, checks and searches for these maps,
//! and lifts them from quotients to larger 3-groups.

pub mod error;
pub mod graph;
pub mod group;
pub mod lifting;
pub mod matrix;
pub mod perm;
pub mod perm_file;
pub mod search;
pub mod tables;

pub use error::{Error, Result};
pub use group::{build_from_spec, Elem, FiniteGroup, Label, SubgroupData};
pub use perm::Perm;
