//! Exact invariants of closed 3-braids.
//!
//! Words are written in the band generators `σ1, σ2, σ3` of `B3`
//! (`σ3 = σ1⁻¹σ2σ1`, indices read mod 3). The crate provides
//!
//! * minimal-length band normal forms and the Euler characteristic / genus
//!   of the closure ([`xu`]),
//! * the skein polynomial `P(v, z)` in the convention
//!   `v⁻¹P(L₊) − vP(L₋) = zP(L₀)`, computed by a linear-time fold in the
//!   rank-3 Hecke algebra ([`hecke`]),
//! * the degree identities, coefficient classes and obstructions built on
//!   top of those ([`invariants`]),
//! * exhaustive generation of minimal words and a realizability decision
//!   for polynomials ([`enumeration`]), with named reference tables
//!   ([`knot_table`]).

pub mod braid;
pub mod enumeration;
pub mod error;
pub mod hecke;
pub mod invariants;
pub mod knot_table;
pub mod poly;
pub mod xu;

pub use braid::{BraidWord, BurauMatrix, Letter};
pub use enumeration::{CensusClass, CensusEntry, Outcome, RealizabilityVerdict, Reason};
pub use error::{Error, Result};
pub use hecke::{homfly, pretzel_homfly, torus_homfly, HeckeVector};
pub use invariants::{report, CoeffClass, InvariantReport};
pub use knot_table::KnotTable;
pub use poly::{LaurentPoly1, LaurentPoly2, Var};
pub use xu::{reduce, NormalFormKind, Quasipositivity, XuNormalForm};
