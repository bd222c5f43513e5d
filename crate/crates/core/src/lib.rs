//! Exact-arithmetic combinatorics of the alcove-path model for the
//! equivariant K-theory of flag varieties.
//!
//! The crate provides, over any of the root-system families A, B, C, D, G2
//! (or a custom Cartan matrix):
//!
//! - the exact root-system and Weyl-group kernel ([`root_system`], [`weyl`]);
//! - affine reflections, alcove walks and reduced λ-chains ([`alcove`]);
//! - sparse integer Laurent polynomials over the (h-scaled) weight lattice
//!   ([`poly`]) and the operator algebra acting on the structure-sheaf basis
//!   of K_T(G/B) ([`operators`]);
//! - the Chevalley coefficient engine via saturated Bruhat chains, the Monk
//!   formula, dual coefficients and G/P restriction ([`chevalley`]);
//! - Demazure and irreducible characters with independent oracles
//!   ([`characters`]);
//! - a quantum-K Monk experiment harness ([`quantum`]);
//! - JSON/SVG serialization ([`json`], [`svg`]) and the verification and
//!   benchmark suites backing the `alcove` CLI ([`verify`], [`mod@bench`]).

pub mod alcove;
pub mod bench;
pub mod characters;
pub mod chevalley;
pub mod error;
pub mod json;
pub mod operators;
pub mod poly;
pub mod quantum;
pub mod root_system;
pub mod svg;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{Family, Root, RootSystem, SignedRoot, Weight};
pub use weyl::{WeylElement, WeylGroup};
