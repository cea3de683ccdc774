//! Computational algebra for finite gyrogroups.
//!
//! A gyrogroup is a loop whose failure of associativity is controlled by a
//! family of automorphisms, the gyrations. This crate works with explicit
//! Cayley tables over elements `0..n` with the identity fixed at 0, and
//! provides:
//!
//! * parsing, validation, and serialization of tables ([`table`]);
//! * axiom checking and element arithmetic ([`gyrogroup`]);
//! * standard group constructions for cross-checking ([`groups`]);
//! * subgyrogroup lattices and cosets ([`subgyro`]);
//! * homomorphisms, quotients, and isomorphism testing ([`morphism`]);
//! * structural property checks and whole-object analysis ([`properties`]);
//! * exhaustive enumeration of small gyrogroups up to isomorphism
//!   ([`search`]);
//! * a numerically verified model on the complex unit disk ([`moebius`]).
//!
//! Everything on the finite side is exact integer arithmetic; claims are
//! established by exhaustive checks, never by formula trust.

pub mod groups;
pub mod gyrogroup;
pub mod moebius;
pub mod morphism;
pub mod properties;
pub mod search;
pub mod subgyro;
pub mod table;

pub use gyrogroup::{Axiom, AxiomViolation, Gyrogroup};
pub use table::{validate_loop, CayleyTable, LoopCheckResult, LoopViolation, ParseError};
