//! Exact computations on linear Alexander quandles `Al(Z/n, T)`.
//!
//! The crate covers four layers:
//!
//! * [`linalg`]: integer matrices, Smith and Hermite normal forms, and the
//!   canonical form of finitely generated abelian groups.
//! * [`quandle`]: finite quandles as operation tables, the classical
//!   constructors (Alexander, conjugation, core) and orbit computations.
//! * [`structure`]: words in the structure group `As(X)`, the degree and
//!   weight maps, the faithful packing into `Z^m ⋉ Z/n`, canonical words and
//!   an explicit rewriting procedure.
//! * [`cocycle`] and [`homology`]: the 2-cocycle of the extension
//!   `K(X) -> As(X) -> Z ⋉ Z/n` and the second quandle homology group,
//!   computed three independent ways.
//!
//! Everything is integer arithmetic. The crate is `no_std` and only needs
//! `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cocycle;
mod error;
pub mod homology;
pub mod linalg;
pub mod quandle;
pub mod structure;

pub use error::Error;
pub use linalg::{AbelianInvariants, IntMatrix};
pub use quandle::{FiniteQuandle, GroupTable, LinearAlexanderParams};
pub use structure::{Letter, PackedElement, SemidirectZ, Word};

pub type Result<T, E = Error> = core::result::Result<T, E>;
