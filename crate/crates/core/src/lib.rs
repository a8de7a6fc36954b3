//! Exact algebra for commuting schemes of the classical Lie algebras.
//!
//! Everything here is degree-truncated linear algebra over an exact field
//! (`F_p`, `F_{p^2}` or `Q`): graded slices of polynomial rings and ideals,
//! Koszul-complex Betti numbers, invariants of the classical groups and of
//! their Weyl groups, restriction to the Cartan subalgebra, and Weyl
//! characters. The crate is `no_std` and only needs an allocator; IO, caching
//! and the command line live in the `commscheme` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod characters;
pub mod chevalley;
pub mod combinat;
pub mod error;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod scheme;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldPolicy, PrimeField, QuadraticField, Rationals};
pub use linalg::LinSpace;
pub use poly::{Monomial, Poly};
pub use scheme::{GroupKind, GroupSpec};
