//! Exact modular representation theory of the symmetric groups on tensor
//! word space.
//!
//! The crate builds Specht modules `S^λ` inside the word space `F_n^r`
//! (equivalently `E^{⊗r}` for `E = K^n`), computes their Gram radicals and
//! irreducible quotient dimensions over a prime field, and implements the
//! induction/restriction operators `U↑`, `V↓` together with several exact
//! verification routines built on top of them.
//!
//! Module map:
//!
//! - [`partitions`]: partition combinatorics and tableau counting.
//! - [`exactla`]: exact linear algebra over `GF(p)`.
//! - [`perm`]: permutations of `{1, …, r}`.
//! - [`wordspace`]: the word basis, the place-permutation action, Specht modules and radicals.
//! - [`updown`]: the `↑` / `↓` operators and their identities.
//! - [`schurweyl`]: the map `KG(r) → End(E^{⊗r})` and its kernel.
//! - [`condition1`]: threshold certificates from alcove and p-adic arguments.

pub mod condition1;
pub mod error;
pub mod exactla;
pub mod partitions;
pub mod perm;
pub mod schurweyl;
pub mod updown;
pub mod wordspace;

pub use error::{Error, Result};
pub use exactla::{FieldScalar, FieldVector, LinearMap, Matrix, PrimeField, Subspace};
pub use partitions::{PAdicExpansion, Partition};
pub use perm::Permutation;
pub use wordspace::{GModule, Guard, ModuleKind, Tableau, Word, WordSpace};
