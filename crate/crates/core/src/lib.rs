//! Exact combinatorics and supercommutative algebra for even-primitive
//! vectors in induced supermodules of the general linear supergroup GL(m|n).
//!
//! The crate is organised in layers:
//!
//! * [`shapes`] and [`tableaux`]: partitions, skew diagrams, tableaux,
//!   reading words and Clausen matrices.
//! * [`lr`]: semistandard and Littlewood-Richardson enumeration, the
//!   repositioning map, the Opp map, marked tableaux and pictures.
//! * [`superring`]: sparse polynomials in even and odd generators `c_{ij}`,
//!   localization at `D = det(C₁₁)`, superderivations and determinants.
//! * [`primitive`]: multiindices, the ρ vectors, the τ and σ operators,
//!   construction and verification of the primitive vectors `v̄(T⁺)`.
//! * [`characters`]: Schur, skew Schur and hook Schur polynomials.

pub mod budget;
pub mod characters;
pub mod lr;
pub mod par;
pub mod primitive;
pub mod shapes;
pub mod superring;
pub mod sweep;
pub mod tableaux;

pub use shapes::{
    conjugate, contains, hook_split, Cell, HookSplit, Partition, ShapeError, SkewShape,
};
pub use tableaux::{SkewTableau, TableauError, Word};
