//! Structural decisions for substitutions (free-monoid morphisms) and
//! empirical analysis of the factor languages of their fixed points.
//!
//! The crate is organised bottom-up:
//!
//! - [`word`]: finite words, reversal, rotations, primitive roots and the
//!   overlap equation `xw = wy`;
//! - [`morphism`]: the [`Morphism`] type, incidence matrices, primitivity,
//!   injectivity and fixed-point prefixes;
//! - [`conjugacy`]: one-letter shifts, leftmost/rightmost conjugates,
//!   markedness and well-marked powers;
//! - [`classp`]: class P membership, the equivalent conditions for having a
//!   class P conjugate, and the palindromicity verdict for primitive marked
//!   morphisms;
//! - [`factors`]: certified factor sets, special factors, palindromic trees,
//!   return words and the bispecial generator `u ↦ φ_R(u)·w`;
//! - [`notation`]: the `a->ab;b->a` text format.

pub mod classp;
pub mod conjugacy;
mod error;
pub mod factors;
pub mod morphism;
pub mod notation;
pub mod word;

pub use error::{Error, Result};
pub use morphism::Morphism;
pub use word::{Alphabet, Letter, Word};
