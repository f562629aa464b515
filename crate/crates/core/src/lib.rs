//! Exact symbolic workbench for the affine-Virasoro algebra of type A1.
//!
//! Everything is computed over the exact rational-function field
//! Q(L, A, B, G) (the parameters λ, α, β, γ), or over plain rationals when
//! the parameters are instantiated. The crate provides:
//!
//! - [`scalars`]: canonical fraction-field arithmetic, univariate gcd and
//!   Bézout witnesses;
//! - [`liealg`]: the algebra basis {e_i, f_i, h_i, d_i, C}, its bracket
//!   table, and enveloping-algebra words;
//! - [`polymod`]: the three families Omega/Delta/Theta of rank-one
//!   Cartan-free module structures on C[s,t], with module-axiom checkers;
//! - [`structure`]: simplicity decisions, proper submodules, the
//!   intertwiner check, constructive generation witnesses, and the
//!   isomorphism classifier;
//! - [`classify`]: operator-identity checks and the classifier that decides
//!   which family a candidate free-module datum generates;
//! - [`parse`]: the shared text grammar for scalars, polynomials, algebra
//!   elements, and candidates.
//!
//! All values are immutable after construction and safe to share across
//! threads.

pub mod classify;
pub mod liealg;
pub mod parse;
pub mod polymod;
pub mod report;
pub mod scalars;
pub mod structure;

pub use scalars::{Param, ParamPoly, Rat, Scalar, ScalarError, UniPoly, UniPolyError};
