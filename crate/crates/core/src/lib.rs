//! Minimal polynomials of powers of a root of an irreducible polynomial
//! over a finite field, computed from the polynomial alone.
//!
//! Given monic irreducible `f = m_β` over `F_q`, the constructions here
//! produce `m_{β^k}` using only arithmetic in `F_q[X]`: twisted products
//! `∏ f(ζ^j X)` for `k | q - 1`, Frobenius descent for `k = p^v`, and
//! extraction of `g` from `g(X^k)`. Iterating a single prime step exposes a
//! tail and an orbit whose lengths constrain the order of `f`, and the
//! family module enumerates everything reachable this way.
//!
//! Fields are context objects implementing [`Field`]; elements are plain
//! values. [`FieldSpec`] is the concrete `F_{p^m}` and
//! [`oracle::ExtensionCtx`] is `F_q[X]/(f)`, which the independent
//! reference implementation in [`oracle`] works in.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arith;
pub mod constructions;
pub mod error;
pub mod family;
pub mod field;
pub mod gf;
pub mod oracle;
pub mod orbit;
pub mod poly;
pub mod syntax;

pub use constructions::{ConstructionResult, Constructor, Step, StepKind};
pub use error::{Error, Result};
pub use family::{enumerate_family, k_normality, FamilyReport};
pub use field::Field;
pub use gf::{FieldElement, FieldSpec};
pub use orbit::{infer_order, iterate_prime, IterationTrace};
pub use poly::{Poly, PolyRing};
