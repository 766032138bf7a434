//! Exact-arithmetic models of Cuntz semigroups and their tensor products.
//!
//! The crate computes, for algebras described by K-theoretic descriptors
//! (a finitely generated ordered `K0` group with a positive cone, a trivial
//! or torsion `K1`, a finite-dimensional trace simplex, and a rank pairing),
//! the semigroup `Cu(A) = V(A) ⊔ Lsc(T(A), (0, ∞])` together with the
//! natural map from the algebraic tensor product `Cu(A) ⊗ Cu(B)` into
//! `Cu(A ⊗ B)`.
//!
//! Module map:
//!
//! * [`monoid`] — finitely presented commutative monoids, positive cones,
//!   their tensor products, greatest cancellative images and enveloping
//!   groups.
//! * [`ktheory`] — Smith normal form over the integers, finitely generated
//!   abelian groups, tensor/Tor calculus and the Künneth assembly.
//! * [`simplex`] — trace simplices and their products, affine and staged
//!   lower-semicontinuous functions, bi-affine approximation from below.
//! * [`cu`] — the Cuntz semigroup data model: classes, addition, order,
//!   dimension functions and the pseudometric.
//! * [`tensor`] — algebraic tensor elements, the natural map, density
//!   certificates, injectivity witnesses and the component analysis.
//!
//! All arithmetic is exact: integers are arbitrary precision where they can
//! grow, and every function value is a rational number. No floating point
//! participates in any comparison.

pub mod cu;
pub mod ktheory;
pub mod monoid;
pub mod rat;
pub mod simplex;
pub mod tensor;

mod error;

pub use error::{Error, Result};
pub use rat::Rat;
