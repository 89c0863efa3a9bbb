//! Finite-dimensional models of algebraic extensions of commutative unital
//! normed algebras.
//!
//! Three algebra backends are provided: pointwise function algebras on a
//! finite set, degree-bounded polynomial models of the disc algebra sampled
//! on a grid, and Arens-Hoffman extensions `A[x]/(α)` stacked on top of
//! either. On these models the library computes norms, character spaces,
//! radicals, discriminants and tractability verdicts, builds Cole's
//! uniform-algebra extensions on fiber spaces, computes Šilov boundaries by
//! representing-measure feasibility, and compares the two constructions.
//!
//! Tractability and semisimplicity coincide on every finite-dimensional
//! model (all maximal ideals are closed), so the crate reports one verdict
//! for both.

pub mod algebra;
pub mod cole;
pub mod error;
pub mod extension;
pub mod gelfand;
pub mod numerics;
pub mod poly;
pub mod scenario;
pub mod tolerance;

pub use algebra::{Algebra, Backend, Element, Homomorphism, PointSet};
pub use error::{Error, Result};
pub use extension::NormParameter;
pub use gelfand::Character;
pub use num_complex::Complex64 as C64;
pub use poly::{MonicPoly, RingPoly};
pub use tolerance::ToleranceProfile;
