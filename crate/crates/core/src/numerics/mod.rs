//! Numerical kernels shared by the algebraic modules.

pub mod convex;
pub mod determinant;
pub mod linalg;
pub mod roots;
pub mod simplex;

pub use convex::{affine_min_norm, MinNorm};
pub use determinant::{ring_determinant, scalar_determinant, CommutativeRing, ComplexField};
pub use linalg::{null_space, numerical_rank, orthonormalize, rank_threshold};
pub use roots::{complex_roots, expand_multiset, RootCluster};
pub use simplex::{feasible_point, representing_measure_exists};
