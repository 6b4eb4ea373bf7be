//! Numerical flag-manifold computations for G = SL(n, ℂ).
//!
//! This crate implements, in double-precision arithmetic:
//!
//! * the Iwasawa factorization g = k·a·n (unitary × positive diagonal ×
//!   unit upper triangular) with the induced maps k: G → K and d: G → D
//!   ([`iwasawa`]);
//! * type-A Weyl words and permutations, the rank-one embeddings
//!   Ψ_i: SL(2,ℂ) → SL(n,ℂ), and the representatives ṡ_i and ẇ ([`weyl`]);
//! * the tuple calculus of the Demazure space P_𝐰/B^ℓ and the Bott-Samelson
//!   space K_𝐰/T^ℓ: twisted right actions, the recursive maps β and φ, the
//!   multiplication maps ρ and ρ^K, and coset-equality decision procedures
//!   ([`resolution`]);
//! * coordinate charts on Schubert cells and the bidirectional change of
//!   variables between holomorphic coordinates ζ and Lu coordinates z,
//!   with closed-form specializations for length-2 words and SL(3)
//!   ([`coords`]);
//! * deterministic seeded sampling ([`sampling`]) and verification suites
//!   ([`verify`]) exercising all of the identities above.
//!
//! Everything operates on small dense complex matrices; quotient spaces are
//! never materialized. Cosets are handled through representatives plus
//! tolerance-based decision procedures, configured by [`Tolerances`].

pub mod coords;
pub mod error;
pub mod iwasawa;
pub mod matrix;
pub mod resolution;
pub mod sampling;
pub mod verify;
pub mod weyl;

pub use coords::ChartPoint;
pub use error::{Error, Result};
pub use iwasawa::{d_map, iwasawa_factor, k_map, IwasawaFactors};
pub use matrix::{coset_equal_gb, coset_equal_kt, SquareMatrix, Subgroup, Tolerances};
pub use resolution::{ActionKind, ActionTuple, Flavor, GroupTuple};
pub use sampling::Sampler;
pub use verify::{Suite, SuiteReport, VerifyConfig};
pub use weyl::{Permutation, Word};
