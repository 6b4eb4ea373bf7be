//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by factorization, membership, and chart operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix entry is NaN or infinite.
    #[error("matrix entries are not finite")]
    NotFinite,

    /// The matrix is singular or numerically rank-deficient.
    #[error("matrix is singular or numerically rank-deficient")]
    Singular,

    /// The estimated condition number exceeds the guard threshold; results
    /// would be dominated by rounding error.
    #[error("estimated condition number {0:.3e} exceeds the conditioning guard")]
    IllConditioned(f64),

    /// The determinant differs from 1 by more than the configured tolerance.
    #[error("determinant defect |det - 1| = {0:.3e} exceeds tolerance")]
    NotSpecial(f64),

    /// A matrix required to be unitary is not, within tolerance.
    #[error("matrix is not unitary within tolerance (defect {0:.3e})")]
    NotUnitary(f64),

    /// A tuple slot fails its subgroup membership test.
    #[error("slot {slot} is not in {subgroup} within tolerance")]
    Membership { slot: usize, subgroup: String },

    /// A word that must be reduced is not.
    #[error("word is not reduced")]
    NonReducedWord,

    /// A word letter lies outside the simple-root range 1..n-1.
    #[error("letter {letter} out of range for rank n = {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    /// Bruhat factorization failed: the input lies outside the big cell of
    /// the minimal parabolic along the given simple root.
    #[error("matrix lies outside the big cell of P_s({index})")]
    OutsideBigCell { index: usize },

    /// A chart point is outside the generic locus; the offending slot of the
    /// slot-by-slot sweep is reported.
    #[error("point is outside the generic locus at slot {slot}")]
    NonGenericSlot { slot: usize },

    /// Two tuples that must share a word do not.
    #[error("tuples are built on different words")]
    WordMismatch,

    /// Tuple flavor is incompatible with the requested operation.
    #[error("tuple flavor {found} where {expected} was required")]
    FlavorMismatch {
        expected: &'static str,
        found: &'static str,
    },

    /// An operation restricted to a specific word/rank was called with
    /// something else.
    #[error("unsupported word shape: {0}")]
    WordShape(String),

    /// Malformed structured input (JSON schema violations and the like).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
