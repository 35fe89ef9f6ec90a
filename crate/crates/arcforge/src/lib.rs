//! Maximal arcs in translation planes, built from ovoid tangent-line spreads.
//!
//! The crate walks a chain of finite-geometry constructions over GF(2^m):
//!
//! 1. [`gf`] — arithmetic in GF(q) and GF(q^2), q = 2^m;
//! 2. [`projgeom`] — points and lines of PG(n, q) with deterministic
//!    enumeration;
//! 3. [`ovoids`] — Suzuki-Tits ovoids and elliptic quadrics in PG(3, q),
//!    with their tangent-line complexes;
//! 4. [`spreads`] — reguli, regular closures, regular spreads of tangent
//!    lines, carrier lines over GF(q^2), and the collineation that moves a
//!    spread to a fixed canonical frame;
//! 5. [`plane`] — the projection of PG(4, q) onto PG(2, q^2) that turns a
//!    cone over an ovoid into a maximal arc, plus arc verification;
//! 6. [`curves`] — minimum-degree plane curves through the arc and the
//!    extraction of their linear components;
//! 7. [`pipeline`] — the end-to-end run, spread caching, JSON artifacts, and
//!    reporting.
//!
//! Each stage is runnable on its own: see the `examples/` directory
//! (`cargo run --release --example full_pipeline`), or the `arcforge`
//! binary for a subcommand front end.

pub mod curves;
pub mod gf;
pub mod ovoids;
pub mod pipeline;
pub mod plane;
pub mod projgeom;
pub mod spreads;

use thiserror::Error as ThisError;

/// Errors for contract violations. Searches that merely fail to find
/// something return `Option`/empty collections instead.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("field degree m={m} outside supported range 1..=16")]
    FieldRange { m: u32 },

    #[error("coincident points do not span a line")]
    DegenerateLine,

    #[error("lines are not pairwise skew")]
    NotSkew,

    #[error("fourth line lies in the regulus of the first three")]
    FourthLineInRegulus,

    #[error("line set does not partition the point set")]
    NotPartition,

    #[error("no regular spread of tangent lines found")]
    SpreadNotFound,

    #[error("a generated regulus conflicts with the set: line {line} meets line {existing}")]
    ClosureConflict { line: u32, existing: u32 },

    #[error("spread line {line} meets the ovoid in {count} points, expected 1")]
    TangencyViolated { line: u32, count: u64 },

    #[error("point is not affine (leading coordinate zero)")]
    NonAffinePoint,

    #[error("matrix has full column rank; nullspace is trivial")]
    FullRank,

    #[error("coefficient count {got} does not match monomial count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
