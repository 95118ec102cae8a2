//! Two-generator quasi-cyclic codes over F2 and the binary quantum codes they
//! induce under the symplectic inner product.
//!
//! A code here is spanned by the cyclic shift orbits of two seed pairs
//! `(v(x)·g1(x), g1(x))` and `(g2(x), v(x)·g2(x))` in `F2[x]/(x^n - 1)`, for
//! divisors `g1`, `g2` of `x^n - 1` with `gcd(g1, g2) = 1` and
//! `gcd(v - 1, x^n - 1) = 1`. When additionally `g2 | g1^⊥` and `v` is
//! palindromic, the code contains its symplectic dual and therefore yields a
//! binary quantum stabilizer code `[[n, k - n, d]]`, where `k` is the
//! classical dimension and `d` the minimum symplectic weight.
//!
//! Module map:
//! - [`algebra`]: exact `F2[x]` / `GF(2^m)` arithmetic and the run-length
//!   polynomial notation used by fixtures and the CLI
//! - [`cyclotomic`]: 2-cyclotomic cosets, defining sets, minimal polynomials
//! - [`f2linalg`]: packed bit matrices, row reduction, row-space membership
//! - [`qc2code`]: the two-generator construction, symplectic dual generators,
//!   and both dual-containment decision routes
//! - [`distance`]: symplectic weight, exact and randomized minimum-distance
//!   search, partial weight distributions
//! - [`qecc`]: quantum parameters, propagation rules, best-known comparison
//! - [`search`]: the candidate-enumeration harness emitting JSONL records
//! - [`reproduce`]: fixture loading and the end-to-end reproduction report
//! - [`naive`]: slow reference implementations used as independent oracles by
//!   the test suites

pub mod algebra;
pub mod cyclotomic;
pub mod distance;
pub mod f2linalg;
pub mod naive;
pub mod qc2code;
pub mod qecc;
pub mod reproduce;
pub mod search;

pub use algebra::{reciprocal_dual, BinaryPolynomial, FieldContext};
pub use cyclotomic::{
    all_cosets, coset_of, generator_from_set, minimal_polynomial, negate_set, remark_precheck,
    Coset, DefiningSet,
};
pub use distance::{
    info_set_search, min_distance_exact, symplectic_weight, weight_distribution, DistanceMethod,
    DistanceReport, PartialWeightDistribution, WeightDistributionMode,
};
pub use f2linalg::{circulant_rows, BitMatrix, BitVector, Rref};
pub use qc2code::{
    exchange_identity_check, symplectic_inner, DualGenerators, TwoGenQC, Violation,
};
pub use qecc::{
    compare_best_known, derivation_closure, propagate_lengthen, propagate_shrink,
    symplectic_to_qecc, BestKnownTable, CodeRecord, Comparison, DerivationStep, DerivedCode,
    DistanceStatus, Provenance, QeccParams,
};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ambient cyclic lengths differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("degree {degree} does not fit ambient cyclic length {ambient}")]
    AmbientTooSmall { degree: usize, ambient: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("invalid compact notation: {0}")]
    Parse(String),
    #[error("ambiguous compact notation: {0}")]
    Ambiguous(String),
    #[error("cyclic length must be odd, got {0}")]
    EvenLength(usize),
    #[error("cyclic length must be positive")]
    ZeroLength,
    #[error("index {index} out of range for modulus {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("extension degree {m} for n = {n} exceeds the supported limit of 32")]
    FieldTooLarge { n: usize, m: u32 },
    #[error("polynomial does not divide x^{n} - 1")]
    NotADivisor { n: usize },
    #[error("set is not closed under doubling mod {n}: {index} maps outside")]
    NotCosetClosed { n: usize, index: usize },
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("row count {count} out of range 1..={n}")]
    RowCountOutOfRange { count: usize, n: usize },
    #[error("code violates construction conditions: {0:?}")]
    InvalidCode(Vec<qc2code::Violation>),
    #[error("dimension {dimension} exceeds the exhaustive-enumeration limit {limit}")]
    DimensionLimit { dimension: usize, limit: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("code is not symplectic dual-containing")]
    NotDualContaining,
    #[error("quantum parameters out of range: {0}")]
    InvalidQuantumParams(String),
    #[error("propagation rule requires k > 0")]
    ZeroLogicalDimension,
    #[error("propagation rules apply to pure codes only")]
    NotPure,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
