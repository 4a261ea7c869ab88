//! Crate-wide error type.

/// Errors reported by field construction, polynomial algebra, and the
/// code-level checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Extension degree outside the supported range (`1..=40` for fields;
    /// the exponent families additionally require `m >= 2`).
    #[error("extension degree m={0} is outside the supported range")]
    DegreeOutOfRange(u32),

    /// A user-supplied modulus that is not monic of the requested degree.
    #[error("modulus must be monic of degree {expected}, got {found}")]
    BadModulus { expected: u32, found: String },

    /// A user-supplied modulus that is monic of the right degree but factors.
    #[error("modulus {0} is reducible over GF(3)")]
    ReducibleModulus(String),

    /// Multiplicative inverse of the zero element.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    /// `pow(0, k)` with `k < 0`.
    #[error("negative power of the zero element")]
    NegativePowerOfZero,

    /// The zero element is outside the multiplicative group, so operations
    /// defined on `F_q^*` (quadratic character, n-th roots) reject it.
    #[error("the zero element is not in the multiplicative group")]
    ZeroNotInUnitGroup,

    /// `nth_root_coprime` requires the exponent to be a unit mod `q - 1`.
    #[error("n-th root map is a bijection only for gcd(n, q-1) = 1; got gcd = {0}")]
    RootExponentNotCoprime(u64),

    /// Polynomial division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    /// Factorization (or root counting) of the zero polynomial.
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,

    /// Irreducibility is only defined for polynomials of degree >= 1.
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,

    /// Text that does not match the polynomial grammar.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Exhaustive solvers require discrete-log tables (q <= 3^13).
    #[error("exhaustive search requires m <= 13, got m={0}")]
    ExhaustiveCutoff(u32),

    /// Exponent outside `0..=3^m - 2`.
    #[error("exponent e={e} outside [0, {max}]")]
    ExponentOutOfRange { e: u64, max: u64 },

    /// Generator exponent conjugate to 1: the generator product would collapse.
    #[error("e={0} is conjugate to 1 (lies in C_1); the code degenerates")]
    ExponentInCosetOfOne(u64),

    /// Dimension larger than length in a bound computation.
    #[error("dimension k={k} exceeds length n={n}")]
    DimensionExceedsLength { n: u64, k: u64 },

    /// Family C needs 11 to be a unit mod 3^m - 1, which fails iff 5 | m.
    #[error("11 divides 3^{0} - 1 (m divisible by 5), so 11 has no inverse")]
    NoInverseOfEleven(u32),

    /// Unknown verification case identifier.
    #[error("unknown case id {0:?}")]
    UnknownCase(String),

    /// A symbolic reconstruction did not match its expected expansion.
    #[error("reconstruction mismatch in {context}: computed {computed}, expected {expected}")]
    Mismatch {
        context: String,
        computed: String,
        expected: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
