use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field arithmetic
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("factorization does not multiply back to the group order")]
    BadFactorization,
    #[error("value {value:#x} is not a canonical element of the field")]
    ValueOutOfRange { value: BigUint },
    #[error("modulus {0:#x} is not prime")]
    NotPrime(BigUint),
    #[error("reduction polynomial {0:#x} is not irreducible of the requested degree")]
    Reducible(BigUint),
    #[error("binary field degree must be at least 1")]
    BadDegree,

    // encoding
    #[error("bitsize of an empty set")]
    EmptySet,
    #[error("bitstring of length {0} cannot be split into two non-empty halves")]
    EmptyString(u64),
    #[error("cannot pad a {len}-bit string to {target} bits")]
    TargetTooSmall { len: u64, target: u64 },
    #[error("value needs {needed} bits but the string has {len}")]
    ValueTooWide { needed: u64, len: u64 },
    #[error("invalid hex encoding: {0}")]
    BadHex(String),

    // number theory
    #[error("{0:#x} is not a safe prime")]
    NotSafePrime(BigUint),
    #[error("requested {requested} primitive roots but only {available} are available")]
    CountExceedsAvailable { requested: usize, available: BigUint },
    #[error("{0} is not a Mersenne exponent: 2^{0} - 1 is not prime")]
    NotMersenneExponent(u64),
    #[error("search budget of {0} candidates exhausted")]
    SearchBudgetExhausted(u64),
    #[error("cannot factor group order {0:#x} by trial division")]
    UnfactorableGroupOrder(BigUint),

    // polynomials
    #[error("duplicate abscissa {0:#x}")]
    DuplicateAbscissa(BigUint),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("field of {0} elements is too large for an exhaustive scan")]
    FieldTooLarge(BigUint),
    #[error("degree {degree} is not below the field size")]
    DegreeTooLarge { degree: usize },
    #[error("interpolation needs at least one point")]
    NoPoints,

    // threshold scheme
    #[error("invalid threshold: t={t}, n={n}")]
    BadThreshold { t: usize, n: usize },
    #[error("field is too small for {n} shareholders")]
    FieldTooSmall { n: usize },
    #[error("need {needed} shares, got {got}")]
    NotEnoughShares { needed: usize, got: usize },
    #[error("duplicate share index {0}")]
    DuplicateIndex(usize),
    #[error("share index {0} out of range")]
    IndexOutOfRange(usize),

    // verification schemes
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("duplicate share value {0:#x}")]
    DuplicateShareValue(BigUint),
    #[error("share {0:#x} does not fit the verification domain")]
    ShareOutOfField(BigUint),
    #[error("two shares have the same most-significant half {0:#x}; regenerate the shares")]
    MidHalfCollision(BigUint),
    #[error("{0:#x} is not a primitive element")]
    NotPrimitive(BigUint),
    #[error("verifier {0} cannot verify its own share")]
    SelfVerification(usize),
    #[error("bundle is for scheme {found}, expected {expected}")]
    SchemeMismatch { expected: String, found: String },

    // set coherence
    #[error("coalition of {m} shares cannot be checked against threshold {t}; need m > t")]
    CoalitionTooSmall { m: usize, t: usize },
    #[error("no strict majority secret in the reconstruction histogram")]
    NoMajority,
    #[error("{0} subsets exceed the enumeration limit")]
    TooManySubsets(u128),

    // analysis
    #[error("gcd of the colluders' polynomials is constant; attack inconclusive")]
    TrivialGcd,
    #[error("exponent {0} too large to materialize as a dense polynomial")]
    ExponentTooLarge(BigUint),
}
