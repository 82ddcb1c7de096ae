use alloc::string::String;
use core::fmt;

/// Errors produced by field construction, linear algebra and plan building.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Extension degree outside `1..=16`.
    DegreeOutOfRange {
        m: u32,
    },
    /// Supplied modulus does not have degree `m`.
    ModulusDegree {
        m: u32,
        modulus: u32,
    },
    /// Supplied modulus is not a primitive polynomial over GF(2).
    NonPrimitiveModulus {
        modulus: u32,
    },
    /// `d` does not divide the extension degree.
    DegreeNotDivisor {
        d: u32,
        m: u32,
    },
    /// Operation needs a nonzero element.
    ZeroElement,
    /// Operation needs an even extension degree.
    OddExtensionDegree {
        m: u32,
    },
    /// A class or polynomial has the wrong cardinality / degree.
    WrongCardinality {
        expected: usize,
        found: usize,
    },
    DivisionByZeroPoly,
    SingularMatrix,
    /// Basis vectors are linearly dependent or an element is outside their span.
    SingularBasis,
    /// The δ-coordinate system of a remainder matrix could not be inverted.
    SingularSystem,
    /// A permutation of odd size was requested where an even size is required.
    OddSize {
        size: usize,
    },
    /// Remainder matrices need `m > 2`.
    DegreeTooSmall {
        m: u32,
    },
    /// No base kernel exists for an odd factor of the class degree.
    UnsupportedDegree {
        degree: u32,
        missing_kernel: u32,
    },
    /// A class of even cardinality is not special and no bridge was requested.
    NotSpecial {
        c: u32,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    DimensionMismatch,
    /// A plan or evaluator was applied with a field other than the one it was built for.
    FieldMismatch,
    ParseElement(String),
    ParsePolynomial(String),
    InvalidPermutation,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeOutOfRange { m } => {
                write!(f, "extension degree {m} out of range (supported: 1..=16)")
            }
            Error::ModulusDegree { m, modulus } => {
                write!(f, "modulus {modulus:#x} does not have degree {m}")
            }
            Error::NonPrimitiveModulus { modulus } => {
                write!(f, "modulus {modulus:#x} is not primitive over GF(2)")
            }
            Error::DegreeNotDivisor { d, m } => write!(f, "{d} does not divide {m}"),
            Error::ZeroElement => write!(f, "element must be nonzero"),
            Error::OddExtensionDegree { m } => {
                write!(f, "odd m: novel method unavailable, requires even m (got m = {m})")
            }
            Error::WrongCardinality { expected, found } => {
                write!(f, "expected cardinality {expected}, found {found}")
            }
            Error::DivisionByZeroPoly => write!(f, "division by the zero polynomial"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::SingularBasis => write!(f, "basis is singular"),
            Error::SingularSystem => write!(f, "remainder coordinate system is singular"),
            Error::OddSize { size } => write!(f, "permutation size {size} is odd"),
            Error::DegreeTooSmall { m } => write!(f, "remainder matrix needs m > 2 (got {m})"),
            Error::UnsupportedDegree { degree, missing_kernel } => {
                write!(f, "degree {degree} unsupported: missing degree-{missing_kernel} base kernel")
            }
            Error::NotSpecial { c } => write!(f, "class of {c} is not a special class"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            Error::FieldMismatch => write!(f, "field does not match the one the plan was built for"),
            Error::ParseElement(s) => write!(f, "cannot parse field element {s:?}"),
            Error::ParsePolynomial(s) => write!(f, "cannot parse polynomial {s:?}"),
            Error::InvalidPermutation => write!(f, "image array is not a bijection"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
