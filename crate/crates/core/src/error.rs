use alloc::string::String;
use core::fmt;

/// Errors raised by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A quandle axiom fails; `axiom` is 1, 2 or 3 and `witness` the offending elements.
    AxiomViolation { axiom: u8, witness: [usize; 3] },
    /// Table is not square or has entries out of range.
    InvalidTable(String),
    /// Alexander presentation whose leading or constant coefficient is not a unit.
    NotFinite(String),
    /// A map that does not respect the operation.
    NotAHomomorphism { a: usize, b: usize },
    /// Degenerate or quotient complexes requested on a rack.
    KindUnavailable,
    /// Basis larger than the configured cap.
    DegreeTooLarge { generators: u128, cap: u128 },
    /// Orbit tuple incompatible with the requested transfer variant.
    BadOrbitTuple(String),
    /// Coloring search space larger than the configured cap.
    SearchTooLarge { candidates: u128, cap: u128 },
    /// Polynomial precondition failed.
    BadPolynomial(String),
    /// Loop word does not carry the start color to the target color.
    WordMismatch { strand: usize },
    /// Loop word uses a letter outside the required fiber.
    WordOutsideFiber { strand: usize, letter: usize },
    /// No region data for this diagram family.
    UnsupportedDiagram(String),
    /// A chain expected to be a cycle has nonzero boundary.
    NotACycle,
    /// Brute-force helper refused because the input is too large.
    TooLargeForBruteForce { size: usize, max: usize },
    /// Anything else malformed.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AxiomViolation { axiom, witness } => {
                let name = match axiom {
                    1 => "idempotency",
                    2 => "right-invertibility",
                    _ => "self-distributivity",
                };
                write!(f, "axiom {axiom} ({name}) fails at {witness:?}")
            }
            Error::InvalidTable(m) => write!(f, "invalid table: {m}"),
            Error::NotFinite(m) => write!(f, "presentation is not finite: {m}"),
            Error::NotAHomomorphism { a, b } => write!(f, "map is not a homomorphism at ({a}, {b})"),
            Error::KindUnavailable => f.write_str("degenerate and quotient complexes need a quandle"),
            Error::DegreeTooLarge { generators, cap } => {
                write!(f, "basis would have {generators} generators, cap is {cap}")
            }
            Error::BadOrbitTuple(m) => write!(f, "bad orbit tuple: {m}"),
            Error::SearchTooLarge { candidates, cap } => {
                write!(f, "coloring search has {candidates} candidates, cap is {cap}")
            }
            Error::BadPolynomial(m) => write!(f, "bad polynomial: {m}"),
            Error::WordMismatch { strand } => write!(f, "loop word on strand {strand} does not reach the target color"),
            Error::WordOutsideFiber { strand, letter } => {
                write!(f, "loop word on strand {strand} uses {letter}, which is outside the fiber")
            }
            Error::UnsupportedDiagram(m) => write!(f, "unsupported diagram: {m}"),
            Error::NotACycle => f.write_str("chain is not a cycle"),
            Error::TooLargeForBruteForce { size, max } => {
                write!(f, "brute force limited to {max} elements, got {size}")
            }
            Error::InvalidArgument(m) => f.write_str(m),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
