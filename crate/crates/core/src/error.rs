use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A requested integer range holds no admissible values (e.g. `limit < 2`).
    EmptyRange { limit: u64 },
    /// An argument lies outside the domain of a function.
    Domain(&'static str),
    /// Malformed or inconsistent caller input.
    Input(&'static str),
    /// An intermediate value would not fit in 64 bits.
    Overflow(&'static str),
    /// A buffer could not be allocated.
    Resource { bytes: usize },
    /// Data that parsed but violates an invariant (ordering, emptiness).
    CorruptData(&'static str),
    /// A zero table whose first ordinate is not the first zeta zero.
    WrongFile { first: f64 },
    /// A line of text input that does not parse.
    Parse { line: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyRange { limit } => write!(f, "empty range: limit {limit} is below 2"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Input(what) => write!(f, "invalid input: {what}"),
            Error::Overflow(what) => write!(f, "overflow: {what}"),
            Error::Resource { bytes } => write!(f, "could not allocate {bytes} bytes"),
            Error::CorruptData(what) => write!(f, "corrupt data: {what}"),
            Error::WrongFile { first } => write!(
                f,
                "first ordinate {first} is not near 14.1347; not a table of zeta zeros"
            ),
            Error::Parse { line } => write!(f, "unparseable value on line {line}"),
        }
    }
}

impl core::error::Error for Error {}
