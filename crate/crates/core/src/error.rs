use alloc::string::String;
use core::fmt;

use crate::radical::Rational;
use crate::spin::{HalfInt, SpinSum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NegativeRadicand(Rational),
    /// Radicand too large for the `u64` key space.
    RadicandOverflow(Rational),
    IndexOutOfRange {
        spin_twice: u32,
        index: HalfInt,
    },
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The spins admit only the zero vector matrix.
    NoSolution(SpinSum),
    /// The recursion relations could not be satisfied by the propagated
    /// coefficients.
    InconsistentRecursion(String),
    /// Angle or rapidity outside the range the series evaluation accepts.
    OutOfDomain(String),
    SeriesDiverged,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeRadicand(x) => write!(f, "square root of negative rational {x}"),
            Error::RadicandOverflow(x) => write!(f, "radicand of {x} does not fit in 64 bits"),
            Error::IndexOutOfRange { spin_twice, index } => write!(
                f,
                "projection {index} is not in the range of spin {}",
                crate::spin::Spin::from_twice(*spin_twice)
            ),
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NoSolution(sum) => write!(
                f,
                "no nonzero vector matrices for {sum}: selection rule A = C ± 1/2 and B = D ± 1/2 violated ({})",
                sum.selection_rule_violation()
            ),
            Error::InconsistentRecursion(msg) => write!(f, "inconsistent recursion: {msg}"),
            Error::OutOfDomain(msg) => write!(f, "argument out of domain: {msg}"),
            Error::SeriesDiverged => f.write_str("matrix exponential series did not converge"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
