//! Crate-level error type.

use thiserror::Error;

use crate::complex::ComplexError;
use crate::field::LinalgError;
use crate::filtration::{FiltrationError, Grade};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error("Koszul differentials d_{i} d_{next} do not compose to zero at grade {u}, degree {q}", next = .i + 1)]
    DifferentialNotSquareZero { u: Grade, q: usize, i: usize },
    #[error("double complex differentials do not anticommute at grade {u}")]
    AnticommutativityFailure { u: Grade },
    #[error("relative chain complex at grade {u} is not spanned by the cells entering there")]
    RelativeComplexMismatch { u: Grade },
    #[error("parameters out of range: {0}")]
    ParametersOutOfRange(String),
    #[error("grade {0} does not have the filtration's parameter count")]
    GradeShape(Grade),
}

pub type Result<T> = std::result::Result<T, Error>;
