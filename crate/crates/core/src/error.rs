use core::fmt;

/// Errors shared by the library modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// A word mentions a generator index outside `1..=genus`.
    IndexOutOfRange { index: usize, genus: usize },
    /// A move built for one rank was applied to a set of another rank.
    GenusMismatch { move_genus: usize, set_genus: usize },
    /// An exhaustive exploration hit its node budget. The instance is too
    /// large to certify, which says nothing about the answer.
    BudgetExceeded { visited: usize, budget: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::IndexOutOfRange { index, genus } => {
                write!(f, "generator index {index} out of range for genus {genus}")
            }
            Error::GenusMismatch {
                move_genus,
                set_genus,
            } => {
                write!(
                    f,
                    "move of genus {move_genus} applied to a set of genus {set_genus}"
                )
            }
            Error::BudgetExceeded { visited, budget } => {
                write!(
                    f,
                    "exploration exceeded its node budget ({visited} visited, budget {budget})"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
