use thiserror::Error;

/// Errors shared across the crate.
///
/// `TheoremViolation` is deliberately separate from `Input`: an input error
/// means the caller asked for something outside an operation's domain, while
/// a theorem violation means an identity that is proven to hold failed on a
/// concrete instance. The latter carries a full diagnostic dump (inputs plus
/// serialized polynomials) because it would be a counterexample, not a bug to
/// swallow.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("theorem violation in {identity}:\n{dump}")]
    TheoremViolation { identity: String, dump: String },

    #[error("enumeration budget exhausted after {0} objects")]
    BudgetExceeded(u64),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn theorem(identity: impl Into<String>, dump: impl Into<String>) -> Self {
        Error::TheoremViolation {
            identity: identity.into(),
            dump: dump.into(),
        }
    }

    /// True for violations of proven identities (CLI exit code 3).
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
