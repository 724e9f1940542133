use thiserror::Error;

use crate::perm::PatternSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A size above the configured enumeration cap was requested.
    #[error("n = {requested} exceeds the {what} cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("no structural generator for {{{0}}}; use the brute-force oracle instead")]
    UnsupportedFamily(PatternSet),

    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),

    #[error("{0} is outside the supported domain")]
    OutOfDomain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
