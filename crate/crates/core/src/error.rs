use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// Input errors and resource errors are kept distinct so callers (and the
/// CLI exit codes) can tell a malformed request from one that is merely too
/// large for the configured caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{what} of size {requested} exceeds the configured cap of {cap}")]
    Resource {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            Err(Error::Resource {
                what,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
