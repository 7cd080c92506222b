use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} = {value} is above the cap {cap}")]
    Capacity { what: &'static str, value: usize, cap: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("not an ideal: [{x}, {w}] is not in the subspace")]
    NotIdeal { x: String, w: String },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("membership violation: {0}")]
    Membership(String),
    #[error("not transverse: nonzero vector {0} lies in both subspaces")]
    Transversality(String),
    #[error("unknown corpus entry {0:?}")]
    UnknownCorpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Dimension cap for Lie algebras.
pub const MAX_DIM: usize = 12;
/// Cap on wedge degree for cochain spaces.
pub const MAX_DEGREE: usize = 6;
/// Cap on the arity of the generic higher-bracket engine.
pub const MAX_ARITY: usize = 4;

pub fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::Capacity { what, value, cap })
    } else {
        Ok(())
    }
}
