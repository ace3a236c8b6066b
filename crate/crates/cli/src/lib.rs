//! File formats, reports and catalog sweeps on top of `epg-core`.

pub mod catalog;
pub mod cayley;
pub mod dot;
pub mod json;
pub mod sweep;
pub mod text;

use std::path::PathBuf;

use epg_core::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Cayley { path: PathBuf, source: cayley::CayleyError },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Dot(#[from] dot::DotError),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
