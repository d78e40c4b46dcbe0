use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group enumeration exceeded the cap of {cap} elements")]
    InfiniteGroup { cap: usize },
    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("cannot parse `{input}` as an element of {system}")]
    ParseElement { input: String, system: String },
    #[error("cannot parse `{0}` as a generator subset")]
    ParseSubset(String),
    #[error("{element} is not a shortest coset representative for {subset}")]
    NotACosetRepresentative { element: String, subset: String },
    #[error("no fixture data for {0}")]
    FixtureMissing(String),
    #[error("fixture format error: {0}")]
    FixtureFormat(String),
    #[error("convention check failed: {0}")]
    Convention(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
