use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("magnitude overflow")]
    Overflow,
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("precision error: requested {requested:e}, reached {reached:e}")]
    Precision { requested: f64, reached: f64 },
    #[error("integrability error: {0}")]
    Integrability(String),
    #[error("diagnostic failure: {0}")]
    Diagnostic(String),
    #[error("lookup error: unknown identity `{0}`")]
    Lookup(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("route `{route}` failed: {source}")]
    Route {
        route: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
