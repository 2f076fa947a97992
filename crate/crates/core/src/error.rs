use thiserror::Error;

/// Errors surfaced by the model-construction and evaluation layers.
#[derive(Debug, Error)]
pub enum QfvError {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid model: {0}")]
    Model(String),

    #[error("invalid kernel: {0}")]
    Kernel(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl QfvError {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        QfvError::Config {
            path: path.into(),
            message: message.into(),
        }
    }
}
