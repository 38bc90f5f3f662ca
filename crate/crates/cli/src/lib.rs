//! Library side of the `cubeseq` binary: certificate documents and the
//! `reproduce`, `generate` and `verify` commands.

pub mod document;
pub mod generate;
pub mod reproduce;
pub mod verify;

pub use document::CertificateDocument;
pub use generate::{generate, GenerateArgs};
pub use reproduce::{render, run_fixtures};
pub use verify::{verify_document, verify_text};

/// Overrides the embedded fixture file for `reproduce` (test mode).
pub const FIXTURE_ENV: &str = "CUBESEQ_FIXTURES";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Pipeline(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Input(_) => 2,
            CliError::Pipeline(_) => 3,
        }
    }
}
