use thiserror::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Some acceptance criterion failed.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_MATH: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// A library error tied to one command-line input.
    #[error("{what}: {source}")]
    Input {
        what: &'static str,
        source: ore_elim::Error,
    },
    #[error(transparent)]
    Core(#[from] ore_elim::Error),
    #[error("{failed} of {total} criteria failed")]
    VerifyFailed { failed: usize, total: usize },
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn input(what: &'static str) -> impl FnOnce(ore_elim::Error) -> CliError {
        move |source| CliError::Input { what, source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input { source, .. } | CliError::Core(source) => core_exit_code(source),
            CliError::VerifyFailed { .. } => EXIT_FAILED,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_INTERNAL,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input { source, .. } | CliError::Core(source) => source.code(),
            CliError::VerifyFailed { .. } => "verify_failed",
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => "io",
        }
    }
}

fn core_exit_code(e: &ore_elim::Error) -> i32 {
    use ore_elim::Error;
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Internal(_) | Error::SingularMooreSystem => EXIT_INTERNAL,
        _ => EXIT_MATH,
    }
}
