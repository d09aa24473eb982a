use thiserror::Error;

/// Failures surfaced by the command-line tool, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag values or combinations. Exit code 2.
    #[error("{0}")]
    Usage(String),

    /// Root finding failed, annotated with the degree when part of a sweep.
    /// Exit code 3.
    #[error("degree {n}: {source}")]
    Sweep {
        n: usize,
        #[source]
        source: polarzeros::Error,
    },

    /// Any other numerical failure. Exit code 3.
    #[error("{0}")]
    Numerical(polarzeros::Error),

    /// `bounds --assert` found zeros or critical points outside a region.
    /// Exit code 4.
    #[error("{0} bound violation(s) detected")]
    Violation(usize),

    /// Reading inputs or writing outputs. Exit code 1.
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// Wraps a library error raised while processing degree `n`.
    pub fn at_degree(n: usize, source: polarzeros::Error) -> Self {
        match CliError::from(source) {
            CliError::Numerical(source) => CliError::Sweep { n, source },
            CliError::Usage(msg) => CliError::Usage(format!("degree {n}: {msg}")),
            other => other,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Sweep { .. } | CliError::Numerical(_) => 3,
            CliError::Violation(_) => 4,
            CliError::Io { .. } => 1,
        }
    }
}

impl From<polarzeros::Error> for CliError {
    fn from(e: polarzeros::Error) -> Self {
        use polarzeros::Error as E;
        match e {
            E::InvalidArgument(_) | E::InvalidMeasure(_) | E::NotMonic(_) | E::Unsupported(_) => {
                CliError::Usage(e.to_string())
            }
            E::Numerical(_) | E::NoConvergence { .. } => CliError::Numerical(e),
        }
    }
}
