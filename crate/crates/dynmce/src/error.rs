use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}", parse_message(*.line, .message))]
    Parse { line: usize, message: String },
    #[error("invalid input: {0}")]
    Input(#[from] dynmce_core::Error),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
}

fn parse_message(line: usize, message: &str) -> String {
    if line == 0 {
        format!("parse error: {message}")
    } else {
        format!("parse error at line {line}: {message}")
    }
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for a verification mismatch, 2 for bad input, 3 for I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Io { .. } | CliError::Csv(_) => 3,
        }
    }
}
