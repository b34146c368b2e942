use std::fmt;

/// A failure with the process exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

pub const INPUT: u8 = 1;
pub const INFEASIBLE: u8 = 2;
pub const INTERNAL: u8 = 3;

impl CliError {
    pub fn input(m: impl Into<String>) -> Self {
        CliError { code: INPUT, message: m.into() }
    }

    pub fn infeasible(m: impl Into<String>) -> Self {
        CliError { code: INFEASIBLE, message: m.into() }
    }

    pub fn internal(m: impl Into<String>) -> Self {
        CliError { code: INTERNAL, message: m.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<polyguard::Error> for CliError {
    fn from(e: polyguard::Error) -> Self {
        use polyguard::Error::*;
        let code = match e {
            InvalidPolygon(_) | IndexOutOfRange { .. } | LimitExceeded { .. } | Invalid(_) => INPUT,
            NotAFunnel(_) | NotWeaklyVisible { .. } | PointOutside | HasHoles | Disconnected => INFEASIBLE,
            Internal(_) => INTERNAL,
        };
        CliError { code, message: e.to_string() }
    }
}
