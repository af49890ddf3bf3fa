use std::fmt;
use std::path::Path;

use helly_core::{Error, Verdict};
use serde_json::{json, Map, Value};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Fail = 1,
    Inconclusive = 2,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    /// Fail dominates inconclusive, which dominates pass.
    pub fn worst(self, other: Status) -> Status {
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Inconclusive => 1,
            Status::Fail => 2,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Status::Ok,
            Verdict::Fail => Status::Fail,
            Verdict::Inconclusive => Status::Inconclusive,
        }
    }
}

/// What a command produced: a status, a JSON body and a text rendering.
pub struct Report {
    pub status: Status,
    pub body: Map<String, Value>,
    pub text: String,
}

impl Report {
    pub fn new(text: impl Into<String>) -> Self {
        Report {
            status: Status::Ok,
            body: Map::new(),
            text: text.into(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.body.insert(key.into(), value);
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn to_json(&self, command: &str) -> Value {
        let mut out = self.body.clone();
        out.insert("schema".into(), json!(1));
        out.insert("command".into(), json!(command));
        out.insert("status".into(), json!(self.status.name()));
        Value::Object(out)
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input or arguments; exit 3.
    Input(String),
    /// The computation could not be completed; exit 1.
    Compute(String),
    /// A degree cap was reached; exit 2.
    Inconclusive(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 3,
            CliError::Compute(_) => 1,
            CliError::Inconclusive(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Compute(_) => "computation",
            CliError::Inconclusive(_) => "inconclusive",
        }
    }

    /// An error raised while reading the file at `path`.
    pub fn in_file(path: &Path, e: Error) -> Self {
        match e {
            Error::Parse { line, msg } => {
                CliError::Input(format!("{}:{line}: {msg}", path.display()))
            }
            e => match CliError::from(e) {
                CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
                other => other,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Compute(m) | CliError::Inconclusive(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InconclusiveAtCap { .. } => CliError::Inconclusive(msg),
            Error::Parse { .. }
            | Error::Invalid(_)
            | Error::InvalidComplex(_)
            | Error::InvalidIdeal(_)
            | Error::NotSquarefree(_)
            | Error::NotPrime(_)
            | Error::NotHomogeneous(_)
            | Error::ZeroIdeal
            | Error::VoidComplex
            | Error::FieldMismatch(..) => CliError::Input(msg),
            _ => CliError::Compute(msg),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
