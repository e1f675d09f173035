use std::fmt;
use std::process::ExitCode;

use rmghw::evalcode::CodeError;
use rmghw::formulas::FormulaError;
use rmghw::gf::GfError;
use rmghw::oracle::OracleError;
use rmghw::varieties::VarietyError;

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Computed values disagree with a fixture or with each other.
    Mismatch(String),
    /// A size or range guard refused the computation.
    Guard(String),
    BadArgs(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch(_) => ExitCode::from(2),
            CliError::Guard(_) => ExitCode::from(3),
            CliError::BadArgs(_) => ExitCode::from(4),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Mismatch(m) => write!(f, "mismatch: {m}"),
            CliError::Guard(m) => write!(f, "guard violation: {m}"),
            CliError::BadArgs(m) => write!(f, "bad arguments: {m}"),
        }
    }
}

/// `Variant: message`, so the error kind shows up in the output.
fn describe<E: fmt::Debug + fmt::Display>(e: &E) -> String {
    let debug = format!("{e:?}");
    let name = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default();
    format!("{name}: {e}")
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        CliError::BadArgs(describe(&e))
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        CliError::BadArgs(describe(&e))
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::DegreeTooLarge { .. } => CliError::Guard(describe(&e)),
            CodeError::Oracle(inner) => (*inner).into(),
            CodeError::Variety(inner) => inner.into(),
            _ => CliError::BadArgs(describe(&e)),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::RankOutOfRange { .. } => CliError::BadArgs(describe(&e)),
            _ => CliError::Guard(describe(&e)),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::RankOutOfTheoremRange { .. } | FormulaError::Overflow => CliError::Guard(describe(&e)),
            _ => CliError::BadArgs(describe(&e)),
        }
    }
}
