//! One generalized Hamming weight by a chosen method, or by every method that
//! applies with a cross-check.

use clap::ValueEnum;
use rmghw::evalcode::{build_code, EvalCode};
use rmghw::oracle::{CodeId, GhwReport, Method, OracleError, MAX_ENUM_CLASSES};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::variety::{enum_classes, enumerate, hierarchy, Variety};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Formula,
    Footprint,
}

/// A [`GhwReport`] with the schema version and, for `auto`, every method
/// that produced the same value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhwOutput {
    pub schema: u32,
    #[serde(flatten)]
    pub report: GhwReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub agreeing: Vec<Method>,
}

struct Value {
    method: Method,
    value: u64,
    support: Option<Vec<usize>>,
}

fn oracle(v: &Variety, code: &EvalCode, r: usize) -> Result<Value, CliError> {
    if v.subset_rank_fits() {
        let h = hierarchy(code)?;
        let w = h.witness(r)?;
        return Ok(Value { method: Method::SubsetRank, value: h.weights[r - 1], support: Some(w.support) });
    }
    if r != 1 {
        return Err(OracleError::LengthTooLargeForOracle(code.len()).into());
    }
    let classes = enum_classes(v.field.q() as u64, code.dim());
    if classes > MAX_ENUM_CLASSES as u128 {
        return Err(OracleError::DimensionTooLargeForOracle { classes }.into());
    }
    let (value, support) = enumerate(code)?;
    Ok(Value { method: Method::CodewordEnum, value, support: Some(support) })
}

fn formula(v: &Variety, d: u32, r: usize) -> Result<Value, CliError> {
    Ok(Value { method: Method::ClosedForm, value: v.formula(d, r)?, support: None })
}

fn footprint(v: &Variety, d: u32, r: usize) -> Result<Value, CliError> {
    Ok(Value { method: Method::Footprint, value: v.footprint(d, r)?, support: None })
}

pub fn run(v: &Variety, d: u32, r: usize, method: MethodArg) -> Result<GhwOutput, CliError> {
    if d == 0 {
        return Err(CliError::BadArgs("--d must be at least 1".into()));
    }
    let code = build_code(&v.points, d)?;
    if r == 0 || r > code.dim() {
        return Err(OracleError::RankOutOfRange { r, kappa: code.dim() }.into());
    }
    let id = CodeId::of(&code);
    let (chosen, agreeing) = match method {
        MethodArg::Oracle => (oracle(v, &code, r)?, Vec::new()),
        MethodArg::Formula => (formula(v, d, r)?, Vec::new()),
        MethodArg::Footprint => (footprint(v, d, r)?, Vec::new()),
        MethodArg::Auto => {
            let mut found = Vec::new();
            let mut first_err = None;
            for attempt in [oracle(v, &code, r), formula(v, d, r), footprint(v, d, r)] {
                match attempt {
                    Ok(val) => found.push(val),
                    Err(e) => {
                        first_err.get_or_insert(e);
                    }
                }
            }
            if found.is_empty() {
                return Err(first_err.expect("some method was tried"));
            }
            let base = found[0].value;
            if let Some(bad) = found.iter().find(|f| f.value != base) {
                return Err(CliError::Mismatch(format!(
                    "delta_{r}: {:?} gives {base}, {:?} gives {}",
                    found[0].method, bad.method, bad.value
                )));
            }
            let methods: Vec<Method> = found.iter().map(|f| f.method).collect();
            (found.remove(0), methods)
        }
    };
    let witness_support = chosen.support.map(|s| vec![(r, s)]).unwrap_or_default();
    let report = GhwReport { code: id, method: chosen.method, weights: vec![(r, chosen.value)], witness_support };
    Ok(GhwOutput { schema: 1, report, agreeing })
}
