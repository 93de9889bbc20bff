//! Command implementations shared by the binary and the tests.
//!
//! Each runner returns the text to print on stdout plus the process exit
//! code. Exit codes are a pure function of the result: 0 for success (for
//! `check`, the criterion holds), 3 when the criterion fails, 4 when an
//! exhaustive exploration ran out of budget, 1 for every operational error.

use std::path::Path;

use tcurve_core::models::{catalog_note, enumerate_models};
use tcurve_core::oracle::{certify, Caps, DEFAULT_NODE_BUDGET};
use tcurve_core::{verdict, Error as CoreError, Verdict};

use crate::input::{parse, InputDocument, ParseError};
use crate::report;

/// Exit code used for operational errors.
pub const EXIT_ERROR: u8 = 1;
/// Exit code of `check` when the criterion fails.
pub const EXIT_CRITERION_FAILS: u8 = 3;
/// Exit code when an exploration exceeds its node budget.
pub const EXIT_BUDGET_EXCEEDED: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("length cap {cap} is below the input's algebraic length {len}")]
    CapTooSmall { cap: usize, len: usize },
    #[error("model enumeration above genus {max} is not practical (cost grows like (2g)!); asked for {asked}")]
    GenusTooLarge { asked: usize, max: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::BudgetExceeded { .. }) => EXIT_BUDGET_EXCEEDED,
            _ => EXIT_ERROR,
        }
    }
}

/// Largest genus the `models` command accepts; the library itself is
/// uncapped.
pub const MODELS_GENUS_CAP: usize = 5;

pub fn load(path: &Path) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        err,
    })?;
    Ok(parse(&text, &path.display().to_string())?)
}

fn run_verdict(doc: &InputDocument) -> Result<Verdict, CliError> {
    Ok(verdict(doc.genus, doc.words.clone())?)
}

/// `check`: decide the criterion. Exit 0 when it holds, 3 when it fails.
pub fn check(doc: &InputDocument, json: bool, trace: bool) -> Result<(String, u8), CliError> {
    let v = run_verdict(doc)?;
    let out = if json {
        report::verdict_json(doc, &v)
    } else {
        report::verdict_text(doc, &v, trace)
    };
    let code = if v.criterion_holds {
        0
    } else {
        EXIT_CRITERION_FAILS
    };
    Ok((out, code))
}

/// `reduce`: print the minimal set and the trace.
pub fn reduce(doc: &InputDocument, json: bool) -> Result<(String, u8), CliError> {
    let v = run_verdict(doc)?;
    let out = if json {
        report::verdict_json(doc, &v)
    } else {
        report::reduce_text(doc, &v)
    };
    Ok((out, 0))
}

/// `oracle`: exhaustive certification of the instance.
pub fn oracle(
    doc: &InputDocument,
    cap: Option<usize>,
    budget: Option<usize>,
    json: bool,
) -> Result<(String, u8), CliError> {
    let set = doc.to_set();
    let length_cap = cap.unwrap_or_else(|| set.length());
    if length_cap < set.length() {
        return Err(CliError::CapTooSmall {
            cap: length_cap,
            len: set.length(),
        });
    }
    let node_budget = budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let caps = Caps {
        length_cap: Some(length_cap),
        node_budget,
    };
    let certification = certify(&set, &caps)?;
    let report = report::CertificationReport {
        length_cap,
        node_budget,
        exploration: certification.exploration,
        greedy_matches_minimum: certification.greedy_matches_minimum,
        minimal_forms_agree_on_condition: certification.minimal_forms_agree_on_condition,
        minimal_level_connected: certification.minimal_level_connected,
    };
    let out = if json {
        report::oracle_json(doc, &report)
    } else {
        report::oracle_text(doc, &report)
    };
    Ok((out, 0))
}

/// `models`: the per-genus catalog.
pub fn models(genus: usize, json: bool) -> Result<(String, u8), CliError> {
    if genus > MODELS_GENUS_CAP {
        return Err(CliError::GenusTooLarge {
            asked: genus,
            max: MODELS_GENUS_CAP,
        });
    }
    let classes = enumerate_models(genus);
    let note = catalog_note(genus);
    let out = if json {
        report::models_json(genus, &classes, note)
    } else {
        report::models_text(genus, &classes, note)
    };
    Ok((out, 0))
}
