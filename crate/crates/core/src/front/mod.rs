//! Relation parser, spec files, preset references and report rendering.

mod parse;
mod report;
mod specfile;

pub use parse::{parse_poly, parse_poly_at, ParseError, ParseErrorKind};
pub use report::{
    emit_report, engine_version, now_timestamp, CheckRecord, DataRecord, Format, ReportDocument, WitnessRecord,
    FIXED_TIMESTAMP, REPORT_SCHEMA,
};
pub use specfile::{load_spec, parse_spec, serialize_spec};

use std::path::Path;

use crate::symbolic::Scalar;
use crate::zoo::{self, PresetArg, Subject, ZooError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrontError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("line {line}, column {column}: {message}")]
    Spec { line: usize, column: usize, message: String },
    #[error("{message}{}", witness.as_ref().map(|w| format!(" (witness: {w})")).unwrap_or_default())]
    Validation { message: String, witness: Option<String> },
    #[error("bad preset reference `{text}`: {message}")]
    PresetSyntax { text: String, message: String },
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error("{0}")]
    Io(String),
}

/// Splits `name` or `name(arg, key=arg, ..)` into its parts.
pub fn parse_preset_reference(text: &str) -> Result<(String, Vec<PresetArg>), FrontError> {
    let bad = |message: &str| FrontError::PresetSyntax {
        text: text.to_string(),
        message: message.to_string(),
    };
    let text = text.trim();
    let (name, args) = match text.find('(') {
        None => (text, None),
        Some(i) => {
            let inner = text[i + 1..]
                .strip_suffix(')')
                .ok_or_else(|| bad("missing closing `)`"))?;
            (&text[..i], Some(inner))
        }
    };
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(bad("preset names use letters, digits and `_`"));
    }
    let mut out = Vec::new();
    if let Some(inner) = args {
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let (key, value) = match part.split_once('=') {
                    Some((k, v)) => (Some(k.trim().to_string()), v.trim()),
                    None => (None, part.trim()),
                };
                let value: Scalar = value
                    .parse()
                    .map_err(|e| bad(&format!("argument `{}`: {e}", part.trim())))?;
                out.push(PresetArg { key, value });
            }
        }
    }
    Ok((name.to_string(), out))
}

/// A spec-file path when one exists, otherwise a preset reference.
pub fn resolve_subject(text: &str) -> Result<Subject, FrontError> {
    let path = Path::new(text);
    if path.is_file() {
        return load_spec(path);
    }
    let (name, args) = parse_preset_reference(text)?;
    Ok(zoo::preset(&name, &args)?)
}
