use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

const REPORT_V1: &str = include_str!("../schema/report-v1.json");

pub fn report_schema(version: u32) -> Result<Value, CliError> {
    match version {
        1 => serde_json::from_str(REPORT_V1).map_err(|e| CliError::Internal(format!("bundled schema: {e}"))),
        v => Err(CliError::Usage(format!("unknown schema version {v}; known: 1"))),
    }
}

#[derive(Debug, Serialize)]
pub struct ValidationResult {
    pub kind: String,
    pub valid: bool,
    pub errors: Vec<String>,
}

/// Validates `instance` against the `$defs` entry named `kind`.
pub fn validate(doc: &Value, kind: &str, instance: &Value) -> Result<ValidationResult, CliError> {
    let defs = doc
        .get("$defs")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::Internal("schema has no $defs".into()))?;
    if !defs.contains_key(kind) {
        let known: Vec<&str> = defs.keys().map(String::as_str).collect();
        return Err(CliError::Usage(format!(
            "unknown report kind {kind:?}; known: {}",
            known.join(", ")
        )));
    }
    let root = json!({
        "$schema": doc.get("$schema").cloned().unwrap_or(Value::Null),
        "$defs": defs,
        "$ref": format!("#/$defs/{kind}"),
    });
    let validator = jsonschema::validator_for(&root).map_err(|e| CliError::Internal(format!("schema: {e}")))?;
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| {
            let path = e.instance_path.to_string();
            format!("{}: {e}", if path.is_empty() { "/" } else { &path })
        })
        .collect();
    Ok(ValidationResult {
        kind: kind.to_string(),
        valid: errors.is_empty(),
        errors,
    })
}
