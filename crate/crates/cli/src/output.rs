use crate::args::{Format, OutputArgs};
use anyhow::{Context, Result};
use conekit_core::report::fmt_sig;
use serde_json::Value;
use std::io::Write;

/// Rewrite every number to 12 significant digits; non-finite floats become strings.
pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => number(x),
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

/// A JSON number at 12 significant digits, or "inf"/"-inf"/"nan".
pub fn number(x: f64) -> Value {
    let s = fmt_sig(x);
    match s.parse::<f64>() {
        Ok(y) if y.is_finite() => serde_json::Number::from_f64(y).map(Value::Number).unwrap_or(Value::String(s)),
        _ => Value::String(s),
    }
}

pub fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&round_json(v)).expect("json values serialize");
    s.push('\n');
    s
}

/// Write `csv` or `json` (chosen by --format) to --out or stdout.
pub fn emit(out: &OutputArgs, csv: impl FnOnce() -> String, json: impl FnOnce() -> Value) -> Result<()> {
    let text = match out.format {
        Format::Csv => csv(),
        Format::Json => pretty(json()),
    };
    match &out.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match lock.write_all(text.as_bytes()) {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r.context("cannot write to stdout"),
            }
        }
    }
}
