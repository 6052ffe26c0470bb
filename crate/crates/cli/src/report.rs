//! The report envelope and its two renderings.
//!
//! Both renderings are produced from one `serde_json::Value`, so they carry
//! the same data by construction. Object keys are sorted (serde_json's
//! default map is a `BTreeMap`), which makes the JSON stable: parsing and
//! re-serializing it reproduces the same bytes.

use biregular::exact::{Coeff, Polynomial};
use biregular::radical::RadicalScalar;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub command: &'static str,
    pub input: Option<String>,
    pub payload: Value,
}

impl Report {
    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "payload": self.payload,
            "exact": true,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values always serialize");
                s.push('\n');
                s
            }
            Format::Text => render_text(&self.to_value()),
        }
    }
}

/// One `path = value` line per leaf. Nested object keys are joined with
/// `.`, array elements of objects get `[i]`, and arrays of scalars stay on
/// one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, String::new(), &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn walk(v: &Value, path: String, out: &mut String) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                walk(x, join(k), out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                walk(x, format!("{path}[{i}]"), out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{path} = [{}]\n", parts.join(", ")));
        }
        Value::Object(_) => out.push_str(&format!("{path} = {{}}\n")),
        leaf => out.push_str(&format!("{path} = {}\n", scalar(leaf))),
    }
}

/// Coefficients as strings, lowest degree first.
pub fn poly<T: Coeff>(p: &Polynomial<T>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

/// Coefficient array plus the human-readable form under one key each.
pub fn poly_fields<T: Coeff>(m: &mut Map<String, Value>, key: &str, p: &Polynomial<T>) {
    m.insert(key.to_string(), poly(p));
    m.insert(format!("{key}_text"), Value::String(p.to_string()));
}

/// `{squarefree: coefficient}`; zero is the empty map.
pub fn radical(r: &RadicalScalar) -> Value {
    Value::Object(r.terms().map(|(s, q)| (s.to_string(), Value::String(q.to_string()))).collect())
}
