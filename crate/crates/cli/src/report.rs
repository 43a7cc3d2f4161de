//! Command reports and their two renderings.
//!
//! A report is a single JSON object `{command, inputs, results, status}`
//! (plus `error` on failure). The text form is rendered from that same
//! object, so both modes always show the same numbers.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Parse or domain error in the user's input.
    Error,
    /// A verified property failed to hold; indicates a bug.
    Internal,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Internal => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Option<Map<String, Value>>,
    pub status: Status,
    pub error: Option<String>,
}

impl Report {
    pub fn ok(command: &str, inputs: Map<String, Value>, results: Map<String, Value>) -> Self {
        Report {
            command: command.into(),
            inputs,
            results: Some(results),
            status: Status::Ok,
            error: None,
        }
    }

    pub fn failed(command: &str, inputs: Map<String, Value>, status: Status, message: String) -> Self {
        Report {
            command: command.into(),
            inputs,
            results: None,
            status,
            error: Some(message),
        }
    }

    pub fn to_value(&self) -> Value {
        let status = match self.status {
            Status::Ok => "ok",
            Status::Error | Status::Internal => "error",
        };
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), Value::Object(self.inputs.clone()));
        obj.insert(
            "results".into(),
            self.results.clone().map_or(Value::Null, Value::Object),
        );
        obj.insert("status".into(), json!(status));
        if let Some(e) = &self.error {
            obj.insert("error".into(), json!(e));
        }
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("plain JSON values");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Value::Object(obj) = self.to_value() {
            render_object(&obj, 0, &mut out);
        }
        out
    }
}

fn render_object(obj: &Map<String, Value>, indent: usize, out: &mut String) {
    let width = obj
        .iter()
        .filter(|(_, v)| !v.is_object())
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    for (k, v) in obj {
        match v {
            Value::Null => {}
            Value::Object(inner) => {
                out.push_str(&format!("{:indent$}{k}\n", ""));
                render_object(inner, indent + 2, out);
            }
            v => {
                out.push_str(&format!("{:indent$}{k:<width$}  {}\n", "", scalar(v)));
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "[]".into(),
        Value::Array(items) if items.iter().all(|i| !i.is_array()) => {
            format!("({})", items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => unreachable!("objects are rendered as nested blocks"),
        other => other.to_string(),
    }
}
