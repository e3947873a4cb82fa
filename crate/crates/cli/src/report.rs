use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Geometric statements taken as given; no command computes them.
pub const ASSUMED_CONTEXT: &[&str] = &[
    "hyperbolicity of the knots K_n built from symmetric unions",
    "the Seifert fibred and orbifold classification of double branched covers",
    "the degree arguments restricting the partial knots of 11a_201",
    "the realization statements for knots with square Alexander polynomial",
];

/// Outcome of one command. Field order and the sorted maps make the JSON
/// form deterministic; timing is only present when asked for.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumed_context: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            inputs: BTreeMap::new(),
            results: Value::Object(Default::default()),
            warnings: Vec::new(),
            assumed_context: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.into(), v.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ knotforge {}\n", self.command.join(" "));
        for (k, v) in &self.inputs {
            out += &format!("input {k}: {}\n", scalar(v));
        }
        render(&self.results, 0, &mut out);
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        if !self.assumed_context.is_empty() {
            out += "assumed, not computed:\n";
            for c in &self.assumed_context {
                out += &format!("  - {c}\n");
            }
        }
        if let Some(ms) = self.timing_ms {
            out += &format!("time: {ms} ms\n");
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.is_empty() => "[]".into(),
        Value::Object(m) if m.is_empty() => "{}".into(),
        _ => v.to_string(),
    }
}

fn nested(v: &Value) -> bool {
    match v {
        Value::Object(m) => !m.is_empty(),
        Value::Array(xs) => !xs.is_empty(),
        Value::String(s) => s.contains('\n'),
        _ => false,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let entry = |head: String, x: &Value, out: &mut String| {
        if nested(x) {
            *out += &format!("{pad}{head}\n");
            render(x, depth + 1, out);
        } else {
            *out += &format!("{pad}{head} {}\n", scalar(x));
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| entry(format!("{k}:"), x, out)),
        Value::Array(xs) => xs.iter().for_each(|x| entry("-".into(), x, out)),
        Value::String(s) => s.lines().for_each(|l| *out += &format!("{pad}{l}\n")),
        _ => *out += &format!("{pad}{}\n", scalar(v)),
    }
}
