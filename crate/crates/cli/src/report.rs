use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use neurocode::sweep::Counterexample;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Everything one invocation produced. Keys of `outputs` serialize in
/// sorted order, so the JSON is byte-stable.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Verdict>,
    pub passed: bool,
    /// Human-readable lines for the plain-text mode.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl RunReport {
    pub fn new(command: String, input: &str) -> Self {
        let digest = Sha256::digest(input.as_bytes());
        Self {
            command,
            input_digest: format!("sha256:{digest:x}"),
            outputs: Map::new(),
            checks: Vec::new(),
            passed: true,
            text: Vec::new(),
        }
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("outputs serialize");
        self.outputs.insert(key.to_string(), v);
    }

    pub fn check(
        &mut self,
        name: &str,
        passed: bool,
        detail: Option<String>,
        counterexample: Option<Counterexample>,
    ) {
        self.passed &= passed;
        self.checks.push(Verdict {
            name: name.to_string(),
            passed,
            detail,
            counterexample,
        });
    }

    pub fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        self.text.push(format!("{key}: {value}"));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => out.push_str(&format!("check {}: {verdict} ({d})\n", c.name)),
                None => out.push_str(&format!("check {}: {verdict}\n", c.name)),
            }
            if let Some(cx) = &c.counterexample {
                out.push_str(&format!(
                    "  counterexample: {}\n  reproduce: {}\n",
                    cx.detail, cx.command
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Quotes an argument for a POSIX shell when it needs it.
pub fn shell_quote(arg: &str) -> String {
    let plain = !arg.is_empty()
        && arg
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_=:,./+@".contains(c));
    if plain {
        arg.to_string()
    } else {
        format!("'{}'", arg.replace('\'', r"'\''"))
    }
}

pub fn command_line(args: &[String]) -> String {
    let mut parts = vec!["neurocode".to_string()];
    parts.extend(args.iter().map(|a| shell_quote(a)));
    parts.join(" ")
}
