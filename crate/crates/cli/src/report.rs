use serde::Serialize;
use serde_json::{Map, Value};
use zeta_infinity::{Error, ZetaFactorization};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CROSS_CHECK: u8 = 3;

/// A failure that aborts one document, with its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    /// Prefixes the message with the document field it concerns.
    pub fn in_field(self, field: &str) -> Self {
        Self {
            code: self.code,
            message: format!("field `{field}`: {}", self.message),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CrossCheck(_) => EXIT_CROSS_CHECK,
            _ => EXIT_INVALID,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Human lines plus the machine block for one evaluated document.
#[derive(Debug)]
pub struct Report {
    subcommand: &'static str,
    lines: Vec<String>,
    fields: Map<String, Value>,
    warnings: Vec<String>,
    checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(subcommand: &'static str) -> Self {
        Self {
            subcommand,
            lines: Vec::new(),
            fields: Map::new(),
            warnings: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report fields serialize");
        self.fields.insert(key.to_owned(), value);
    }

    pub fn warnings(&mut self, texts: impl IntoIterator<Item = String>) {
        self.warnings.extend(texts);
    }

    pub fn check(&mut self, name: &str, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(CheckOutcome {
            name: name.to_owned(),
            passed,
            detail,
        });
    }

    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().all(|c| c.passed) {
            EXIT_OK
        } else {
            EXIT_CROSS_CHECK
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            out.push_str(&format!("check {}: {status} ({})\n", c.name, c.detail));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("subcommand".into(), self.subcommand.into());
        obj.extend(self.fields.clone());
        obj.insert(
            "warnings".into(),
            serde_json::to_value(&self.warnings).unwrap(),
        );
        obj.insert("checks".into(), serde_json::to_value(&self.checks).unwrap());
        obj.insert("exit".into(), self.exit_code().into());
        Value::Object(obj)
    }
}

/// Human-readable zeta string; the unit prints as `1`.
pub fn show(z: &ZetaFactorization) -> String {
    if z.is_unit() {
        "1".to_owned()
    } else {
        z.to_string()
    }
}
