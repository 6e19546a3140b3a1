//! Loading JSON problem documents.
//!
//! A document is either flat (the payload object itself, optionally carrying
//! `"mode": "<subcommand>"`) or wrapped as `{"mode", "payload"}`. Both forms
//! may carry a top-level `"polynomial"` string with its `"variables"` array.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::{Map, Value};
use zeta_infinity::poly::{MultiPoly, TopGap};

use crate::report::CliError;
use crate::Mode;

pub struct PolynomialBlock {
    pub poly: MultiPoly,
    /// `Err` holds the reason the polynomial has no gap.
    pub gap: Result<TopGap, String>,
}

impl PolynomialBlock {
    pub fn variables(&self) -> &[String] {
        self.poly.variables()
    }

    pub fn require_gap(&self) -> Result<&TopGap, CliError> {
        self.gap
            .as_ref()
            .map_err(|why| CliError::invalid(why.clone()).in_field("polynomial"))
    }
}

pub struct Document {
    payload: Value,
    pub polynomial: Option<PolynomialBlock>,
}

impl Document {
    pub fn read(path: &Path, subcommand: Mode) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, subcommand)
    }

    pub fn parse(text: &str, subcommand: Mode) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::invalid(format!("malformed JSON: {e}")))?;
        let Value::Object(mut obj) = value else {
            return Err(CliError::invalid("document must be a JSON object"));
        };
        check_mode(&mut obj, subcommand)?;
        let polynomial = take_polynomial(&mut obj)?;
        let payload = match obj.remove("payload") {
            Some(p) => {
                if let Some(key) = obj.keys().next() {
                    return Err(CliError::invalid(format!(
                        "unexpected field `{key}` next to `payload`"
                    )));
                }
                p
            }
            None => Value::Object(obj),
        };
        Ok(Self {
            payload,
            polynomial,
        })
    }

    /// A document assembled from command-line flags.
    pub fn from_payload(payload: Value) -> Self {
        Self {
            payload,
            polynomial: None,
        }
    }

    pub fn payload<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        T::deserialize(&self.payload)
            .map_err(|e| CliError::invalid(format!("invalid document: {e}")))
    }
}

/// Removes a `mode` field naming a subcommand; any other `mode` value is
/// left for the payload (strata documents use it for the zeta mode).
fn check_mode(obj: &mut Map<String, Value>, subcommand: Mode) -> Result<(), CliError> {
    let Some(Value::String(mode)) = obj.get("mode") else {
        return Ok(());
    };
    if Mode::from_name(mode).is_none() {
        return Ok(());
    }
    if mode != subcommand.name() {
        return Err(CliError::invalid(format!(
            "document is for `{mode}` but the subcommand is `{}`",
            subcommand.name()
        ))
        .in_field("mode"));
    }
    obj.remove("mode");
    Ok(())
}

fn take_polynomial(obj: &mut Map<String, Value>) -> Result<Option<PolynomialBlock>, CliError> {
    let text = obj.remove("polynomial");
    let variables = obj.remove("variables");
    let (text, variables) = match (text, variables) {
        (None, None) => return Ok(None),
        (Some(_), None) => {
            return Err(
                CliError::invalid("`polynomial` requires a `variables` array")
                    .in_field("variables"),
            )
        }
        (None, Some(_)) => {
            return Err(
                CliError::invalid("`variables` given without `polynomial`").in_field("polynomial")
            )
        }
        (Some(t), Some(v)) => (t, v),
    };
    let Value::String(text) = text else {
        return Err(CliError::invalid("expected a string").in_field("polynomial"));
    };
    let variables: Vec<String> = serde_json::from_value(variables)
        .map_err(|_| CliError::invalid("expected an array of names").in_field("variables"))?;
    let poly = MultiPoly::parse(&text, &variables)
        .map_err(|e| CliError::from(e).in_field("polynomial"))?;
    let gap = poly.top_gap().map_err(|e| e.to_string());
    Ok(Some(PolynomialBlock { poly, gap }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn payload(doc: &Document) -> Value {
        doc.payload().unwrap()
    }

    #[test]
    fn subcommand_tag_is_removed() {
        let doc = Document::parse(r#"{"mode": "family", "a": 1}"#, Mode::Family).unwrap();
        assert_eq!(payload(&doc), json!({"a": 1}));
    }

    #[test]
    fn zeta_mode_stays_in_the_payload() {
        let doc = Document::parse(r#"{"mode": "zero", "n": 2}"#, Mode::Strata).unwrap();
        assert_eq!(payload(&doc), json!({"mode": "zero", "n": 2}));
    }

    #[test]
    fn wrapped_documents() {
        let text = r#"{"mode": "strata", "payload": {"mode": "zero", "n": 2}}"#;
        let doc = Document::parse(text, Mode::Strata).unwrap();
        assert_eq!(payload(&doc), json!({"mode": "zero", "n": 2}));
        let err = Document::parse(r#"{"payload": {}, "n": 2}"#, Mode::Strata)
            .err()
            .unwrap();
        assert!(err.message.contains("`n`"));
    }

    #[test]
    fn mismatched_tag_is_rejected() {
        let err = Document::parse(r#"{"mode": "perm"}"#, Mode::Curve)
            .err()
            .unwrap();
        assert!(err.message.starts_with("field `mode`"));
    }

    #[test]
    fn polynomial_block() {
        let text = r#"{"polynomial": "x^2*y^2 + x", "variables": ["x", "y", "z"], "d": 4}"#;
        let doc = Document::parse(text, Mode::Curve).unwrap();
        let block = doc.polynomial.as_ref().unwrap();
        let gap = block.require_gap().unwrap();
        assert_eq!((gap.d, gap.k), (4, 3));
        assert_eq!(payload(&doc), json!({"d": 4}));

        let doc =
            Document::parse(r#"{"polynomial": "x^3", "variables": ["x"]}"#, Mode::Curve).unwrap();
        assert!(doc.polynomial.unwrap().require_gap().is_err());
        let err = Document::parse(r#"{"polynomial": "x"}"#, Mode::Curve)
            .err()
            .unwrap();
        assert!(err.message.starts_with("field `variables`"));
        let err = Document::parse(r#"{"polynomial": "w", "variables": ["x"]}"#, Mode::Curve)
            .err()
            .unwrap();
        assert!(err.message.contains("undeclared variable"));
    }
}
