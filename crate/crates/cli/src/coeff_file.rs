//! JSON coefficient files.
//!
//! ```json
//! {"kind": "complex-poly", "coeffs": [[0, 0], [1, 0], [0.5, 0]]}
//! {"kind": "trig-poly", "a0": 1.25, "cos": [1.0], "sin": [0.0]}
//! ```
//!
//! Complex coefficients are `[re, im]` pairs in ascending degree.

use serde_json::{json, Map, Value};
use unicrit_core::{Complex64, ComplexPoly, TrigPoly};

pub const COMPLEX_KIND: &str = "complex-poly";
pub const TRIG_KIND: &str = "trig-poly";

#[derive(Debug, Clone, PartialEq)]
pub enum CoeffFile {
    Complex(ComplexPoly),
    Trig(TrigPoly),
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected a JSON object at the top level")]
    NotAnObject,
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("unknown kind {0:?}, expected \"complex-poly\" or \"trig-poly\"")]
    UnknownKind(String),
    #[error("field `{field}` must be {expected}")]
    WrongType {
        field: &'static str,
        expected: &'static str,
    },
    #[error("`{field}[{index}]`: {reason}")]
    BadEntry {
        field: &'static str,
        index: usize,
        reason: &'static str,
    },
    #[error("expected a {expected} file, got a {got} file")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
}

impl CoeffFile {
    pub fn kind(&self) -> &'static str {
        match self {
            CoeffFile::Complex(_) => COMPLEX_KIND,
            CoeffFile::Trig(_) => TRIG_KIND,
        }
    }

    pub fn into_complex(self) -> Result<ComplexPoly, ParseError> {
        match self {
            CoeffFile::Complex(p) => Ok(p),
            other => Err(ParseError::WrongKind {
                expected: COMPLEX_KIND,
                got: other.kind(),
            }),
        }
    }

    pub fn into_trig(self) -> Result<TrigPoly, ParseError> {
        match self {
            CoeffFile::Trig(t) => Ok(t),
            other => Err(ParseError::WrongKind {
                expected: TRIG_KIND,
                got: other.kind(),
            }),
        }
    }
}

pub fn parse(text: &str) -> Result<CoeffFile, ParseError> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or(ParseError::NotAnObject)?;
    let kind = obj
        .get("kind")
        .ok_or(ParseError::MissingField("kind"))?
        .as_str()
        .ok_or(ParseError::WrongType {
            field: "kind",
            expected: "a string",
        })?;
    match kind {
        COMPLEX_KIND => {
            let coeffs = array_field(obj, "coeffs")?
                .iter()
                .enumerate()
                .map(|(index, entry)| complex_entry(entry, index))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CoeffFile::Complex(ComplexPoly::new(coeffs)))
        }
        TRIG_KIND => {
            let a0 = obj
                .get("a0")
                .ok_or(ParseError::MissingField("a0"))?
                .as_f64()
                .ok_or(ParseError::WrongType {
                    field: "a0",
                    expected: "a number",
                })?;
            let cos = real_list(obj, "cos")?;
            let sin = real_list(obj, "sin")?;
            Ok(CoeffFile::Trig(TrigPoly::new(a0, cos, sin)))
        }
        other => Err(ParseError::UnknownKind(other.to_string())),
    }
}

pub fn render(file: &CoeffFile) -> String {
    let value = match file {
        CoeffFile::Complex(p) => json!({
            "kind": COMPLEX_KIND,
            "coeffs": complex_list(p.coeffs()),
        }),
        CoeffFile::Trig(t) => json!({
            "kind": TRIG_KIND,
            "a0": t.a0(),
            "cos": t.cos_coeffs(),
            "sin": t.sin_coeffs(),
        }),
    };
    let mut text = serde_json::to_string_pretty(&value).expect("finite coefficients");
    text.push('\n');
    text
}

/// `[[re, im], ..]`
pub fn complex_list(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|c| json!([c.re, c.im])).collect())
}

fn array_field<'a>(
    obj: &'a Map<String, Value>,
    field: &'static str,
) -> Result<&'a Vec<Value>, ParseError> {
    obj.get(field)
        .ok_or(ParseError::MissingField(field))?
        .as_array()
        .ok_or(ParseError::WrongType {
            field,
            expected: "an array",
        })
}

fn complex_entry(entry: &Value, index: usize) -> Result<Complex64, ParseError> {
    let bad = |reason| ParseError::BadEntry {
        field: "coeffs",
        index,
        reason,
    };
    let pair = entry.as_array().ok_or(bad("expected an [re, im] pair"))?;
    if pair.len() != 2 {
        return Err(bad("expected exactly two numbers"));
    }
    let re = pair[0].as_f64().ok_or(bad("real part is not a number"))?;
    let im = pair[1]
        .as_f64()
        .ok_or(bad("imaginary part is not a number"))?;
    Ok(Complex64::new(re, im))
}

fn real_list(obj: &Map<String, Value>, field: &'static str) -> Result<Vec<f64>, ParseError> {
    let Some(value) = obj.get(field) else {
        return Ok(Vec::new());
    };
    let entries = value.as_array().ok_or(ParseError::WrongType {
        field,
        expected: "an array",
    })?;
    entries
        .iter()
        .enumerate()
        .map(|(index, v)| {
            v.as_f64().ok_or(ParseError::BadEntry {
                field,
                index,
                reason: "not a number",
            })
        })
        .collect()
}
