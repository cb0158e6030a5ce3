//! Polynomial files: `{"p": int, "degree": int, "coefficients": [A_0, ..., A_n]}`.
//!
//! Each `A_k` is a list of `p` rows of `p` complex entries. An entry is either
//! `[re, im]` or a string such as `"57/4"`, `"-3"`, `"1/2+3/4i"` or `"-i"`.

use std::path::Path;

use hurwitz_core::{CMatrix, Complex, MatrixPolynomial};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("coefficient {index} is not a square {p}x{p} block")]
    NonSquareBlock { index: usize, p: usize },
    #[error("leading coefficient block is zero")]
    LeadingBlockZero,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

pub fn parse_polynomial(path: &Path) -> Result<MatrixPolynomial, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_polynomial_str(&text)
}

pub fn parse_polynomial_str(text: &str) -> Result<MatrixPolynomial, InputError> {
    let value: Value = serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    parse_polynomial_value(&value)
}

pub fn parse_polynomial_value(value: &Value) -> Result<MatrixPolynomial, InputError> {
    let obj = value.as_object().ok_or_else(|| schema("", "expected an object"))?;
    let p = obj
        .get("p")
        .and_then(Value::as_u64)
        .filter(|&p| p >= 1)
        .ok_or_else(|| schema("/p", "expected a positive integer"))? as usize;
    let degree = obj
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema("/degree", "expected a nonnegative integer"))? as usize;
    let coeffs = obj
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("/coefficients", "expected an array of blocks"))?;
    if coeffs.len() != degree + 1 {
        return Err(schema(
            "/coefficients",
            format!("degree {degree} needs {} blocks, found {}", degree + 1, coeffs.len()),
        ));
    }
    let mut blocks = Vec::with_capacity(coeffs.len());
    for (index, block) in coeffs.iter().enumerate() {
        let rows = block
            .as_array()
            .ok_or_else(|| schema(format!("/coefficients/{index}"), "expected a list of rows"))?;
        if rows.len() != p {
            return Err(InputError::NonSquareBlock { index, p });
        }
        let mut m = CMatrix::zeros(p, p);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| schema(format!("/coefficients/{index}/{i}"), "expected a list of entries"))?;
            if row.len() != p {
                return Err(InputError::NonSquareBlock { index, p });
            }
            for (j, entry) in row.iter().enumerate() {
                m[(i, j)] = parse_entry(entry).map_err(|msg| schema(format!("/coefficients/{index}/{i}/{j}"), msg))?;
            }
        }
        blocks.push(m);
    }
    if blocks[0].norm_max() == 0.0 {
        return Err(InputError::LeadingBlockZero);
    }
    MatrixPolynomial::from_blocks(blocks).map_err(|_| InputError::NonSquareBlock { index: 0, p })
}

fn parse_entry(v: &Value) -> Result<Complex, String> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or("real part is not a number")?;
            let im = pair[1].as_f64().ok_or("imaginary part is not a number")?;
            Ok(Complex::new(re, im))
        }
        Value::String(s) => parse_complex_str(s).ok_or_else(|| format!("cannot parse {s:?} as a complex rational")),
        _ => Err("expected [re, im] or a rational string".into()),
    }
}

fn parse_rational(s: &str) -> Option<f64> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: i64 = num.parse().ok()?;
    let den: i64 = den.parse().ok()?;
    (den != 0).then(|| num as f64 / den as f64)
}

/// `"a/b"`, `"a/b+c/di"`, `"c/di"`, `"i"`, with optional signs and integer parts.
pub fn parse_complex_str(s: &str) -> Option<Complex> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(&s).map(|re| Complex::new(re, 0.0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_rational(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
    };
    Some(Complex::new(re, im))
}

pub fn matrix_to_json(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
}

pub fn polynomial_to_json(f: &MatrixPolynomial) -> Value {
    let coefficients: Vec<_> = f.coeffs().iter().map(matrix_to_json).collect();
    json!({ "p": f.p(), "degree": f.degree(), "coefficients": coefficients })
}
