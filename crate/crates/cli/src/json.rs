use std::io::Read;

use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use sector_kit::linalg::CMatrix;
use sector_kit::Complex64;

use crate::CliError;

pub const SCHEMA: &str = "sector-kit/1";

/// Rounds to 15 significant digits so golden files stay stable across platforms.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    json!(if r == 0.0 { 0.0 } else { r })
}

pub fn complex(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn complex_vec(v: &[Complex64]) -> Value {
    Value::Array(v.iter().copied().map(complex).collect())
}

pub fn cmatrix(m: &CMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|r| Value::Array((0..m.ncols()).map(|c| complex(m[(r, c)])).collect())).collect())
}

pub fn parse_complex_matrix(rows: &[Vec<[f64; 2]>]) -> Result<CMatrix, CliError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Input("S must be a square matrix".into()));
    }
    Ok(CMatrix::from_fn(n, n, |r, c| Complex64::new(rows[r][c][0], rows[r][c][1])))
}

/// Inline JSON, a file path, or `-` for stdin.
pub fn read_input<T: DeserializeOwned>(src: &str) -> Result<T, CliError> {
    let text = if src.trim_start().starts_with('{') || src.trim_start().starts_with('[') {
        src.to_owned()
    } else if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(src)?
    };
    Ok(serde_json::from_str(&text)?)
}

pub fn parse_inline<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

pub fn check_schema(tag: &Option<String>) -> Result<(), CliError> {
    match tag {
        Some(t) if t != SCHEMA => Err(CliError::Input(format!("unsupported schema {t:?}, expected {SCHEMA:?}"))),
        _ => Ok(()),
    }
}
