//! JSON state files: a 6x6 array of `[re, im]` pairs in qubit-major order,
//! rows indexed by `3a + i` for qubit index `a` and qutrit index `i`.
//!
//! ```json
//! { "schema": "qq-invariants/state/v1", "scalar": "exact",
//!   "matrix": [[["1/6", "0"], ["0", "0"], ...], ...] }
//! ```
//!
//! On the exact path entries are rationals written as `"p/q"` or `"p"`
//! strings (JSON integers are accepted too); on the float path entries are
//! numbers.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::matrix::{ExactMatrix, FloatMatrix, Matrix};
use super::StateError;

pub const STATE_SCHEMA: &str = "qq-invariants/state/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarPath {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StateMatrix {
    Exact(ExactMatrix),
    Float(FloatMatrix),
}

#[derive(Deserialize, Serialize)]
struct StateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    scalar: ScalarPath,
    matrix: Vec<Vec<[Value; 2]>>,
}

pub fn parse_rational(v: &Value) -> Result<BigRational, StateError> {
    let bad = || StateError::Entry(v.to_string());
    match v {
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d == BigInt::from(0) {
                        return Err(bad());
                    }
                    Ok(BigRational::new(n, d))
                }
                None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            }
        }
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())).ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn parse_float(v: &Value) -> Result<f64, StateError> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| StateError::Entry(v.to_string())),
        Value::String(s) => s.trim().parse().map_err(|_| StateError::Entry(v.to_string())),
        _ => Err(StateError::Entry(v.to_string())),
    }
}

fn build<R: super::RealScalar>(
    rows: &[Vec<[Value; 2]>],
    parse: impl Fn(&Value) -> Result<R, StateError>,
) -> Result<Matrix<R>, StateError> {
    let n = rows.len();
    if n != 6 || rows.iter().any(|r| r.len() != 6) {
        return Err(StateError::Shape { rows: n, cols: rows.first().map_or(0, Vec::len) });
    }
    let mut out = Vec::with_capacity(6);
    for row in rows {
        let mut r = Vec::with_capacity(6);
        for [re, im] in row {
            r.push(Complex::new(parse(re)?, parse(im)?));
        }
        out.push(r);
    }
    Ok(Matrix::from_rows(out))
}

pub fn parse_state(text: &str) -> Result<StateMatrix, StateError> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| StateError::Json(e.to_string()))?;
    if let Some(schema) = &file.schema {
        if schema != STATE_SCHEMA {
            return Err(StateError::Json(format!("unsupported schema {schema:?}")));
        }
    }
    match file.scalar {
        ScalarPath::Exact => build(&file.matrix, parse_rational).map(StateMatrix::Exact),
        ScalarPath::Float => build(&file.matrix, parse_float).map(StateMatrix::Float),
    }
}

pub fn exact_state_to_json(rho: &ExactMatrix) -> String {
    let matrix = (0..rho.rows())
        .map(|i| {
            (0..rho.cols())
                .map(|j| {
                    let z = rho.get(i, j);
                    [Value::String(z.re.to_string()), Value::String(z.im.to_string())]
                })
                .collect()
        })
        .collect();
    let file = StateFile { schema: Some(STATE_SCHEMA.into()), scalar: ScalarPath::Exact, matrix };
    serde_json::to_string_pretty(&file).expect("state serializes")
}

pub fn float_state_to_json(rho: &FloatMatrix) -> String {
    let num = |x: f64| serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
    let matrix = (0..rho.rows())
        .map(|i| (0..rho.cols()).map(|j| [num(rho.get(i, j).re), num(rho.get(i, j).im)]).collect())
        .collect();
    let file = StateFile { schema: Some(STATE_SCHEMA.into()), scalar: ScalarPath::Float, matrix };
    serde_json::to_string_pretty(&file).expect("state serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::Sampler;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational(&Value::from("-1/36")).unwrap(), BigRational::new((-1).into(), 36.into()));
        assert_eq!(parse_rational(&Value::from(" 2 / 4 ")).unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(&Value::from(3)).unwrap(), BigRational::from_integer(3.into()));
        assert!(parse_rational(&Value::from("1/0")).is_err());
        assert!(parse_rational(&Value::from(0.5)).is_err());
        assert!(parse_rational(&Value::from("x")).is_err());
    }

    #[test]
    fn exact_roundtrip() {
        let rho = Sampler::new(1).rational_state();
        let text = exact_state_to_json(&rho);
        assert_eq!(parse_state(&text).unwrap(), StateMatrix::Exact(rho));
    }

    #[test]
    fn float_roundtrip() {
        let rho = Sampler::new(1).psd_state();
        let text = float_state_to_json(&rho);
        assert_eq!(parse_state(&text).unwrap(), StateMatrix::Float(rho));
    }

    #[test]
    fn shape_errors() {
        let text = r#"{"scalar": "exact", "matrix": [[["1", "0"]]]}"#;
        assert_eq!(parse_state(text), Err(StateError::Shape { rows: 1, cols: 1 }));
        assert!(matches!(parse_state("{"), Err(StateError::Json(_))));
    }
}
