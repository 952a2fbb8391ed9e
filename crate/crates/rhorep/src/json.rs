//! JSON encodings of scalars and matrices.
//!
//! CycNum: `{"r": r, "coeffs": ["p/q", ...]}` in the ζ_{4r} power basis,
//! rationals as exact decimal-free strings. LPoly3: a list of
//! `[a, b, c, "coeff"]` quadruples sorted by exponent triple. LRat:
//! `{"num": ..., "den": ...}`. Matrices are row-major nested arrays in the
//! declared basis order. All output is deterministic.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::cyclo::{make_field, CycField, CycNum};
use crate::laurent::{LPoly3, LRat};
use crate::linalg::Mat;
use crate::{Error, Result};

pub fn cyc_to_json(x: &CycNum) -> Value {
    let coeffs: Vec<Value> = x
        .coeffs()
        .iter()
        .map(|c| Value::String(c.to_string()))
        .collect();
    json!({ "r": x.field().r(), "coeffs": coeffs })
}

pub fn cyc_from_json(v: &Value) -> Result<CycNum> {
    let r = v
        .get("r")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::BadParameter("CycNum JSON missing r".into()))? as u32;
    let field = make_field(r)?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::BadParameter("CycNum JSON missing coeffs".into()))?;
    let parsed: Result<Vec<BigRational>> = coeffs
        .iter()
        .map(|c| {
            let s = c
                .as_str()
                .ok_or_else(|| Error::BadParameter("coefficient must be a string".into()))?;
            parse_rational(s)
        })
        .collect();
    CycNum::from_coeffs(&field, parsed?)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let mk_err = || Error::BadParameter(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| mk_err())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| mk_err())?;
            if d == BigInt::from(0) {
                return Err(Error::DivisionByZero("rational literal"));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub fn lpoly_to_json(p: &LPoly3) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(&(a, b, c), k)| json!([a, b, c, k.to_string()]))
        .collect();
    Value::Array(terms)
}

pub fn lrat_to_json(x: &LRat) -> Value {
    json!({ "num": lpoly_to_json(x.num()), "den": lpoly_to_json(x.den()) })
}

pub fn cyc_mat_to_json(m: &Mat<CycNum>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| cyc_to_json(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

pub fn lpoly_mat_to_json(m: &Mat<LPoly3>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| lpoly_to_json(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

/// Compact display form used in reports: the coefficients joined, not meant
/// to be parsed back.
pub fn cyc_display(x: &CycNum) -> String {
    format!("{x:?}")
}

/// The field handle for decoding matrices emitted at a given r.
pub fn field_of(v: &Value) -> Result<CycField> {
    let r = v
        .get("r")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::BadParameter("missing r".into()))? as u32;
    make_field(r)
}
