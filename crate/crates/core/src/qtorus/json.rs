//! Canonical JSON form of elements.
//!
//! An element is an array of terms in monomial order; each term is
//! `{"coeff": [[qexp, int], ...], "mono": [[row, col, exp], ...]}` with both
//! lists sorted. Integers are written exactly, however large.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use thiserror::Error;

use super::{Element, GenIndex, Monomial, QLaurent};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("expected {expected} at {path}")]
    Shape {
        expected: &'static str,
        path: String,
    },
    #[error("term {0} is not in canonical form")]
    NonCanonical(usize),
}

fn big_to_value(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integer literal"))
}

fn shape(expected: &'static str, path: impl Into<String>) -> JsonError {
    JsonError::Shape {
        expected,
        path: path.into(),
    }
}

pub fn laurent_to_json(c: &QLaurent) -> Value {
    Value::Array(
        c.iter()
            .map(|(e, k)| Value::Array(vec![json!(e), big_to_value(k)]))
            .collect(),
    )
}

pub fn element_to_json(x: &Element) -> Value {
    Value::Array(
        x.terms()
            .map(|(m, c)| {
                let mono: Vec<Value> = m
                    .exponents()
                    .iter()
                    .map(|(g, e)| json!([g.row, g.col, e]))
                    .collect();
                json!({ "coeff": laurent_to_json(c), "mono": mono })
            })
            .collect(),
    )
}

fn as_i64(v: &Value, path: &str) -> Result<i64, JsonError> {
    v.as_i64().ok_or_else(|| shape("integer", path))
}

fn as_usize(v: &Value, path: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|u| u as usize)
        .filter(|&u| u >= 1)
        .ok_or_else(|| shape("positive integer", path))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array().ok_or_else(|| shape("array", path))
}

pub fn laurent_from_json(v: &Value) -> Result<QLaurent, JsonError> {
    let mut out = QLaurent::zero();
    for (i, pair) in as_array(v, "coeff")?.iter().enumerate() {
        let path = format!("coeff[{i}]");
        let pair = as_array(pair, &path)?;
        if pair.len() != 2 {
            return Err(shape("[qexp, int]", path));
        }
        let exp = as_i64(&pair[0], &path)?;
        let c = match &pair[1] {
            Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
            _ => None,
        }
        .ok_or_else(|| shape("integer", path.clone()))?;
        out.add_term(exp, c);
    }
    Ok(out)
}

/// Parses the canonical JSON form. Input that is well-shaped but not
/// canonical (unsorted, duplicated, or zero entries) is rejected, so that
/// `element_to_json(element_from_json(v)) == v` whenever parsing succeeds.
pub fn element_from_json(v: &Value) -> Result<Element, JsonError> {
    let mut out = Element::zero();
    let terms = as_array(v, "element")?;
    for (i, term) in terms.iter().enumerate() {
        let path = format!("term[{i}]");
        let obj = term.as_object().ok_or_else(|| shape("object", &path))?;
        let coeff = laurent_from_json(obj.get("coeff").ok_or_else(|| shape("coeff", &path))?)?;
        let mono_v = as_array(obj.get("mono").ok_or_else(|| shape("mono", &path))?, &path)?;
        let mut exps = Vec::with_capacity(mono_v.len());
        for (j, triple) in mono_v.iter().enumerate() {
            let p = format!("{path}.mono[{j}]");
            let triple = as_array(triple, &p)?;
            if triple.len() != 3 {
                return Err(shape("[row, col, exp]", p));
            }
            exps.push((
                GenIndex::new(as_usize(&triple[0], &p)?, as_usize(&triple[1], &p)?),
                as_i64(&triple[2], &p)?,
            ));
        }
        let mono = Monomial::from_exponents(exps.clone());
        if mono.exponents() != exps.as_slice() || coeff.is_zero() {
            return Err(JsonError::NonCanonical(i));
        }
        out.add_term(mono, &coeff);
    }
    if out.num_terms() != terms.len() || element_to_json(&out) != *v {
        return Err(JsonError::NonCanonical(terms.len()));
    }
    Ok(out)
}
