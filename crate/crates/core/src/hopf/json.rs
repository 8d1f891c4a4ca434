//! JSON import/export of structure tensors. Coefficients are strings such as
//! "1/2-z^3" over ζ_conductor.

use serde_json::{json, Value};

use super::data::{HopfAlgebraData, HopfTables, Sparse};
use crate::cyclo::CycNumber;

#[derive(Debug, thiserror::Error)]
pub enum HopfJsonError {
    #[error("missing or malformed field {0:?}")]
    Field(&'static str),
    #[error("index {index} out of range for dimension {dim}")]
    Index { index: usize, dim: usize },
    #[error(transparent)]
    Coefficient(#[from] crate::cyclo::CycloError),
}

pub fn to_json(h: &HopfAlgebraData) -> Value {
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.product(i, j) {
                mult.push(json!([i, j, k, c.to_string()]));
            }
        }
    }
    let mut comult = Vec::new();
    let mut antipode = Vec::new();
    for i in 0..n {
        for (l, r, c) in h.coproduct(i) {
            comult.push(json!([i, l, r, c.to_string()]));
        }
        for (k, c) in h.antipode(i) {
            antipode.push(json!([i, k, c.to_string()]));
        }
    }
    json!({
        "name": h.name,
        "labels": h.labels,
        "dim": n,
        "conductor": h.conductor,
        "mult": mult,
        "comult": comult,
        "counit": (0..n).map(|i| h.counit(i).to_string()).collect::<Vec<_>>(),
        "antipode": antipode,
        "unit": h.unit().iter().map(|(k, c)| json!([k, c.to_string()])).collect::<Vec<_>>(),
    })
}

fn index(v: &Value, dim: usize) -> Result<usize, HopfJsonError> {
    let index = v.as_u64().ok_or(HopfJsonError::Field("index"))? as usize;
    if index >= dim {
        return Err(HopfJsonError::Index { index, dim });
    }
    Ok(index)
}

fn coef(v: &Value, m: u64) -> Result<CycNumber, HopfJsonError> {
    match v {
        Value::String(s) => Ok(CycNumber::parse(m, s)?),
        Value::Number(x) => Ok(CycNumber::parse(m, &x.to_string())?),
        _ => Err(HopfJsonError::Field("coefficient")),
    }
}

fn rows<'a>(v: &'a Value, field: &'static str, width: usize) -> Result<Vec<&'a Vec<Value>>, HopfJsonError> {
    v.get(field)
        .and_then(Value::as_array)
        .ok_or(HopfJsonError::Field(field))?
        .iter()
        .map(|r| r.as_array().filter(|a| a.len() == width).ok_or(HopfJsonError::Field(field)))
        .collect()
}

/// Parse the schema written by [`to_json`]. `labels` and `name` are optional.
pub fn from_json(v: &Value) -> Result<HopfAlgebraData, HopfJsonError> {
    let n = v.get("dim").and_then(Value::as_u64).ok_or(HopfJsonError::Field("dim"))? as usize;
    let m = v.get("conductor").and_then(Value::as_u64).filter(|&m| m >= 1).ok_or(HopfJsonError::Field("conductor"))?;
    let mut mult: Vec<Sparse> = vec![Vec::new(); n * n];
    for r in rows(v, "mult", 4)? {
        let (i, j, k) = (index(&r[0], n)?, index(&r[1], n)?, index(&r[2], n)?);
        mult[i * n + j].push((k, coef(&r[3], m)?));
    }
    let mut comult = vec![Vec::new(); n];
    for r in rows(v, "comult", 4)? {
        let (i, l, rr) = (index(&r[0], n)?, index(&r[1], n)?, index(&r[2], n)?);
        comult[i].push((l, rr, coef(&r[3], m)?));
    }
    let mut antipode: Vec<Sparse> = vec![Vec::new(); n];
    for r in rows(v, "antipode", 3)? {
        let (i, k) = (index(&r[0], n)?, index(&r[1], n)?);
        antipode[i].push((k, coef(&r[2], m)?));
    }
    let mut unit: Sparse = Vec::new();
    for r in rows(v, "unit", 2)? {
        unit.push((index(&r[0], n)?, coef(&r[1], m)?));
    }
    let counit_raw = v.get("counit").and_then(Value::as_array).filter(|a| a.len() == n).ok_or(HopfJsonError::Field("counit"))?;
    let counit = counit_raw.iter().map(|c| coef(c, m)).collect::<Result<Vec<_>, _>>()?;
    let labels = match v.get("labels").and_then(Value::as_array) {
        Some(a) if a.len() == n => a.iter().map(|x| x.as_str().map(str::to_string).ok_or(HopfJsonError::Field("labels"))).collect::<Result<_, _>>()?,
        Some(_) => return Err(HopfJsonError::Field("labels")),
        None => (0..n).map(|i| format!("b{i}")).collect(),
    };
    let name = v.get("name").and_then(Value::as_str).unwrap_or("user").to_string();
    Ok(HopfAlgebraData::from_tables(name, labels, m, HopfTables { mult, unit, comult, counit, antipode }))
}
