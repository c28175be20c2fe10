//! Exact values in JSON: integers and rationals as decimal strings (`"p"` or
//! `"p/q"`), never as floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;
use serde_json::Value;

pub fn z(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn qv(v: &BigRational) -> Value {
    Value::String(v.to_string())
}

pub fn zvec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(z).collect())
}

pub fn qvec(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(qv).collect())
}

pub fn zmatrix(m: &[Vec<BigInt>]) -> Value {
    Value::Array(m.iter().map(|r| zvec(r)).collect())
}

pub fn qmatrix(m: &[Vec<BigRational>]) -> Value {
    Value::Array(m.iter().map(|r| qvec(r)).collect())
}

pub fn ser_z<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_q<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_zvec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn ser_qvec<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn ser_zmatrix<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for r in m {
        let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

pub fn ser_qmatrix<S: Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for r in m {
        let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}
