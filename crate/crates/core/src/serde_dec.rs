//! Serialization helpers: big integers as decimal strings, rationals as
//! `"num/den"` in lowest terms (`"num"` when the denominator is 1).

use serde::ser::{SerializeSeq, Serializer};

use crate::{Integer, Rational};

pub fn integer<S: Serializer>(v: &Integer, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn rational<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn integers<S: Serializer>(vs: &[Integer], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}
