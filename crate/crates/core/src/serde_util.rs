//! Text encodings shared by every serialised artifact: polynomials in the
//! parser grammar, rationals as `"p/q"` strings, matrices as rows of such
//! strings, tuples in the [`crate::eval::TupleFile`] layout.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::eval::{MatTuple, TupleFile};
use crate::linalg::{QMatrix, QVector};
use crate::poly::NcPoly;
use crate::scalar::{self, Scalar};

/// Smallest variable count able to hold every `x<k>` mentioned in `text`.
pub(crate) fn implied_nvars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            let mut k = 0usize;
            while j < b.len() && b[j].is_ascii_digit() {
                k = k.saturating_mul(10).saturating_add((b[j] - b'0') as usize);
                j += 1;
            }
            best = best.max(k);
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

impl Serialize for NcPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Deserialised polynomials carry the variable count implied by their text;
/// containers re-target them to the declared `d` afterwards.
impl<'de> Deserialize<'de> for NcPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parse::parse(&text, implied_nvars(&text)).map_err(D::Error::custom)
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(scalar::render).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| scalar::parse(x)).collect::<crate::Result<Vec<_>>>())
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        QMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

impl Serialize for MatTuple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = TupleFile::deserialize(d)?;
        MatTuple::from_file(&f).map_err(D::Error::custom)
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&scalar::render(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        scalar::parse(&String::deserialize(d)?).map_err(D::Error::custom)
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(scalar::render).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QVector, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| scalar::parse(x))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)
    }
}

pub mod opt_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<QVector>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|v| v.iter().map(scalar::render).collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<QVector>, D::Error> {
        Option::<Vec<String>>::deserialize(d)?
            .map(|v| v.iter().map(|x| scalar::parse(x)).collect::<crate::Result<Vec<_>>>())
            .transpose()
            .map_err(D::Error::custom)
    }
}
