use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::FormSpace;
use crate::linalg::{Fp, Modulus, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldName {
    Rational,
}

/// `"rational"` or `{"prime": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Prime { prime: u64 },
    Named(FieldName),
}

/// A coefficient: an integer, or a string `"n"` / `"n/d"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

/// A subspace of `R_j` given by a basis; entry `i` of each form is the
/// coefficient of `x^(j-i) y^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSpaceDocument {
    pub field: FieldSpec,
    pub j: usize,
    pub forms: Vec<Vec<Coefficient>>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub enum LoadedSpace {
    Rational(FormSpace<Rational>),
    Prime(FormSpace<Fp>),
}

impl FormSpaceDocument {
    pub fn from_reader(mut r: impl Read) -> Result<Self> {
        let mut text = String::new();
        r.read_to_string(&mut text)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed document: {e}")))
    }

    pub fn from_prime_space(space: &FormSpace<Fp>) -> Self {
        FormSpaceDocument {
            field: FieldSpec::Prime {
                prime: u64::from(space.ctx().get()),
            },
            j: space.j(),
            forms: space
                .forms()
                .iter()
                .map(|f| f.coeffs().iter().map(|c| Coefficient::Integer(i64::from(c.value()))).collect())
                .collect(),
        }
    }

    pub fn from_rational_space(space: &FormSpace<Rational>) -> Self {
        FormSpaceDocument {
            field: FieldSpec::Named(FieldName::Rational),
            j: space.j(),
            forms: space
                .forms()
                .iter()
                .map(|f| f.coeffs().iter().map(|c| Coefficient::Text(c.to_string())).collect())
                .collect(),
        }
    }

    /// Parses every entry, then checks row lengths and independence.
    pub fn load(&self) -> Result<LoadedSpace> {
        match self.field {
            FieldSpec::Named(FieldName::Rational) => {
                let rows = self.rows(|row, col, c| {
                    let text = match c {
                        Coefficient::Integer(v) => v.to_string(),
                        Coefficient::Text(s) => s.clone(),
                    };
                    Rational::parse(&text).map_err(|_| {
                        Error::Parse(format!("row {row}, column {col}: {text:?} is not a rational"))
                    })
                })?;
                Ok(LoadedSpace::Rational(FormSpace::from_independent_rows(Some(()), self.j, rows)?))
            }
            FieldSpec::Prime { prime } => {
                let p = u32::try_from(prime).map_err(|_| Error::NotPrime(prime))?;
                let m = Modulus::new(p)?;
                let rows = self.rows(|row, col, c| {
                    let v: i128 = match c {
                        Coefficient::Integer(v) => i128::from(*v),
                        Coefficient::Text(s) => s.trim().parse().map_err(|_| {
                            Error::Parse(format!("row {row}, column {col}: {s:?} is not an integer"))
                        })?,
                    };
                    Ok(Fp::new(m, v.rem_euclid(i128::from(p)) as u64))
                })?;
                Ok(LoadedSpace::Prime(FormSpace::from_independent_rows(Some(m), self.j, rows)?))
            }
        }
    }

    fn rows<T>(&self, parse: impl Fn(usize, usize, &Coefficient) -> Result<T>) -> Result<Vec<Vec<T>>> {
        if self.forms.is_empty() {
            return Err(Error::InvalidDimension { j: self.j, d: 0 });
        }
        self.forms
            .iter()
            .enumerate()
            .map(|(r, row)| {
                if row.len() != self.j + 1 {
                    return Err(Error::RowLength {
                        row: r,
                        expected: self.j + 1,
                        found: row.len(),
                    });
                }
                row.iter().enumerate().map(|(c, x)| parse(r, c, x)).collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_fields() {
        let doc: FormSpaceDocument = serde_json::from_str(
            r#"{"field": "rational", "j": 2, "forms": [[1, "1/2", 0], [0, 0, "-3"]]}"#,
        )
        .unwrap();
        assert!(matches!(doc.load().unwrap(), LoadedSpace::Rational(v) if v.dim() == 2));
        let doc: FormSpaceDocument =
            serde_json::from_str(r#"{"field": {"prime": 7}, "j": 1, "forms": [[1, -1]]}"#).unwrap();
        let LoadedSpace::Prime(v) = doc.load().unwrap() else { panic!() };
        assert_eq!(v.forms()[0].coeffs()[1].value(), 6);
    }

    #[test]
    fn reports_offending_rows() {
        let doc: FormSpaceDocument = serde_json::from_str(
            r#"{"field": "rational", "j": 2, "forms": [[1, 0, 0], [0, 1, 0], [2, 2, 0]]}"#,
        )
        .unwrap();
        assert!(matches!(doc.load(), Err(Error::DependentRow { row: 2 })));
        let doc: FormSpaceDocument =
            serde_json::from_str(r#"{"field": "rational", "j": 2, "forms": [[1, 0]]}"#).unwrap();
        assert!(matches!(doc.load(), Err(Error::RowLength { row: 0, .. })));
        let doc: FormSpaceDocument =
            serde_json::from_str(r#"{"field": {"prime": 8}, "j": 1, "forms": [[1, 0]]}"#).unwrap();
        assert!(matches!(doc.load(), Err(Error::NotPrime(8))));
    }
}
