//! JSON formats for matrices, polynomials, and reports.
//!
//! Matrix:
//!
//! ```json
//! { "rows": 2, "cols": 2,
//!   "entries": [[[1, 1, 0, 0], [0, 0, 0, 0]],
//!               [[0, 0, 0, 0], [1, 0]]] }
//! ```
//!
//! Each entry is a quaternion `[a0, a1, a2, a3]` or a complex number
//! `[re, im]`. Every row must have exactly `cols` entries.
//!
//! Polynomial:
//!
//! ```json
//! { "size": 2, "degree": 1, "coefficients": [ <matrix>, <matrix> ] }
//! ```
//!
//! Coefficients are listed in ascending degree, `A_0` first. Both objects
//! accept an optional `"description"` string.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::QMatrixPolynomial;
use crate::qmat::QMatrix;
use crate::quat::Quaternion;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub size: usize,
    pub degree: usize,
    pub coefficients: Vec<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Matrix(QMatrix),
    Polynomial(QMatrixPolynomial),
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<QMatrix> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Parse("rows and cols must be positive".into()));
        }
        if self.entries.len() != self.rows {
            return Err(Error::Parse(format!("expected {} rows, found {}", self.rows, self.entries.len())));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(Error::Parse(format!("row {} has {} entries, expected {}", i + 1, row.len(), self.cols)));
            }
            for (j, e) in row.iter().enumerate() {
                let q = match *e.as_slice() {
                    [re, im] => Quaternion::new(re, im, 0.0, 0.0),
                    [a0, a1, a2, a3] => Quaternion::new(a0, a1, a2, a3),
                    _ => {
                        return Err(Error::Parse(format!(
                            "entry ({}, {}) has {} components, expected 2 or 4",
                            i + 1,
                            j + 1,
                            e.len()
                        )))
                    }
                };
                data.push(q);
            }
        }
        QMatrix::from_vec(self.rows, self.cols, data)
    }

    /// Quaternion entries are written as 4-arrays.
    pub fn from_matrix(a: &QMatrix) -> Self {
        let entries = (0..a.rows())
            .map(|i| (0..a.cols()).map(|j| <[f64; 4]>::from(a[(i, j)]).to_vec()).collect())
            .collect();
        MatrixFile { rows: a.rows(), cols: a.cols(), entries, description: None }
    }
}

impl PolynomialFile {
    pub fn to_polynomial(&self) -> Result<QMatrixPolynomial> {
        if self.coefficients.len() != self.degree + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients, found {}",
                self.degree,
                self.degree + 1,
                self.coefficients.len()
            )));
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len());
        for (i, c) in self.coefficients.iter().enumerate() {
            let m = c.to_matrix().map_err(|e| Error::Parse(format!("coefficient A{i}: {e}")))?;
            if m.rows() != self.size || m.cols() != self.size {
                return Err(Error::Parse(format!(
                    "coefficient A{i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.size,
                    self.size
                )));
            }
            coefficients.push(m);
        }
        QMatrixPolynomial::new(coefficients).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_polynomial(p: &QMatrixPolynomial) -> Self {
        PolynomialFile {
            size: p.size(),
            degree: p.degree(),
            coefficients: p.coefficients().iter().map(MatrixFile::from_matrix).collect(),
            description: None,
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<QMatrix> {
    from_json::<MatrixFile>(text)?.to_matrix()
}

pub fn parse_polynomial(text: &str) -> Result<QMatrixPolynomial> {
    from_json::<PolynomialFile>(text)?.to_polynomial()
}

/// Parses either format, telling them apart by the `coefficients` key.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: serde_json::Value = from_json(text)?;
    if value.get("coefficients").is_some() {
        parse_polynomial(text).map(Input::Polynomial)
    } else {
        parse_matrix(text).map(Input::Matrix)
    }
}

pub fn read_input(path: &std::path::Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn matrix_to_json(a: &QMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(a)).expect("matrix serializes")
}

pub fn polynomial_to_json(p: &QMatrixPolynomial) -> String {
    serde_json::to_string_pretty(&PolynomialFile::from_polynomial(p)).expect("polynomial serializes")
}

/// Single-line JSON with full float precision.
pub fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

pub fn parse_report<T: DeserializeOwned>(text: &str) -> Result<T> {
    from_json(text)
}
