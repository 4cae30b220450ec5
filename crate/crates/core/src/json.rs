//! JSON wire formats.
//!
//! Series and distributions travel as `{k, degree, coeffs}` objects whose
//! coefficients map comma-separated words to rational strings, so every
//! value round-trips exactly. A distribution read back in may declare a
//! `view` naming which series its coefficients are: plain `moments` (the
//! default), free cumulants `r`, or Boolean cumulants `eta`. On output
//! the `role` field always says `moments`. Operator-model inputs carry
//! complex entries as `[re, im]` pairs.

use crate::distributions::Distribution;
use crate::operator_model::{ModelError, ModelInput};
use crate::series::{Rational, Series, SeriesError, Word};
use ndarray::Array2;
use num::complex::Complex64;
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

/// Errors turning JSON documents into library values.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JsonError {
    #[error("cannot parse {input:?} as a rational; expected \"p/q\" or an integer")]
    MalformedRational { input: String },
    #[error("unknown view {view:?}; expected \"moments\", \"r\", or \"eta\"")]
    UnknownView { view: String },
    #[error("declared k = {declared} but found {found} matrices")]
    MatrixCountMismatch { declared: usize, found: usize },
    #[error("matrix {index} has {rows} rows, expected {dim}")]
    WrongMatrixRows {
        index: usize,
        rows: usize,
        dim: usize,
    },
    #[error("matrix {index} row {row} has {entries} entries, expected {dim}")]
    RaggedMatrixRow {
        index: usize,
        row: usize,
        entries: usize,
        dim: usize,
    },
    #[error("declared dim = {declared} but the state has {found} entries")]
    StateLengthMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A truncated series: words as `"1,2,1"` keys, coefficients as exact
/// rational strings. Zero coefficients are omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub k: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<String, String>,
}

/// A distribution. `role` marks outputs as moment series; `view` selects
/// how to read the coefficients of an input (`moments` when absent).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistributionJson {
    pub k: usize,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub view: Option<String>,
    pub coeffs: BTreeMap<String, String>,
}

/// Input data for the operator model; complex numbers are `[re, im]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelInputJson {
    pub dim: usize,
    pub k: usize,
    pub matrices: Vec<Vec<Vec<[f64; 2]>>>,
    pub state: Vec<[f64; 2]>,
}

/// Parses an exact rational from its wire form: `"p/q"` or a bare
/// integer. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational, JsonError> {
    let trimmed = s.trim();
    let bad = || JsonError::MalformedRational {
        input: s.to_string(),
    };
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

fn coeffs_to_json(series: &Series) -> BTreeMap<String, String> {
    series
        .iter()
        .map(|(w, c)| (w.to_string(), c.to_string()))
        .collect()
}

fn coeffs_from_json(
    k: usize,
    degree: usize,
    coeffs: &BTreeMap<String, String>,
) -> Result<Series, JsonError> {
    let mut entries = Vec::with_capacity(coeffs.len());
    for (word, value) in coeffs {
        entries.push((Word::from_str(word)?, parse_rational(value)?));
    }
    Ok(Series::from_coeffs(k, degree, entries)?)
}

pub fn series_to_json(series: &Series) -> SeriesJson {
    SeriesJson {
        k: series.k(),
        degree: series.degree(),
        coeffs: coeffs_to_json(series),
    }
}

pub fn series_from_json(json: &SeriesJson) -> Result<Series, JsonError> {
    coeffs_from_json(json.k, json.degree, &json.coeffs)
}

pub fn distribution_to_json(dist: &Distribution) -> DistributionJson {
    DistributionJson {
        k: dist.k(),
        degree: dist.degree(),
        role: Some("moments".to_string()),
        view: None,
        coeffs: coeffs_to_json(dist.moments()),
    }
}

pub fn distribution_from_json(json: &DistributionJson) -> Result<Distribution, JsonError> {
    let series = coeffs_from_json(json.k, json.degree, &json.coeffs)?;
    match json.view.as_deref() {
        None | Some("moments") => Ok(Distribution::from_moments(series)),
        Some("r") => Ok(Distribution::from_r(series)),
        Some("eta") => Ok(Distribution::from_eta(series)),
        Some(other) => Err(JsonError::UnknownView {
            view: other.to_string(),
        }),
    }
}

pub fn model_input_to_json(input: &ModelInput) -> ModelInputJson {
    let dim = input.dim();
    ModelInputJson {
        dim,
        k: input.k(),
        matrices: input
            .matrices()
            .iter()
            .map(|a| {
                (0..dim)
                    .map(|i| (0..dim).map(|j| [a[[i, j]].re, a[[i, j]].im]).collect())
                    .collect()
            })
            .collect(),
        state: input.state().iter().map(|z| [z.re, z.im]).collect(),
    }
}

pub fn model_input_from_json(json: &ModelInputJson) -> Result<ModelInput, JsonError> {
    if json.matrices.len() != json.k {
        return Err(JsonError::MatrixCountMismatch {
            declared: json.k,
            found: json.matrices.len(),
        });
    }
    if json.state.len() != json.dim {
        return Err(JsonError::StateLengthMismatch {
            declared: json.dim,
            found: json.state.len(),
        });
    }
    let dim = json.dim;
    let mut matrices = Vec::with_capacity(json.k);
    for (index, rows) in json.matrices.iter().enumerate() {
        if rows.len() != dim {
            return Err(JsonError::WrongMatrixRows {
                index,
                rows: rows.len(),
                dim,
            });
        }
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != dim {
                return Err(JsonError::RaggedMatrixRow {
                    index,
                    row,
                    entries: entries.len(),
                    dim,
                });
            }
        }
        matrices.push(Array2::from_shape_fn((dim, dim), |(i, j)| {
            Complex64::new(rows[i][j][0], rows[i][j][1])
        }));
    }
    let state = json
        .state
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    Ok(ModelInput::new(matrices, state)?)
}
