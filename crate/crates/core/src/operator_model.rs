//! A finite-dimensional operator realization of the two-state embedding.
//!
//! Given Hermitian matrices `a_1, ..., a_k` on a `d`-dimensional space `H`
//! and a unit vector `xi_0`, the model lives on `C (+) H^(+k)`. Each
//! variable is `y_j = w_j + x_j + w_j*`, where `x_j` acts as `a_j` on
//! every copy of `H` and kills the distinguished line, and `w_j` sends the
//! distinguished vector to `xi_0` sitting in the `j`-th copy. The vacuum
//! moments of the `y_j` reproduce, in floating point, the exact moments of
//! the two-state embedding of the joint distribution of the `a_j` in the
//! state `xi_0`; [`phi_model_check`] performs that comparison against the
//! exact rational pipeline.

use crate::distributions::phi_eta;
use crate::series::{all_words, Rational, TruncatedSeries, Word};
use ndarray::{Array1, Array2};
use num::complex::Complex64;
use num::{Complex, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Largest Hermitian defect `max |a[i,j] - conj(a[j,i])|` accepted.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Largest deviation of the state vector's norm from 1 accepted.
pub const STATE_TOL: f64 = 1e-12;
/// Base of the tolerance used when comparing the floating-point model
/// against the exact pipeline: a moment passes when the difference is at
/// most `max(MODEL_MOMENT_TOL, MODEL_MOMENT_TOL * |expected|)`.
pub const MODEL_MOMENT_TOL: f64 = 1e-9;

/// Errors rejecting malformed model inputs.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("the model needs at least one matrix")]
    NoMatrices,
    #[error("the state vector must have dimension >= 1")]
    EmptyState,
    #[error("matrix {index} has shape {rows}x{cols}, expected {dim}x{dim}")]
    WrongShape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("matrix {index} is not Hermitian (defect {defect:.3e})")]
    NotHermitian { index: usize, defect: f64 },
    #[error("the state vector is not a unit vector (norm defect {defect:.3e})")]
    NotUnitState { defect: f64 },
}

/// Validated model data: `k` Hermitian `d x d` matrices and a unit state.
#[derive(Debug, Clone)]
pub struct ModelInput {
    dim: usize,
    matrices: Vec<Array2<Complex64>>,
    state: Array1<Complex64>,
}

impl ModelInput {
    /// Validates shapes, Hermitian symmetry within [`HERMITIAN_TOL`], and
    /// the state norm within [`STATE_TOL`].
    pub fn new(
        matrices: Vec<Array2<Complex64>>,
        state: Vec<Complex64>,
    ) -> Result<Self, ModelError> {
        if matrices.is_empty() {
            return Err(ModelError::NoMatrices);
        }
        if state.is_empty() {
            return Err(ModelError::EmptyState);
        }
        let dim = state.len();
        for (index, a) in matrices.iter().enumerate() {
            if a.nrows() != dim || a.ncols() != dim {
                return Err(ModelError::WrongShape {
                    index,
                    rows: a.nrows(),
                    cols: a.ncols(),
                    dim,
                });
            }
            let mut defect = 0.0f64;
            for i in 0..dim {
                for j in 0..dim {
                    defect = defect.max((a[[i, j]] - a[[j, i]].conj()).norm());
                }
            }
            if defect > HERMITIAN_TOL {
                return Err(ModelError::NotHermitian { index, defect });
            }
        }
        let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let defect = (norm - 1.0).abs();
        if defect > STATE_TOL {
            return Err(ModelError::NotUnitState { defect });
        }
        Ok(ModelInput {
            dim,
            matrices,
            state: Array1::from_vec(state),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Array2<Complex64>] {
        &self.matrices
    }

    pub fn state(&self) -> &Array1<Complex64> {
        &self.state
    }

    /// The joint moment `<a_{i_1} ... a_{i_n} xi_0, xi_0>` of the input
    /// matrices in the input state; 1 on the empty word.
    pub fn moment(&self, w: &Word) -> Complex64 {
        let mut v = self.state.clone();
        for &letter in w.letters().iter().rev() {
            assert!(
                letter >= 1 && (letter as usize) <= self.k(),
                "letter {letter} outside the model's alphabet 1..={}",
                self.k()
            );
            v = self.matrices[letter as usize - 1].dot(&v);
        }
        v.iter()
            .zip(self.state.iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    }
}

/// The assembled operators on `C (+) H^(+k)`. Index 0 is the
/// distinguished line; the `j`-th copy of `H` occupies the index block
/// `1 + (j-1) d .. 1 + j d`.
#[derive(Debug, Clone)]
pub struct OperatorModel {
    dim: usize,
    k: usize,
    creation: Vec<Array2<Complex64>>,
    position: Vec<Array2<Complex64>>,
    annihilation: Vec<Array2<Complex64>>,
    y: Vec<Array2<Complex64>>,
}

impl OperatorModel {
    pub fn build(input: &ModelInput) -> Self {
        let d = input.dim();
        let k = input.k();
        let total = 1 + k * d;
        let mut creation = Vec::with_capacity(k);
        let mut position = Vec::with_capacity(k);
        let mut annihilation = Vec::with_capacity(k);
        let mut y = Vec::with_capacity(k);
        for j in 0..k {
            let mut w = Array2::<Complex64>::zeros((total, total));
            for r in 0..d {
                w[[1 + j * d + r, 0]] = input.state()[r];
            }
            let mut x = Array2::<Complex64>::zeros((total, total));
            for b in 0..k {
                for r in 0..d {
                    for c in 0..d {
                        x[[1 + b * d + r, 1 + b * d + c]] = input.matrices()[j][[r, c]];
                    }
                }
            }
            let wstar = conjugate_transpose(&w);
            y.push(&(&w + &x) + &wstar);
            creation.push(w);
            position.push(x);
            annihilation.push(wstar);
        }
        OperatorModel {
            dim: total,
            k,
            creation,
            position,
            annihilation,
            y,
        }
    }

    /// Dimension of the ambient space `1 + k d`.
    pub fn total_dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The operator `w_j` (1-based `j`) sending the distinguished vector
    /// into the `j`-th copy of `H`.
    pub fn creation(&self, j: u16) -> &Array2<Complex64> {
        &self.creation[j as usize - 1]
    }

    /// The block-diagonal action of `a_j` (1-based `j`).
    pub fn position(&self, j: u16) -> &Array2<Complex64> {
        &self.position[j as usize - 1]
    }

    /// The adjoint of [`OperatorModel::creation`].
    pub fn annihilation(&self, j: u16) -> &Array2<Complex64> {
        &self.annihilation[j as usize - 1]
    }

    /// The variable `y_j = w_j + x_j + w_j*` (1-based `j`).
    pub fn variable(&self, j: u16) -> &Array2<Complex64> {
        &self.y[j as usize - 1]
    }

    /// The vacuum moment `<y_{i_1} ... y_{i_n} e_0, e_0>`.
    pub fn moment(&self, w: &Word) -> Complex64 {
        let mut v = Array1::<Complex64>::zeros(self.dim);
        v[0] = Complex64::new(1.0, 0.0);
        for &letter in w.letters().iter().rev() {
            assert!(
                letter >= 1 && (letter as usize) <= self.k,
                "letter {letter} outside the model's alphabet 1..={}",
                self.k
            );
            v = self.y[letter as usize - 1].dot(&v);
        }
        v[0]
    }

    /// All vacuum moments on words of length 1 through `degree`.
    pub fn moments(&self, degree: usize) -> FloatMoments {
        let coeffs = all_words(self.k, degree)
            .into_iter()
            .map(|w| {
                let m = self.moment(&w);
                (w, m)
            })
            .collect();
        FloatMoments {
            k: self.k,
            degree,
            coeffs,
        }
    }
}

fn conjugate_transpose(a: &Array2<Complex64>) -> Array2<Complex64> {
    a.t().mapv(|z| z.conj())
}

/// Floating-point moments indexed by words, the model-side counterpart of
/// a truncated moment series.
#[derive(Debug, Clone)]
pub struct FloatMoments {
    pub k: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<Word, Complex64>,
}

/// One failed floating-point comparison.
#[derive(Debug, Clone)]
pub struct FloatMismatch {
    pub label: String,
    pub got: Complex64,
    pub expected: Complex64,
    pub defect: f64,
}

/// Outcome of a floating-point verification pass.
#[derive(Debug, Clone)]
pub struct ModelReport {
    pub checks: usize,
    pub worst_defect: f64,
    pub failures: Vec<FloatMismatch>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, label: String, got: Complex64, expected: Complex64, tol: f64) {
        let defect = (got - expected).norm();
        self.checks += 1;
        self.worst_defect = self.worst_defect.max(defect);
        if defect > tol {
            self.failures.push(FloatMismatch {
                label,
                got,
                expected,
                defect,
            });
        }
    }

    fn new() -> Self {
        ModelReport {
            checks: 0,
            worst_defect: 0.0,
            failures: Vec::new(),
        }
    }
}

/// Checks the sandwich rule: for every pair of variable indices `i`, `i'`
/// and every word `u` of position operators with length up to
/// `max_inner`, the vector `w_i* x_{u} w_{i'} e_0` equals
/// `delta_{i,i'} nu(u) e_0`, where `nu` is the joint distribution of the
/// input matrices in the input state.
pub fn sandwich_check(input: &ModelInput, max_inner: usize, tol: f64) -> ModelReport {
    let model = OperatorModel::build(input);
    let k = input.k();
    let mut report = ModelReport::new();
    let mut inner_words: Vec<Word> = vec![Word::empty()];
    inner_words.extend(all_words(k, max_inner));
    for u in &inner_words {
        for i in 1..=k as u16 {
            for i2 in 1..=k as u16 {
                let mut v = Array1::<Complex64>::zeros(model.total_dim());
                v[0] = Complex64::new(1.0, 0.0);
                v = model.creation(i2).dot(&v);
                for &letter in u.letters().iter().rev() {
                    v = model.position(letter).dot(&v);
                }
                v = model.annihilation(i).dot(&v);
                let expected_scalar = if i == i2 {
                    input.moment(u)
                } else {
                    Complex64::zero()
                };
                // the result must be a multiple of e_0: check every
                // component, not just the first
                for (idx, &z) in v.iter().enumerate() {
                    let expected = if idx == 0 {
                        expected_scalar
                    } else {
                        Complex64::zero()
                    };
                    report.record(
                        format!("a{i} x[{u}] c{i2} component {idx}"),
                        z,
                        expected,
                        tol,
                    );
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FactorKind {
    Creation,
    Position,
    Annihilation,
}

/// Checks which products of creation, position, and annihilation
/// operators have non-vanishing vacuum expectation: exactly the patterns
/// that split, left to right, into segments
/// `annihilation(i) position* creation(i)` with equal outer indices, and
/// the expectation is then the product over segments of the input moments
/// of the position letters. Exhausts all `(3k)^n` patterns for each
/// length `n <= max_len`.
pub fn vanishing_check(input: &ModelInput, max_len: usize, tol: f64) -> ModelReport {
    let model = OperatorModel::build(input);
    let k = input.k() as u16;
    let kinds = [
        FactorKind::Creation,
        FactorKind::Position,
        FactorKind::Annihilation,
    ];
    let mut alphabet = Vec::new();
    for kind in kinds {
        for letter in 1..=k {
            alphabet.push((kind, letter));
        }
    }
    let mut report = ModelReport::new();
    for n in 1..=max_len {
        let mut indices = vec![0usize; n];
        loop {
            let pattern: Vec<(FactorKind, u16)> = indices.iter().map(|&i| alphabet[i]).collect();
            let got = vacuum_expectation(&model, &pattern);
            let expected = predicted_expectation(input, &pattern);
            report.record(pattern_label(&pattern), got, expected, tol);
            // odometer over the pattern alphabet
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                indices[pos - 1] += 1;
                if indices[pos - 1] < alphabet.len() {
                    break;
                }
                indices[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    report
}

fn vacuum_expectation(model: &OperatorModel, pattern: &[(FactorKind, u16)]) -> Complex64 {
    let mut v = Array1::<Complex64>::zeros(model.total_dim());
    v[0] = Complex64::new(1.0, 0.0);
    for &(kind, letter) in pattern.iter().rev() {
        let op = match kind {
            FactorKind::Creation => model.creation(letter),
            FactorKind::Position => model.position(letter),
            FactorKind::Annihilation => model.annihilation(letter),
        };
        v = op.dot(&v);
    }
    v[0]
}

fn predicted_expectation(input: &ModelInput, pattern: &[(FactorKind, u16)]) -> Complex64 {
    let mut value = Complex64::new(1.0, 0.0);
    let mut i = 0;
    while i < pattern.len() {
        let (kind, open) = pattern[i];
        if kind != FactorKind::Annihilation {
            return Complex64::zero();
        }
        i += 1;
        let mut inner = Vec::new();
        while i < pattern.len() && pattern[i].0 == FactorKind::Position {
            inner.push(pattern[i].1);
            i += 1;
        }
        if i == pattern.len() || pattern[i].0 != FactorKind::Creation {
            return Complex64::zero();
        }
        if pattern[i].1 != open {
            return Complex64::zero();
        }
        i += 1;
        value *= input.moment(&Word::new(inner));
    }
    value
}

fn pattern_label(pattern: &[(FactorKind, u16)]) -> String {
    pattern
        .iter()
        .map(|&(kind, letter)| {
            let tag = match kind {
                FactorKind::Creation => "c",
                FactorKind::Position => "x",
                FactorKind::Annihilation => "a",
            };
            format!("{tag}{letter}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compares every vacuum moment of the model, up to `degree >= 2`,
/// against the exact pipeline: the input moments are lifted to exact
/// complex rationals, pushed through the two-state embedding on the
/// Boolean cumulant side, and converted back to moments. A moment passes
/// when the difference is within
/// `max(MODEL_MOMENT_TOL, MODEL_MOMENT_TOL * |expected|)`.
pub fn phi_model_check(input: &ModelInput, degree: usize) -> ModelReport {
    phi_model_check_with_tol(input, degree, MODEL_MOMENT_TOL)
}

/// [`phi_model_check`] with a caller-chosen tolerance base.
pub fn phi_model_check_with_tol(input: &ModelInput, degree: usize, tol: f64) -> ModelReport {
    assert!(
        degree >= 2,
        "the embedding raises the degree by 2, so the comparison degree must be >= 2"
    );
    let model = OperatorModel::build(input);
    let float_moments = model.moments(degree);
    let k = input.k();
    let inner_degree = degree - 2;
    let entries = all_words(k, inner_degree).into_iter().map(|w| {
        let z = input.moment(&w);
        (w, exact_complex(z))
    });
    let nu = TruncatedSeries::<Complex<Rational>>::from_coeffs(k, inner_degree, entries)
        .expect("enumerated words are valid");
    let exact_moments = phi_eta(&nu).boolean_to_moments();
    let mut report = ModelReport::new();
    for (w, &got) in &float_moments.coeffs {
        let exact = exact_moments.coefficient(w).expect("word within degree");
        let expected = Complex64::new(
            exact.re.to_f64().expect("moment fits in a float"),
            exact.im.to_f64().expect("moment fits in a float"),
        );
        report.record(w.to_string(), got, expected, tol * expected.norm().max(1.0));
    }
    report
}

fn exact_complex(z: Complex64) -> Complex<Rational> {
    Complex::new(
        Rational::from_float(z.re).expect("model moments are finite"),
        Rational::from_float(z.im).expect("model moments are finite"),
    )
}
