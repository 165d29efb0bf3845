//! Encoding and Hankel-kernel decoding.
//!
//! Decoding runs on the normalized word `w'[m] = w[m]·ω^{−b·m}`, which turns
//! the (b, k) code into the consecutive-row code of the context with root
//! ω' = ω^k. The steps are:
//!
//! 1. syndrome `s_j = Σ_m w'[m]·ω'^{j·m}`, j = 1..n−r;
//! 2. a non-zero kernel vector x of the Hankel matrix with rows
//!    `(s_{i+1}, …, s_{i+t+1})`;
//! 3. the locator `a[m] = Σ_j x_j·ω'^{j·m}`, whose zeros are candidate positions;
//! 4. magnitudes from the Vandermonde system on those positions, checked
//!    against every syndrome equation;
//! 5. the error vector is denormalized, subtracted, and the data word read
//!    off through the right inverse.

use crate::error::{Error, FailureStage, Result};
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;
use crate::mdscode::CodeSpec;

/// Syndrome of a received word: n − r values, zero exactly on codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome(Vec<Fe>);

impl Syndrome {
    pub fn values(&self) -> &[Fe] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

impl From<Vec<Fe>> for Syndrome {
    fn from(v: Vec<Fe>) -> Self {
        Syndrome(v)
    }
}

/// A successfully decoded word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Vec<Fe>,
    pub error_vector: Vec<Fe>,
    /// Sorted 0-based positions of the non-zero entries of `error_vector`.
    pub positions: Vec<usize>,
    pub data: Vec<Fe>,
}

/// Intermediate values of one decode, filled in as far as the decoder got.
#[derive(Debug, Clone, Default)]
pub struct DecodeTrace {
    pub syndrome: Vec<Fe>,
    pub hankel: Option<Matrix>,
    pub kernel: Option<Vec<Fe>>,
    pub locator: Option<Vec<Fe>>,
    pub candidates: Vec<usize>,
    pub magnitudes: Vec<(usize, Fe)>,
}

fn check_word(code: &CodeSpec, w: &[Fe], expected: usize) -> Result<()> {
    if w.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            actual: w.len(),
        });
    }
    let field = code.field();
    for &x in w {
        field.check(x)?;
    }
    Ok(())
}

/// `u·G` for a data word of length r.
pub fn encode(code: &CodeSpec, u: &[Fe]) -> Result<Vec<Fe>> {
    check_word(code, u, code.r())?;
    let f = code.field();
    let ctx = code.ctx();
    let mut c = vec![f.zero(); code.n()];
    for (&row, &coef) in code.selected_rows().iter().zip(u) {
        if coef.is_zero() {
            continue;
        }
        for (m, cm) in c.iter_mut().enumerate() {
            *cm = f.add(*cm, f.mul(coef, ctx.entry(row, m)));
        }
    }
    Ok(c)
}

fn scale_positions(code: &CodeSpec, w: &[Fe], inverse: bool) -> Vec<Fe> {
    let b = code.start();
    if b == 0 {
        return w.to_vec();
    }
    let f = code.field();
    let ctx = code.ctx();
    w.iter()
        .enumerate()
        .map(|(m, &x)| {
            let e = b * m;
            let factor = if inverse {
                ctx.omega_pow_neg(e)
            } else {
                ctx.omega_pow(e)
            };
            f.mul(x, factor)
        })
        .collect()
}

/// `w'[m] = w[m]·ω^{−b·m}`.
pub fn normalize(code: &CodeSpec, w: &[Fe]) -> Vec<Fe> {
    scale_positions(code, w, true)
}

/// `w[m] = w'[m]·ω^{b·m}`.
pub fn denormalize(code: &CodeSpec, w: &[Fe]) -> Vec<Fe> {
    scale_positions(code, w, false)
}

fn syndrome_of_normalized(code: &CodeSpec, wn: &[Fe]) -> Syndrome {
    let f = code.field();
    let reference = code.reference();
    let n = code.n();
    let values = (1..=n - code.r())
        .map(|j| {
            wn.iter().enumerate().fold(f.zero(), |acc, (m, &x)| {
                if x.is_zero() {
                    acc
                } else {
                    f.add(acc, f.mul(x, reference.entry(j, m)))
                }
            })
        })
        .collect();
    Syndrome(values)
}

pub fn syndrome(code: &CodeSpec, w: &[Fe]) -> Result<Syndrome> {
    check_word(code, w, code.n())?;
    Ok(syndrome_of_normalized(code, &normalize(code, w)))
}

/// The (len − t)×(t+1) Hankel matrix with rows `(s_{i+1}, …, s_{i+t+1})`.
pub fn hankel_matrix(s: &Syndrome, t: usize) -> Matrix {
    let rows = s.len().saturating_sub(t);
    Matrix::from_fn(rows, t + 1, |i, j| s.0[i + j])
}

/// A non-zero kernel vector of the Hankel matrix, scaled so its first
/// non-zero entry is 1.
pub fn hankel_kernel(field: &Field, s: &Syndrome, t: usize) -> Result<Vec<Fe>> {
    if s.len() < 2 * t || s.len() <= t {
        return Err(Error::InvalidArgument(format!(
            "syndrome of length {} is too short for t = {t}",
            s.len()
        )));
    }
    let mut x = hankel_matrix(s, t)
        .null_vector(field)
        .ok_or(Error::TooManyErrors {
            stage: FailureStage::Kernel,
        })?;
    let lead = *x.iter().find(|v| !v.is_zero()).expect("kernel vector is non-zero");
    let scale = field.inv(lead)?;
    for v in &mut x {
        *v = field.mul(*v, scale);
    }
    Ok(x)
}

/// `a[m] = Σ_{j=1..} x_j·ω'^{j·m}`.
pub fn locator(code: &CodeSpec, x: &[Fe]) -> Vec<Fe> {
    let f = code.field();
    let reference = code.reference();
    (0..code.n())
        .map(|m| {
            x.iter().enumerate().fold(f.zero(), |acc, (j, &xj)| {
                f.add(acc, f.mul(xj, reference.entry(j + 1, m)))
            })
        })
        .collect()
}

/// Zero positions of the locator built from `x`.
pub fn locate(code: &CodeSpec, x: &[Fe]) -> Result<Vec<usize>> {
    let positions: Vec<usize> = locator(code, x)
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_zero())
        .map(|(m, _)| m)
        .collect();
    if positions.is_empty() {
        return Err(Error::TooManyErrors {
            stage: FailureStage::Locator,
        });
    }
    Ok(positions)
}

/// Normalized error values at the candidate positions, with zero values
/// (spurious locator roots) dropped.
pub fn magnitudes(code: &CodeSpec, s: &Syndrome, positions: &[usize]) -> Result<Vec<(usize, Fe)>> {
    let f = code.field();
    let reference = code.reference();
    let count = positions.len();
    if count == 0 {
        return if s.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::TooManyErrors {
                stage: FailureStage::Magnitudes,
            })
        };
    }
    if count > s.len() {
        return Err(Error::TooManyErrors {
            stage: FailureStage::Magnitudes,
        });
    }
    let coeff = |j: usize, i: usize| reference.entry(j + 1, positions[i]);
    let system = Matrix::from_fn(count, count, coeff);
    let y = system
        .solve(f, &s.0[..count])
        .ok_or(Error::TooManyErrors {
            stage: FailureStage::Magnitudes,
        })?;
    for j in count..s.len() {
        let lhs = (0..count).fold(f.zero(), |acc, i| f.add(acc, f.mul(coeff(j, i), y[i])));
        if lhs != s.0[j] {
            return Err(Error::TooManyErrors {
                stage: FailureStage::Magnitudes,
            });
        }
    }
    Ok(positions
        .iter()
        .zip(y)
        .filter(|(_, v)| !v.is_zero())
        .map(|(&m, v)| (m, v))
        .collect())
}

/// Data word `c·K` of a codeword.
pub fn extract_data(code: &CodeSpec, c: &[Fe]) -> Result<Vec<Fe>> {
    check_word(code, c, code.n())?;
    let f = code.field();
    let ctx = code.ctx();
    let n_inv = ctx.n_inv();
    Ok(code
        .selected_rows()
        .iter()
        .map(|&row| {
            let acc = c.iter().enumerate().fold(f.zero(), |acc, (m, &x)| {
                if x.is_zero() {
                    acc
                } else {
                    f.add(acc, f.mul(x, ctx.omega_pow_neg(row * m)))
                }
            });
            f.mul(acc, n_inv)
        })
        .collect())
}

pub fn decode(code: &CodeSpec, w: &[Fe]) -> Result<Decoded> {
    decode_traced(code, w, &mut DecodeTrace::default())
}

/// Decodes `w`, recording intermediate values in `trace`.
pub fn decode_traced(code: &CodeSpec, w: &[Fe], trace: &mut DecodeTrace) -> Result<Decoded> {
    check_word(code, w, code.n())?;
    let f = code.field();
    let n = code.n();
    let t = code.t();
    let s = syndrome_of_normalized(code, &normalize(code, w));
    trace.syndrome = s.0.clone();

    if s.is_zero() {
        return Ok(Decoded {
            codeword: w.to_vec(),
            error_vector: vec![f.zero(); n],
            positions: Vec::new(),
            data: extract_data(code, w)?,
        });
    }

    trace.hankel = Some(hankel_matrix(&s, t));
    let x = hankel_kernel(f, &s, t)?;
    trace.kernel = Some(x.clone());
    trace.locator = Some(locator(code, &x));
    let candidates = locate(code, &x)?;
    trace.candidates = candidates.clone();
    let found = magnitudes(code, &s, &candidates)?;
    trace.magnitudes = found.clone();

    let mut normalized_errors = vec![f.zero(); n];
    for &(m, v) in &found {
        normalized_errors[m] = v;
    }
    let error_vector = denormalize(code, &normalized_errors);
    let codeword: Vec<Fe> = w
        .iter()
        .zip(&error_vector)
        .map(|(&a, &e)| f.sub(a, e))
        .collect();
    if !syndrome_of_normalized(code, &normalize(code, &codeword)).is_zero() {
        return Err(Error::TooManyErrors {
            stage: FailureStage::FinalSyndrome,
        });
    }
    let data = extract_data(code, &codeword)?;
    Ok(Decoded {
        positions: found.iter().map(|&(m, _)| m).collect(),
        codeword,
        error_vector,
        data,
    })
}
