//! MDS codes from rows of a Fourier matrix taken in arithmetic sequence.
//!
//! Choosing rows `e_b, e_{b+k}, …, e_{b+(r−1)k}` (indices mod n) with
//! `gcd(n, k) = 1` gives an (n, r, n−r+1) code. The check matrix uses the
//! columns `f_j` of F_n^* for the complementary indices, and the right
//! inverse uses the selected ones scaled by n^{-1}.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fieldsearch;
use crate::fourier::FourierCtx;
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct CodeSpec {
    ctx: FourierCtx,
    r: usize,
    start: usize,
    step: usize,
    selected: Vec<usize>,
    /// Context with root ω^k; the (b, k) code normalizes onto its first r rows.
    reference: FourierCtx,
}

impl CodeSpec {
    pub fn new(ctx: FourierCtx, r: usize, start: usize, step: usize) -> Result<Self> {
        let n = ctx.len();
        if r == 0 || r > n {
            return Err(Error::DimensionOutOfRange { r, n });
        }
        if fieldsearch::gcd(n as u64, step as u64) != 1 {
            return Err(Error::InvalidStep {
                n: n as u64,
                k: step as u64,
            });
        }
        let start = start % n;
        let step = step % n;
        let selected = (0..r).map(|j| (start + j * step) % n).collect();
        let reference = ctx.with_power(step)?;
        Ok(CodeSpec {
            ctx,
            r,
            start,
            step,
            selected,
            reference,
        })
    }

    /// The consecutive-row code `⟨e_0, …, e_{r−1}⟩`.
    pub fn consecutive(ctx: FourierCtx, r: usize) -> Result<Self> {
        CodeSpec::new(ctx, r, 0, 1)
    }

    #[inline]
    pub fn ctx(&self) -> &FourierCtx {
        &self.ctx
    }

    #[inline]
    pub fn reference(&self) -> &FourierCtx {
        &self.reference
    }

    #[inline]
    pub fn field(&self) -> &Field {
        self.ctx.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ctx.len()
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.start
    }

    #[inline]
    pub fn step(&self) -> usize {
        self.step
    }

    /// Minimum distance n − r + 1.
    #[inline]
    pub fn d(&self) -> usize {
        self.n() - self.r + 1
    }

    /// Error-correcting capability ⌊(n − r)/2⌋.
    #[inline]
    pub fn t(&self) -> usize {
        (self.n() - self.r) / 2
    }

    /// Generator row indices in selection order.
    pub fn selected_rows(&self) -> &[usize] {
        &self.selected
    }

    /// Indices j of the check columns `f_j`, in the order they appear in H^T.
    ///
    /// The consecutive code uses `f_{n−1}, …, f_r`, i.e. `e_1^T, …, e_{n−r}^T`;
    /// every other code lists the complement in ascending order.
    pub fn check_indices(&self) -> Vec<usize> {
        let n = self.n();
        let mut chosen = vec![false; n];
        for &i in &self.selected {
            chosen[i] = true;
        }
        let mut rest: Vec<usize> = (0..n).filter(|&j| !chosen[j]).collect();
        if self.start == 0 && self.step == 1 % n {
            rest.reverse();
        }
        rest
    }

    /// The r×n generator matrix G.
    pub fn generator_matrix(&self) -> Matrix {
        let rows = self.selected.iter().map(|&i| self.ctx.row(i)).collect();
        Matrix::from_rows(rows).expect("rows share length n")
    }

    /// The n×(n−r) matrix H^T with G·H^T = 0.
    pub fn check_matrix_t(&self) -> Matrix {
        let cols = self.check_indices();
        Matrix::from_fn(self.n(), cols.len(), |m, j| {
            let i = (self.n() - cols[j]) % self.n();
            self.ctx.entry(i, m)
        })
    }

    /// The n×r right inverse K with G·K = I_r: columns `f_{b+jk}·n^{-1}`.
    pub fn right_inverse(&self) -> Matrix {
        let n = self.n();
        let f = self.field();
        let n_inv = self.ctx.n_inv();
        Matrix::from_fn(n, self.r, |m, j| {
            let i = (n - self.selected[j]) % n;
            f.mul(self.ctx.entry(i, m), n_inv)
        })
    }

    /// Serializes the code as the line-oriented descriptor.
    pub fn to_descriptor(&self) -> String {
        let f = self.field();
        let mut out = String::new();
        let _ = writeln!(out, "p={}", f.characteristic());
        let _ = writeln!(out, "beta={}", f.degree());
        if f.degree() > 1 {
            let m: Vec<String> = f.modulus().iter().map(u64::to_string).collect();
            let _ = writeln!(out, "modulus={}", m.join(","));
        }
        let _ = writeln!(out, "omega={}", self.ctx.omega());
        let _ = writeln!(out, "n={}", self.n());
        let _ = writeln!(out, "r={}", self.r);
        let _ = writeln!(out, "start={}", self.start);
        let _ = writeln!(out, "step={}", self.step);
        out
    }

    pub fn from_descriptor(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
            entries.push((lineno + 1, key.trim().to_string(), value.trim().to_string()));
        }
        let mut iter = entries.into_iter().peekable();
        let mut take = |expected: &str| -> Result<(usize, String)> {
            match iter.next() {
                Some((line, key, value)) if key == expected => Ok((line, value)),
                Some((line, key, _)) => Err(Error::Parse(format!(
                    "line {line}: unexpected key '{key}', expected '{expected}'"
                ))),
                None => Err(Error::Parse(format!("missing key '{expected}'"))),
            }
        };
        fn number(line: usize, key: &str, value: &str) -> Result<u64> {
            value
                .parse()
                .map_err(|_| Error::Parse(format!("line {line}: invalid {key} '{value}'")))
        }
        let (l, v) = take("p")?;
        let p = number(l, "p", &v)?;
        let (l, v) = take("beta")?;
        let beta = number(l, "beta", &v)?;
        let modulus = if beta > 1 {
            let (l, v) = take("modulus")?;
            v.split(',')
                .map(|c| number(l, "modulus", c.trim()))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let (l, v) = take("omega")?;
        let omega = number(l, "omega", &v)?;
        let (l, v) = take("n")?;
        let n = number(l, "n", &v)? as usize;
        let (l, v) = take("r")?;
        let r = number(l, "r", &v)? as usize;
        let (l, v) = take("start")?;
        let start = number(l, "start", &v)? as usize;
        let (l, v) = take("step")?;
        let step = number(l, "step", &v)? as usize;
        if let Some((line, key, _)) = iter.next() {
            return Err(Error::Parse(format!("line {line}: unknown key '{key}'")));
        }
        if beta > 1 && modulus.len() as u64 != beta + 1 {
            return Err(Error::Parse(format!(
                "modulus has {} coefficients, expected {}",
                modulus.len(),
                beta + 1
            )));
        }
        let field = if beta == 1 {
            Field::prime(p)?
        } else {
            Field::with_modulus(p, &modulus)?
        };
        let omega = field.from_int(omega)?;
        let ctx = FourierCtx::new(field, n, omega)?;
        CodeSpec::new(ctx, r, start, step)
    }
}

/// Generator built from rows of a Vandermonde matrix, with the result of the
/// MDS condition check.
#[derive(Debug, Clone)]
pub struct VandermondeCode {
    pub generator: Matrix,
    /// True when no ratio `x_i / x_j` (i ≠ j) is a k-th root of unity.
    pub condition_holds: bool,
}

/// Rows `0, k, 2k, …, (r−1)k` of V(x_1, …, x_n), whose row m is `(x_j^m)`.
pub fn vandermonde_code(field: &Field, xs: &[Fe], r: usize, k: usize) -> Result<VandermondeCode> {
    let n = xs.len();
    for &x in xs {
        field.check(x)?;
    }
    let mut sorted = xs.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != n || xs.iter().any(|x| x.is_zero()) {
        return Err(Error::InvalidEvaluationPoints);
    }
    if r == 0 || r > n {
        return Err(Error::DimensionOutOfRange { r, n });
    }
    if k == 0 || (r - 1) * k >= n {
        return Err(Error::InvalidArgument(format!(
            "rows 0..={} with step {k} exceed the {n} rows of V",
            (r - 1) * k
        )));
    }
    let generator = Matrix::from_fn(r, n, |i, j| field.pow(xs[j], (i * k) as u64));
    let mut condition_holds = true;
    'outer: for i in 0..n {
        for j in 0..n {
            if i != j {
                let ratio = field.div(xs[i], xs[j])?;
                if field.pow(ratio, k as u64) == field.one() {
                    condition_holds = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(VandermondeCode {
        generator,
        condition_holds,
    })
}
