//! The n×n Fourier matrix F_n over a finite field and its companion F_n^*.
//!
//! Row `e_i` of F_n has entries `ω^{i·m}`; column `f_i` of F_n^* is the
//! transpose of row `e_{n−i}`, so that `F_n·F_n^* = n·I`. Only the n powers of
//! ω are stored; matrix entries are looked up as `ω^{(i·m) mod n}`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldsearch;
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct FourierCtx {
    field: Arc<Field>,
    n: usize,
    omega: Fe,
    powers: Vec<Fe>,
    n_inv: Fe,
}

impl FourierCtx {
    /// Context for a given root; `omega` must have exact order `n`.
    pub fn new(field: Arc<Field>, n: usize, omega: Fe) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("length must be positive".into()));
        }
        let p = field.characteristic();
        if (n as u64).is_multiple_of(p) {
            return Err(Error::CharacteristicDividesLength { p, n: n as u64 });
        }
        field.check(omega)?;
        if !fieldsearch::has_exact_order(&field, omega, n as u64) {
            return Err(Error::NotPrimitiveRoot { n: n as u64 });
        }
        let mut powers = Vec::with_capacity(n);
        let mut acc = field.one();
        for _ in 0..n {
            powers.push(acc);
            acc = field.mul(acc, omega);
        }
        let n_inv = field.inv(field.from_integer(n as u64))?;
        Ok(FourierCtx {
            field,
            n,
            omega,
            powers,
            n_inv,
        })
    }

    /// Context using the canonical root δ^((q−1)/n) of the field.
    pub fn with_default_root(field: Arc<Field>, n: usize) -> Result<Self> {
        let omega = fieldsearch::nth_root(&field, n as u64)?;
        FourierCtx::new(field, n, omega)
    }

    /// The same field and length with root ω^k (`gcd(n, k) = 1`).
    pub fn with_power(&self, k: usize) -> Result<Self> {
        if fieldsearch::gcd(self.n as u64, k as u64) != 1 {
            return Err(Error::InvalidStep {
                n: self.n as u64,
                k: k as u64,
            });
        }
        FourierCtx::new(self.field.clone(), self.n, self.omega_pow(k))
    }

    #[inline]
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn omega(&self) -> Fe {
        self.omega
    }

    /// n^{-1} in the field.
    #[inline]
    pub fn n_inv(&self) -> Fe {
        self.n_inv
    }

    /// ω^e with the exponent reduced mod n.
    #[inline]
    pub fn omega_pow(&self, e: usize) -> Fe {
        self.powers[e % self.n]
    }

    /// ω^{-e}.
    #[inline]
    pub fn omega_pow_neg(&self, e: usize) -> Fe {
        let r = e % self.n;
        self.powers[if r == 0 { 0 } else { self.n - r }]
    }

    /// Entry (i, m) of F_n.
    #[inline]
    pub fn entry(&self, i: usize, m: usize) -> Fe {
        self.powers[((i % self.n) * (m % self.n)) % self.n]
    }

    /// Row `e_i` of F_n (index taken mod n).
    pub fn row(&self, i: usize) -> Vec<Fe> {
        (0..self.n).map(|m| self.entry(i, m)).collect()
    }

    /// Column `f_i` of F_n^*, equal to `e_{(n−i) mod n}`.
    pub fn inv_col(&self, i: usize) -> Vec<Fe> {
        self.row((self.n - i % self.n) % self.n)
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.n, |i, m| self.entry(i, m))
    }

    /// F_n^*, the matrix whose columns are `f_0, …, f_{n−1}`.
    pub fn star_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.n, |m, i| self.inv_col(i)[m])
    }

    /// `v·F_n`.
    pub fn apply(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        self.check_len(v)?;
        Ok(self.transform(v, false, Fe::ONE))
    }

    /// `v·F_n^*·n^{-1}`, the inverse of [`FourierCtx::apply`].
    pub fn apply_inv(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        self.check_len(v)?;
        Ok(self.transform(v, true, self.n_inv))
    }

    fn check_len(&self, v: &[Fe]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: v.len(),
            });
        }
        Ok(())
    }

    fn transform(&self, v: &[Fe], inverse: bool, scale: Fe) -> Vec<Fe> {
        let f = &self.field;
        let n = self.n;
        (0..n)
            .map(|m| {
                let mut acc = f.zero();
                let mut idx = 0;
                for &x in v {
                    if !x.is_zero() {
                        let w = if inverse && idx != 0 {
                            self.powers[n - idx]
                        } else {
                            self.powers[idx]
                        };
                        acc = f.add(acc, f.mul(x, w));
                    }
                    idx += m;
                    if idx >= n {
                        idx -= n;
                    }
                }
                f.mul(acc, scale)
            })
            .collect()
    }
}
