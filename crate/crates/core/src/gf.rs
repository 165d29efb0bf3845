//! Exact arithmetic in GF(p) and GF(p^β).
//!
//! Elements are stored in canonical integer form: the polynomial-basis
//! coefficient vector `(c_0, …, c_{β-1})` maps to `Σ c_i·p^i`. Prime fields use
//! the residue directly; extension fields decode to coefficients, multiply
//! and reduce modulo the field's monic irreducible modulus.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldsearch;

/// Largest supported field order. Keeps extension characteristic below 2^31
/// so coefficient products fit in a `u64`.
pub const MAX_ORDER: u64 = 1 << 62;

const MAX_DEGREE: usize = 62;

/// Budget for the number of trial divisors tried when testing irreducibility.
const IRREDUCIBILITY_BUDGET: u64 = 50_000_000;

/// A field element in canonical integer form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Canonical integer `Σ c_i·p^i`.
    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) const fn raw(v: u64) -> Fe {
        Fe(v)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^β) together with its modulus and a primitive element.
#[derive(Debug, Clone)]
pub struct Field {
    p: u64,
    beta: u32,
    order: u64,
    /// Ascending coefficients of the monic modulus, `beta + 1` entries; empty for prime fields.
    modulus: Vec<u64>,
    primitive: Fe,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.beta == other.beta && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.beta == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.beta)
        }
    }
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Arc<Field>> {
        Field::new(p, 1)
    }

    /// GF(p^β) with the lexicographically smallest monic irreducible modulus
    /// (coefficient vectors compared from the constant term upwards).
    pub fn new(p: u64, beta: u32) -> Result<Arc<Field>> {
        check_parameters(p, beta)?;
        if beta == 1 {
            return Field::assemble(p, 1, Vec::new());
        }
        let modulus = smallest_irreducible(p, beta)?;
        Field::assemble(p, beta, modulus)
    }

    /// GF(p^β) for an explicit modulus given as ascending coefficients
    /// (including the leading 1). An empty modulus or `[c, 1]` gives a prime field.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Arc<Field>> {
        if modulus.len() <= 2 {
            if modulus.len() == 2 && modulus[1] != 1 {
                return Err(Error::ReducibleModulus { p, degree: 1 });
            }
            check_parameters(p, 1)?;
            return Field::assemble(p, 1, Vec::new());
        }
        let beta = (modulus.len() - 1) as u32;
        check_parameters(p, beta)?;
        if modulus.iter().any(|&c| c >= p) || !is_irreducible(p, modulus)? {
            return Err(Error::ReducibleModulus { p, degree: beta });
        }
        Field::assemble(p, beta, modulus.to_vec())
    }

    fn assemble(p: u64, beta: u32, modulus: Vec<u64>) -> Result<Arc<Field>> {
        let order = p.pow(beta);
        let mut field = Field {
            p,
            beta,
            order,
            modulus,
            primitive: Fe::ONE,
        };
        field.primitive = fieldsearch::primitive_element(&field);
        Ok(Arc::new(field))
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.beta
    }

    /// Number of elements, p^β.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The smallest element (in canonical order) generating the multiplicative group.
    #[inline]
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.beta == 1
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    pub fn from_int(&self, v: u64) -> Result<Fe> {
        if v >= self.order {
            return Err(Error::OutOfRange {
                value: v,
                order: self.order,
            });
        }
        Ok(Fe(v))
    }

    /// Converts a slice of canonical integers, failing on the first out-of-range value.
    pub fn elems(&self, values: &[u64]) -> Result<Vec<Fe>> {
        values.iter().map(|&v| self.from_int(v)).collect()
    }

    #[inline]
    pub fn to_int(&self, a: Fe) -> u64 {
        a.0
    }

    /// Checks that `a` is a valid element of this field.
    pub fn check(&self, a: Fe) -> Result<Fe> {
        self.from_int(a.0)
    }

    /// Embeds an integer through the prime subfield (n·1).
    pub fn from_integer(&self, n: u64) -> Fe {
        Fe(n % self.p)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let mut out = vec![0; self.beta as usize];
        self.digits(a.0, &mut out);
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() != self.beta as usize {
            return Err(Error::LengthMismatch {
                expected: self.beta as usize,
                actual: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::OutOfRange {
                value: c,
                order: self.p,
            });
        }
        Ok(Fe(self.undigits(coeffs)))
    }

    #[inline]
    fn digits(&self, mut v: u64, out: &mut [u64]) {
        for d in out.iter_mut().take(self.beta as usize) {
            *d = v % self.p;
            v /= self.p;
        }
    }

    #[inline]
    fn undigits(&self, d: &[u64]) -> u64 {
        d[..self.beta as usize]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        if self.beta == 1 {
            let s = a.0 + b.0;
            Fe(if s >= self.p { s - self.p } else { s })
        } else if self.p == 2 {
            Fe(a.0 ^ b.0)
        } else {
            let (mut x, mut y) = (a.0, b.0);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.beta {
                let s = (x % self.p + y % self.p) % self.p;
                out += s * place;
                place *= self.p;
                x /= self.p;
                y /= self.p;
            }
            Fe(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        debug_assert!(a.0 < self.order);
        if self.beta == 1 {
            Fe(if a.0 == 0 { 0 } else { self.p - a.0 })
        } else if self.p == 2 {
            a
        } else {
            let mut x = a.0;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.beta {
                let c = x % self.p;
                if c != 0 {
                    out += (self.p - c) * place;
                }
                place *= self.p;
                x /= self.p;
            }
            Fe(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        if self.beta == 1 {
            Fe(fieldsearch::mul_mod(a.0, b.0, self.p))
        } else {
            self.mul_poly(a, b)
        }
    }

    fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let beta = self.beta as usize;
        let p = self.p;
        let mut da = [0u64; MAX_DEGREE];
        let mut db = [0u64; MAX_DEGREE];
        let mut prod = [0u64; 2 * MAX_DEGREE];
        self.digits(a.0, &mut da);
        self.digits(b.0, &mut db);
        for i in 0..beta {
            if da[i] == 0 {
                continue;
            }
            for j in 0..beta {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (beta..2 * beta - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            let shift = deg - beta;
            let neg_c = p - c;
            for k in 0..beta {
                prod[shift + k] = (prod[shift + k] + neg_c * self.modulus[k]) % p;
            }
            prod[deg] = 0;
        }
        Fe(self.undigits(&prod))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.beta == 1 {
            return Ok(Fe(inv_mod(a.0, self.p)));
        }
        let f = self.modulus.clone();
        let g = trim(self.coeffs(a));
        let (r, s) = poly_ext_gcd(self.p, f, g);
        // r is a non-zero constant because the modulus is irreducible
        let scale = inv_mod(r[0], self.p);
        let mut out = vec![0; self.beta as usize];
        for (o, c) in out.iter_mut().zip(s.iter()) {
            *o = fieldsearch::mul_mod(*c, scale, self.p);
        }
        Ok(Fe(self.undigits(&out)))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        if self.beta == 1 {
            return Fe(fieldsearch::pow_mod(a.0, e, self.p));
        }
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; negative exponents go through the inverse.
    pub fn powi(&self, a: Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Dot product of two equal-length slices.
    pub fn dot(&self, a: &[Fe], b: &[Fe]) -> Fe {
        a.iter()
            .zip(b)
            .fold(Fe::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Errors unless both fields are the same.
    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Iterates all elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }
}

fn check_parameters(p: u64, beta: u32) -> Result<()> {
    if !fieldsearch::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if beta == 0 || beta as usize > MAX_DEGREE {
        return Err(Error::InvalidField(format!("extension degree {beta}")));
    }
    match p.checked_pow(beta) {
        Some(q) if q < MAX_ORDER => Ok(()),
        _ => Err(Error::InvalidField(format!(
            "GF({p}^{beta}) exceeds the supported order 2^62"
        ))),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    fieldsearch::pow_mod(a, p - 2, p)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub_scaled(p: u64, a: &mut Vec<u64>, b: &[u64], scale: u64, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        let t = fieldsearch::mul_mod(c, scale, p);
        a[i + shift] = (a[i + shift] + p - t) % p;
    }
}

/// Quotient and remainder of `a / b`, `b` non-zero and trimmed.
fn poly_divmod(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0; rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = fieldsearch::mul_mod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = c;
        poly_sub_scaled(p, &mut rem, b, c, shift);
        rem = trim(rem);
    }
    (quot, rem)
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fieldsearch::mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Returns `(gcd, s)` with `s·g ≡ gcd (mod f)`.
fn poly_ext_gcd(p: u64, f: Vec<u64>, g: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (trim(f), g);
    let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, rem) = poly_divmod(p, &r0, &r1);
        let mut next = s0.clone();
        let qs = poly_mul(p, &q, &s1);
        poly_sub_scaled(p, &mut next, &qs, 1, 0);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, trim(next));
    }
    (r0, s0)
}

/// Trial-division irreducibility test for a monic polynomial of degree ≥ 1
/// given as ascending coefficients.
pub fn is_irreducible(p: u64, modulus: &[u64]) -> Result<bool> {
    let poly = trim(modulus.to_vec());
    if poly.len() < 2 || *poly.last().unwrap() != 1 {
        return Ok(false);
    }
    let degree = poly.len() - 1;
    if degree == 1 {
        return Ok(true);
    }
    if poly[0] == 0 {
        return Ok(false);
    }
    let max_divisor = degree / 2;
    let budget: u64 = (1..=max_divisor as u32)
        .map(|d| p.saturating_pow(d))
        .fold(0u64, |a, b| a.saturating_add(b));
    if budget > IRREDUCIBILITY_BUDGET {
        return Err(Error::GuardExceeded(format!(
            "irreducibility test over GF({p}) of degree {degree}"
        )));
    }
    // roots first: cheap and rejects most candidates
    for x in 0..p {
        let value = poly
            .iter()
            .rev()
            .fold(0, |acc, &c| (fieldsearch::mul_mod(acc, x, p) + c) % p);
        if value == 0 {
            return Ok(false);
        }
    }
    for d in 2..=max_divisor {
        let count = p.pow(d as u32);
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        for idx in 0..count {
            let mut v = idx;
            for c in divisor.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            if divisor[0] == 0 {
                continue;
            }
            let (_, rem) = poly_divmod(p, &poly, &divisor);
            if rem.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The monic irreducible polynomial of degree `beta` over GF(p) whose
/// coefficient vector `(c_0, …, c_{β-1}, 1)` is lexicographically smallest.
pub fn smallest_irreducible(p: u64, beta: u32) -> Result<Vec<u64>> {
    let beta = beta as usize;
    let count = p.pow(beta as u32);
    let mut poly = vec![0u64; beta + 1];
    poly[beta] = 1;
    for idx in 0..count {
        // most significant digit of idx is c_0
        let mut v = idx;
        for i in (0..beta).rev() {
            poly[i] = v % p;
            v /= p;
        }
        if poly[0] == 0 {
            continue;
        }
        if is_irreducible(p, &poly)? {
            return Ok(poly);
        }
    }
    Err(Error::InvalidField(format!(
        "no irreducible polynomial of degree {beta} over GF({p})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_examples() {
        let f = Field::prime(13).unwrap();
        assert_eq!(f.add(Fe(8), Fe(9)), Fe(4));
        assert_eq!(f.add(Fe(5), f.zero()), Fe(5));
        assert_eq!(f.mul(Fe(12), Fe(12)), Fe(1));
        assert_eq!(f.pow(Fe(2), 12), Fe(1));
        for i in 1..12 {
            assert_ne!(f.pow(Fe(2), i), Fe(1));
        }
        assert_eq!(f.inv(Fe(7)).unwrap(), Fe(2));
        assert_eq!(f.powi(Fe(2), -1).unwrap(), Fe(7));
        assert_eq!(f.inv(Fe(0)), Err(Error::DivisionByZero));
        assert_eq!(f.sub(Fe(3), Fe(5)), Fe(11));
        assert_eq!(f.neg(Fe(0)), Fe(0));
    }

    #[test]
    fn binary_extension_with_explicit_modulus() {
        // x^3 + x + 1
        let f = Field::with_modulus(2, &[1, 1, 0, 1]).unwrap();
        let x_plus_1 = f.from_coeffs(&[1, 1, 0]).unwrap();
        let x = f.from_coeffs(&[0, 1, 0]).unwrap();
        assert_eq!(f.add(x_plus_1, x), f.one());
        // x * x^2 = x^3 = x + 1
        let x2 = f.from_coeffs(&[0, 0, 1]).unwrap();
        assert_eq!(f.mul(x, x2), x_plus_1);
        assert_eq!(f.to_int(f.from_coeffs(&[1, 0, 1]).unwrap()), 5);
    }

    #[test]
    fn positional_encoding() {
        let f = Field::new(5, 2).unwrap();
        let a = f.from_coeffs(&[3, 2]).unwrap();
        assert_eq!(a.value(), 13);
        assert_eq!(f.coeffs(Fe(13)), vec![3, 2]);
        assert_eq!(f.from_int(25), Err(Error::OutOfRange { value: 25, order: 25 }));
        let g = Field::prime(13).unwrap();
        assert_eq!(g.from_int(7).unwrap().value(), 7);
    }

    #[test]
    fn default_modulus_is_lexicographically_smallest() {
        // low-degree-first: (1,0,1,1) < (1,1,0,1)
        assert_eq!(smallest_irreducible(2, 3).unwrap(), vec![1, 0, 1, 1]);
        assert_eq!(smallest_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        // x^2 + 1 splits over GF(5) (2^2 = -1); x^2 + x + 1 has discriminant 2, a non-square
        assert_eq!(smallest_irreducible(5, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert!(matches!(
            Field::with_modulus(2, &[1, 0, 0, 1]),
            Err(Error::ReducibleModulus { .. })
        ));
        // (x^2 + x + 1)^2 has no roots but a quadratic factor
        assert!(matches!(
            Field::with_modulus(2, &[1, 0, 1, 0, 1]),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(Field::new(12, 1), Err(Error::NotPrime(12))));
        assert!(Field::new(2, 70).is_err());
    }

    #[test]
    fn extension_inverse_and_order() {
        let f = Field::new(3, 3).unwrap();
        for a in f.elements().skip(1) {
            let ai = f.inv(a).unwrap();
            assert_eq!(f.mul(a, ai), f.one());
            assert_eq!(f.pow(a, f.order() - 1), f.one());
        }
    }

    #[test]
    fn field_mismatch_detected() {
        let a = Field::prime(13).unwrap();
        let b = Field::prime(11).unwrap();
        assert_eq!(a.ensure_same(&b), Err(Error::FieldMismatch));
        assert!(a.ensure_same(&Field::prime(13).unwrap()).is_ok());
        assert!(b.check(Fe(12)).is_err());
    }
}
