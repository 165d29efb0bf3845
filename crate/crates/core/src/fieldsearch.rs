//! Multiplicative orders, totients and the search for a field of given
//! characteristic that holds a primitive n-th root of unity.
//!
//! GF(p^β) contains a primitive n-th root exactly when n divides p^β − 1, so
//! the smallest such field has β = ord_n(p). Factorizations are by trial
//! division, which is plenty for desk-scale lengths and field orders.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if m <= u32::MAX as u64 {
        (a * b) % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization `[(prime, exponent)]` in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Least β ≥ 1 with a^β ≡ 1 (mod m).
pub fn order_mod(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NoOrder { a, m });
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd(a % m, m) != 1 {
        return Err(Error::NoOrder { a, m });
    }
    let mut order = euler_phi(m);
    for (q, _) in factorize(order) {
        while order.is_multiple_of(q) && pow_mod(a, order / q, m) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Smallest β such that GF(p^β) holds a primitive n-th root of unity.
pub fn minimal_degree(n: u64, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || n.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesLength { p, n });
    }
    let beta = order_mod(p, n)?;
    u32::try_from(beta).map_err(|_| Error::InvalidField(format!("degree {beta} too large")))
}

/// The smallest field of characteristic `p` containing a primitive n-th root of unity.
pub fn find_field(n: u64, p: u64) -> Result<Arc<Field>> {
    let beta = minimal_degree(n, p)?;
    Field::new(p, beta)
}

/// Multiplicative order of a non-zero element, given the distinct prime
/// divisors of the group order.
fn element_order(field: &Field, a: Fe, group_order: u64, primes: &[u64]) -> u64 {
    let mut order = group_order;
    for &q in primes {
        while order.is_multiple_of(q) && field.pow(a, order / q) == field.one() {
            order /= q;
        }
    }
    order
}

/// Multiplicative order of a non-zero element.
pub fn multiplicative_order(field: &Field, a: Fe) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let group = field.order() - 1;
    Ok(element_order(field, a, group, &prime_divisors(group)))
}

/// Smallest element in canonical order whose multiplicative order is p^β − 1.
/// Ignores whatever primitive element `field` already carries.
pub fn primitive_element(field: &Field) -> Fe {
    let group = field.order() - 1;
    let primes = prime_divisors(group);
    (1..field.order())
        .map(Fe::raw)
        .find(|&g| {
            primes
                .iter()
                .all(|&q| field.pow(g, group / q) != field.one())
        })
        .expect("the multiplicative group of a finite field is cyclic")
}

/// ω = δ^((p^β − 1)/n), an element of exact order n.
pub fn nth_root(field: &Field, n: u64) -> Result<Fe> {
    let p = field.characteristic();
    if n.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesLength { p, n });
    }
    let group = field.order() - 1;
    if n == 0 || !group.is_multiple_of(n) {
        return Err(Error::NoRoot {
            n,
            group_order: group,
        });
    }
    Ok(field.pow(field.primitive_element(), group / n))
}

/// True when `omega` has multiplicative order exactly `n`.
pub fn has_exact_order(field: &Field, omega: Fe, n: u64) -> bool {
    if omega.is_zero() || n == 0 || field.pow(omega, n) != field.one() {
        return false;
    }
    prime_divisors(n)
        .iter()
        .all(|&q| field.pow(omega, n / q) != field.one())
}
