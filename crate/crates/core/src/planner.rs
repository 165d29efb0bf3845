//! Turning rate and error-capability requirements into code parameters.
//!
//! All rate arithmetic is exact; `Rate` is a reduced fraction.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fieldsearch;

pub type Rate = Ratio<u64>;

fn check_rate(rate: Rate) -> Result<()> {
    if *rate.numer() == 0 || rate >= Rate::from_integer(1) {
        return Err(Error::RateOutOfRange(rate.to_string()));
    }
    Ok(())
}

/// Least n with n·(1 − R) ≥ 2t.
pub fn min_length(rate: Rate, t: u64) -> Result<u64> {
    check_rate(rate)?;
    let (a, b) = (*rate.numer(), *rate.denom());
    // n·(b − a)/b ≥ 2t  ⇔  n ≥ 2t·b/(b − a)
    Ok((2 * t * b).div_ceil(b - a))
}

/// Concrete code parameters meeting a requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub rate: Rate,
    pub t: u64,
    /// Least length satisfying n·(1 − R) ≥ 2t.
    pub min_length: u64,
    pub n: u64,
    pub r: u64,
    pub d: u64,
    /// Set when `n` was moved off `min_length` because the characteristic divides it.
    pub adjusted: bool,
}

impl Plan {
    pub fn achieved_rate(&self) -> Rate {
        Rate::new(self.r, self.n)
    }
}

/// Plans an (n, n − 2t, 2t + 1) code of rate at least close to `rate`.
///
/// With a characteristic `p` that divides the minimal length, the nearest
/// length not divisible by `p` is used instead (the smaller one on a tie),
/// keeping the error capability t and letting the rate move slightly.
pub fn plan(rate: Rate, t: u64, p: Option<u64>) -> Result<Plan> {
    if t == 0 {
        return Err(Error::InvalidArgument("error capability must be at least 1".into()));
    }
    let min_len = min_length(rate, t)?;
    let mut n = min_len;
    let mut adjusted = false;
    if let Some(p) = p {
        if !fieldsearch::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n % p == 0 {
            adjusted = true;
            n = (1..)
                .flat_map(|delta| [min_len - delta.min(min_len), min_len + delta])
                .find(|&m| m > 2 * t && m % p != 0)
                .expect("lengths not divisible by p exist");
        }
    }
    let r = n - 2 * t;
    Ok(Plan {
        rate,
        t,
        min_length: min_len,
        n,
        r,
        d: n - r + 1,
        adjusted,
    })
}

/// One code of a series: parameters plus the smallest field degree over the
/// series characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEntry {
    pub n: u64,
    pub r: u64,
    pub d: u64,
    pub p: u64,
    pub beta: u32,
}

impl SeriesEntry {
    /// Builds the field GF(p^β) for this entry.
    pub fn field(&self) -> Result<std::sync::Arc<crate::gf::Field>> {
        fieldsearch::find_field(self.n, self.p)
    }

    pub fn field_name(&self) -> String {
        if self.beta == 1 {
            format!("GF({})", self.p)
        } else {
            format!("GF({}^{})", self.p, self.beta)
        }
    }
}

/// (i·n, i·r, i·(n − r) + 1) for the first `count` multipliers i with p ∤ i·n.
pub fn series_multiples(n: u64, r: u64, p: u64, count: usize) -> Result<Vec<SeriesEntry>> {
    if !fieldsearch::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesLength { p, n });
    }
    if r == 0 || r >= n {
        return Err(Error::DimensionOutOfRange {
            r: r as usize,
            n: n as usize,
        });
    }
    (1u64..)
        .filter(|i| !(i * n).is_multiple_of(p))
        .take(count)
        .map(|i| {
            let ni = i * n;
            Ok(SeriesEntry {
                n: ni,
                r: i * r,
                d: i * (n - r) + 1,
                p,
                beta: fieldsearch::minimal_degree(ni, p)?,
            })
        })
        .collect()
}

/// The first fraction r'/n' with p ∤ n' and R ≤ r'/n' ≤ R + ε, scanning n'
/// upwards and taking r' = ⌈R·n'⌉.
pub fn approx_rate(rate: Rate, eps: Rate, p: u64) -> Result<Rate> {
    check_rate(rate)?;
    let upper = rate + eps;
    if *eps.numer() == 0 || upper >= Rate::from_integer(1) {
        return Err(Error::RateOutOfRange(upper.to_string()));
    }
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let found = (1u64..)
        .filter(|m| m % p != 0)
        .map(|m| Rate::new((rate * m).ceil().to_integer(), m))
        .find(|c| *c <= upper)
        .expect("a suitable fraction exists for every positive eps");
    Ok(found)
}

/// One code of a prime-field series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSeriesEntry {
    pub p: u64,
    pub n: u64,
    pub r: u64,
    pub d: u64,
}

/// (p − 1, ⌊(p − 1)·R⌋, (p − 1) − r + 1) over GF(p) for the first `count` primes.
pub fn prime_series(rate: Rate, primes: &[u64], count: usize) -> Result<Vec<PrimeSeriesEntry>> {
    check_rate(rate)?;
    let Some(&first) = primes.first() else {
        return Err(Error::InvalidArgument("no primes given".into()));
    };
    if (rate * (first - 1)).floor().to_integer() == 0 {
        return Err(Error::InvalidArgument(format!(
            "({first} - 1)·{rate} < 1: first prime too small"
        )));
    }
    primes
        .iter()
        .take(count)
        .map(|&p| {
            if !fieldsearch::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let n = p - 1;
            let r = (rate * n).floor().to_integer();
            if r == 0 {
                return Err(Error::InvalidArgument(format!("({p} - 1)·{rate} < 1")));
            }
            Ok(PrimeSeriesEntry { p, n, r, d: n - r + 1 })
        })
        .collect()
}

/// The first `count` primes ≥ `start` congruent to `residue` mod `modulus`.
pub fn primes_congruent(residue: u64, modulus: u64, start: u64, count: usize) -> Vec<u64> {
    (start.max(2)..)
        .filter(|&p| p % modulus == residue % modulus && fieldsearch::is_prime(p))
        .take(count)
        .collect()
}
