#![allow(dead_code)]

use fourier_mds::fieldsearch::{self, gcd};
use fourier_mds::{codec, CodeSpec, Fe, Field, FourierCtx};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prime_code(p: u64, n: usize, r: usize) -> CodeSpec {
    let ctx = FourierCtx::with_default_root(Field::prime(p).unwrap(), n).unwrap();
    CodeSpec::consecutive(ctx, r).unwrap()
}

pub fn random_word(rng: &mut TestRng, field: &Field, len: usize) -> Vec<Fe> {
    (0..len)
        .map(|_| field.from_int(rng.gen_range(0..field.order())).unwrap())
        .collect()
}

pub fn random_nonzero(rng: &mut TestRng, field: &Field) -> Fe {
    field.from_int(rng.gen_range(1..field.order())).unwrap()
}

/// Adds `weight` non-zero errors at distinct random positions; returns the
/// corrupted word and the sorted positions.
pub fn corrupt(rng: &mut TestRng, field: &Field, c: &[Fe], weight: usize) -> (Vec<Fe>, Vec<usize>) {
    let mut w = c.to_vec();
    let mut positions = sample(rng, c.len(), weight).into_vec();
    positions.sort_unstable();
    for &m in &positions {
        w[m] = field.add(w[m], random_nonzero(rng, field));
    }
    (w, positions)
}

/// A random code: length 2..=max_n, a small field of random characteristic,
/// random r, start row b and step k coprime to n.
pub fn random_code(rng: &mut TestRng, max_n: usize) -> CodeSpec {
    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        if (n as u64).is_multiple_of(p) {
            continue;
        }
        let beta = fieldsearch::minimal_degree(n as u64, p).unwrap();
        if beta > 6 || (p as f64).powi(beta as i32) > 1e6 {
            continue;
        }
        let field = Field::new(p, beta).unwrap();
        let ctx = FourierCtx::with_default_root(field, n).unwrap();
        let r = rng.gen_range(1..n);
        let b = rng.gen_range(0..n);
        let k = loop {
            let k = rng.gen_range(1..=n);
            if gcd(n as u64, k as u64) == 1 {
                break k;
            }
        };
        return CodeSpec::new(ctx, r, b, k).unwrap();
    }
}

pub fn random_codeword(rng: &mut TestRng, code: &CodeSpec) -> (Vec<Fe>, Vec<Fe>) {
    let u = random_word(rng, code.field(), code.r());
    let c = codec::encode(code, &u).unwrap();
    (u, c)
}
