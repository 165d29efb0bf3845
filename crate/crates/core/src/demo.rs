//! The (12, 6, 7) code over GF(13) with ω = 2, decoded step by step.
//!
//! [`run`] records every intermediate quantity in a transcript and compares
//! it against the known values, stopping at the first difference.

use std::fmt::Write;

use crate::codec::{self, DecodeTrace};
use crate::error::Result;
use crate::fourier::FourierCtx;
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;
use crate::mdscode::CodeSpec;

const F12: [[u64; 12]; 12] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7],
    [1, 4, 3, 12, 9, 10, 1, 4, 3, 12, 9, 10],
    [1, 8, 12, 5, 1, 8, 12, 5, 1, 8, 12, 5],
    [1, 3, 9, 1, 3, 9, 1, 3, 9, 1, 3, 9],
    [1, 6, 10, 8, 9, 2, 12, 7, 3, 5, 4, 11],
    [1, 12, 1, 12, 1, 12, 1, 12, 1, 12, 1, 12],
    [1, 11, 4, 5, 3, 7, 12, 2, 9, 8, 10, 6],
    [1, 9, 3, 1, 9, 3, 1, 9, 3, 1, 9, 3],
    [1, 5, 12, 8, 1, 5, 12, 8, 1, 5, 12, 8],
    [1, 10, 9, 12, 3, 4, 1, 10, 9, 12, 3, 4],
    [1, 7, 10, 5, 9, 11, 12, 6, 3, 8, 4, 2],
];
const RECEIVED: [u64; 12] = [8, 9, 2, 6, 3, 3, 10, 8, 4, 1, 5, 7];
const SYNDROME: [u64; 6] = [2, 9, 12, 10, 11, 11];
const HANKEL: [[u64; 4]; 3] = [[2, 9, 12, 10], [9, 12, 10, 11], [12, 10, 11, 11]];
const KERNEL: [u64; 4] = [7, 1, 7, 1];
const LOCATOR: [u64; 12] = [3, 12, 7, 0, 1, 0, 1, 2, 4, 0, 10, 12];
const POSITIONS: [usize; 3] = [3, 5, 9];
const SYSTEM: [[u64; 3]; 6] = [[8, 6, 5], [12, 10, 12], [5, 8, 8], [1, 9, 1], [8, 2, 5], [12, 12, 12]];
const MAGNITUDES: [u64; 3] = [10, 1, 4];
const ERROR_VECTOR: [u64; 12] = [0, 0, 0, 10, 0, 1, 0, 0, 0, 4, 0, 0];
const CODEWORD: [u64; 12] = [8, 9, 2, 9, 3, 2, 10, 8, 4, 10, 5, 7];
const DATA: [u64; 6] = [1, 2, 3, 4, 5, 6];

/// Transcript of a demo run and the first quantity that differed, if any.
#[derive(Debug, Clone)]
pub struct DemoReport {
    pub transcript: String,
    pub mismatch: Option<String>,
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn line(v: &[Fe]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.value().to_string()).collect();
    parts.join(" ")
}

fn ints(v: &[Fe]) -> Vec<u64> {
    v.iter().map(|x| x.value()).collect()
}

fn matrix_ints(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|i| ints(m.row(i))).collect()
}

struct Checker {
    out: String,
    mismatch: Option<String>,
}

impl Checker {
    fn check<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        if self.mismatch.is_none() && got != want {
            self.mismatch = Some(format!("{name}: got {got:?}, expected {want:?}"));
        }
    }

    fn vector(&mut self, name: &str, v: &[Fe], want: &[u64]) {
        let _ = writeln!(self.out, "{name} = {}", line(v));
        self.check(name, ints(v), want.to_vec());
    }

    fn matrix(&mut self, name: &str, m: &Matrix, want: Vec<Vec<u64>>) {
        let _ = writeln!(self.out, "{name} =");
        for i in 0..m.rows() {
            let _ = writeln!(self.out, "  {}", line(m.row(i)));
        }
        self.check(name, matrix_ints(m), want);
    }
}

/// Runs the worked decoding example.
pub fn run() -> Result<DemoReport> {
    let field = Field::prime(13)?;
    let omega = field.from_int(2)?;
    let ctx = FourierCtx::new(field.clone(), 12, omega)?;
    let code = CodeSpec::consecutive(ctx.clone(), 6)?;
    let mut c = Checker {
        out: String::new(),
        mismatch: None,
    };
    let _ = writeln!(
        c.out,
        "code: (n, r, d) = ({}, {}, {}) over {field}, omega = {omega}, t = {}",
        code.n(),
        code.r(),
        code.d(),
        code.t()
    );
    c.matrix("F_12", &ctx.matrix(), F12.iter().map(|r| r.to_vec()).collect());

    let w = field.elems(&RECEIVED)?;
    c.vector("w", &w, &RECEIVED);

    let mut trace = DecodeTrace::default();
    let outcome = codec::decode_traced(&code, &w, &mut trace);
    c.vector("s", &trace.syndrome, &SYNDROME);

    let hankel = trace.hankel.clone().unwrap_or_else(|| Matrix::zeros(0, 0));
    c.matrix("H", &hankel, HANKEL.iter().map(|r| r.to_vec()).collect());

    // rescale the kernel vector so its last entry is 1
    let kernel = trace.kernel.clone().unwrap_or_default();
    let x = match kernel.last() {
        Some(&last) if !last.is_zero() => {
            let k = field.inv(last)?;
            kernel.iter().map(|&v| field.mul(v, k)).collect()
        }
        _ => kernel,
    };
    c.vector("x", &x, &KERNEL);
    c.vector("a", &codec::locator(&code, &x), &LOCATOR);
    let _ = writeln!(c.out, "positions = {:?}", trace.candidates);
    c.check("positions", trace.candidates.clone(), POSITIONS.to_vec());

    let system = Matrix::from_fn(6, trace.candidates.len(), |j, i| {
        code.reference().entry(j + 1, trace.candidates[i])
    });
    c.matrix("V", &system, SYSTEM.iter().map(|r| r.to_vec()).collect());
    let mags: Vec<Fe> = trace.magnitudes.iter().map(|&(_, v)| v).collect();
    c.vector("magnitudes", &mags, &MAGNITUDES);

    match outcome {
        Ok(decoded) => {
            c.vector("k", &decoded.error_vector, &ERROR_VECTOR);
            c.vector("c", &decoded.codeword, &CODEWORD);
            c.vector("data", &decoded.data, &DATA);
        }
        Err(e) => {
            let _ = writeln!(c.out, "decode failed: {e}");
            c.check("decode", Some(e.to_string()), None);
        }
    }
    let _ = writeln!(
        c.out,
        "{}",
        match &c.mismatch {
            None => "all values match".to_string(),
            Some(m) => format!("MISMATCH {m}"),
        }
    );
    Ok(DemoReport {
        transcript: c.out,
        mismatch: c.mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_passes() {
        let report = run().unwrap();
        assert!(report.passed(), "{}", report.transcript);
        assert!(report.transcript.contains("a = 3 12 7 0 1 0 1 2 4 0 10 12"));
        assert!(report.transcript.contains("data = 1 2 3 4 5 6"));
        assert!(report.transcript.contains("x = 7 1 7 1"));
    }

    #[test]
    fn fourier_table_is_generated_by_powers_of_two() {
        // independent of FourierCtx: entry (i, m) = 2^{i·m} mod 13
        for (i, row) in F12.iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                let mut acc = 1u64;
                for _ in 0..i * m {
                    acc = acc * 2 % 13;
                }
                assert_eq!(v, acc);
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let mut c = Checker {
            out: String::new(),
            mismatch: None,
        };
        c.check("s", vec![1u64], vec![2u64]);
        c.check("x", vec![3u64], vec![4u64]);
        assert_eq!(c.mismatch.as_deref(), Some("s: got [1], expected [2]"));
    }
}
