//! Maximum-distance-separable codes built from Fourier matrices over finite
//! fields.
//!
//! A code is a choice of r rows `e_b, e_{b+k}, …` of the n×n Fourier matrix
//! over GF(p^β), with `gcd(n, k) = 1`. It corrects up to ⌊(n−r)/2⌋ symbol
//! errors by solving a small Hankel system built from the syndrome.
//!
//! ```
//! use fourier_mds::{codec, CodeSpec, Field, FourierCtx};
//!
//! let field = Field::prime(13).unwrap();
//! let ctx = FourierCtx::with_default_root(field.clone(), 12).unwrap();
//! let code = CodeSpec::consecutive(ctx, 6).unwrap();
//! let data = field.elems(&[1, 2, 3, 4, 5, 6]).unwrap();
//! let mut word = codec::encode(&code, &data).unwrap();
//! word[3] = field.add(word[3], field.one());
//! let out = codec::decode(&code, &word).unwrap();
//! assert_eq!(out.data, data);
//! assert_eq!(out.positions, vec![3]);
//! ```

pub mod cli;
pub mod codec;
pub mod demo;
pub mod error;
pub mod fieldsearch;
pub mod fourier;
pub mod gf;
pub mod matrix;
pub mod mdscode;
pub mod planner;
pub mod verify;

pub use codec::{DecodeTrace, Decoded, Syndrome};
pub use error::{Error, FailureStage, Result};
pub use fourier::FourierCtx;
pub use gf::{Fe, Field};
pub use matrix::Matrix;
pub use mdscode::{CodeSpec, VandermondeCode};
