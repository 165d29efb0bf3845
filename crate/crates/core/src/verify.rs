//! Brute-force oracles: minimum distance, MDS check and nearest-codeword
//! decoding by exhaustive enumeration. These share no code with the decoder.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;
use crate::mdscode::CodeSpec;

/// Most messages enumerated by [`min_distance`].
pub const ENUMERATION_LIMIT: u64 = 10_000_000;
/// Most codewords tabulated by [`OracleDecoder`].
pub const ORACLE_LIMIT: u64 = 1_000_000;
/// Most column subsets examined by the rank-based distance search.
pub const SUBSET_LIMIT: u64 = 10_000_000;

pub fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn hamming_distance(a: &[Fe], b: &[Fe]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn message_count(field: &Field, r: usize, limit: u64) -> Option<u64> {
    let r = u32::try_from(r).ok()?;
    field.order().checked_pow(r).filter(|&c| c <= limit)
}

/// Visits every codeword `u·G` with messages in row-major canonical order
/// (last message symbol fastest), starting at the zero word.
fn for_each_codeword(field: &Field, g: &Matrix, mut visit: impl FnMut(&[Fe])) {
    let (r, n) = (g.rows(), g.cols());
    let q = field.order();
    let mut digits = vec![0u64; r];
    let mut word = vec![field.zero(); n];
    visit(&word);
    loop {
        // odometer increment from the last digit
        let mut j = r;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            let old = Fe::raw(digits[j]);
            digits[j] = (digits[j] + 1) % q;
            let delta = field.sub(Fe::raw(digits[j]), old);
            for (w, &gv) in word.iter_mut().zip(g.row(j)) {
                *w = field.add(*w, field.mul(delta, gv));
            }
            if digits[j] != 0 {
                break;
            }
        }
        visit(&word);
    }
}

/// Minimum distance of the code generated by the rows of `g` by enumerating all
/// q^r − 1 non-zero messages.
pub fn min_distance_by_enumeration(field: &Field, g: &Matrix) -> Result<usize> {
    if message_count(field, g.rows(), ENUMERATION_LIMIT).is_none() {
        return Err(Error::GuardExceeded(format!(
            "{}^{} messages",
            field.order(),
            g.rows()
        )));
    }
    let mut best = usize::MAX;
    let mut first = true;
    for_each_codeword(field, g, |w| {
        if first {
            first = false;
            return;
        }
        best = best.min(weight(w));
    });
    Ok(if best == usize::MAX { g.cols() } else { best })
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Minimum distance via column subsets: a non-zero codeword vanishing on a set
/// Z of columns exists exactly when G restricted to Z has rank below r, so
/// d = n − max{|Z| : rank(G_Z) < r}.
pub fn min_distance_by_rank(field: &Field, g: &Matrix) -> Result<usize> {
    let (r, n) = (g.rows(), g.cols());
    let total: u64 = (r..=n)
        .map(|s| binomial(n as u64, s as u64))
        .fold(0, u64::saturating_add);
    if total > SUBSET_LIMIT {
        return Err(Error::GuardExceeded(format!("{total} column subsets")));
    }
    for size in (r..=n).rev() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if g.select_columns(&subset).rank(field) < r {
                return Ok(n - size);
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(n + 1 - r)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact minimum distance: codeword enumeration when q^r is within
/// [`ENUMERATION_LIMIT`], otherwise exhaustive column-subset rank checks.
pub fn min_distance(field: &Field, g: &Matrix) -> Result<usize> {
    if message_count(field, g.rows(), ENUMERATION_LIMIT).is_some() {
        min_distance_by_enumeration(field, g)
    } else {
        min_distance_by_rank(field, g)
    }
}

pub fn is_mds(code: &CodeSpec) -> Result<bool> {
    Ok(min_distance(code.field(), &code.generator_matrix())? == code.d())
}

/// Codeword table, one row per codeword padded to `stride` symbols. Fields of
/// order at most 256 use byte symbols so rows compare in wide chunks.
enum Table {
    Bytes(Vec<u8>),
    Wide(Vec<u64>),
}

/// Nearest-codeword decoding against a table of every codeword.
pub struct OracleDecoder {
    n: usize,
    t: usize,
    order: u64,
    stride: usize,
    count: usize,
    table: Table,
}

/// Index of the unique row within distance t of `w`, scanning every row.
fn unique_close<T: Copy + Eq>(rows: &[T], stride: usize, w: &[T], t: usize) -> Option<Option<usize>> {
    let mut found = None;
    for (i, row) in rows.chunks_exact(stride).enumerate() {
        let mut mismatches = 0;
        for (a, b) in row.chunks_exact(16).zip(w.chunks_exact(16)) {
            mismatches += a.iter().zip(b).map(|(x, y)| usize::from(x != y)).sum::<usize>();
            if mismatches > t {
                break;
            }
        }
        if mismatches <= t {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    Some(found)
}

impl OracleDecoder {
    pub fn new(code: &CodeSpec) -> Result<Self> {
        let field = code.field();
        let count = message_count(field, code.r(), ORACLE_LIMIT).ok_or_else(|| {
            Error::GuardExceeded(format!("{}^{} codewords", field.order(), code.r()))
        })? as usize;
        let n = code.n();
        let stride = n.div_ceil(16) * 16;
        let g = code.generator_matrix();
        let mut wide = Vec::with_capacity(count * stride);
        for_each_codeword(field, &g, |w| {
            wide.extend(w.iter().map(|x| x.value()));
            wide.resize(wide.len() + stride - n, 0);
        });
        let table = if field.order() <= 256 {
            Table::Bytes(wide.iter().map(|&v| v as u8).collect())
        } else {
            Table::Wide(wide)
        };
        Ok(OracleDecoder {
            n,
            t: code.t(),
            order: field.order(),
            stride,
            count,
            table,
        })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    fn row(&self, i: usize) -> Vec<Fe> {
        let range = i * self.stride..i * self.stride + self.n;
        match &self.table {
            Table::Bytes(rows) => rows[range].iter().map(|&v| Fe::raw(v as u64)).collect(),
            Table::Wide(rows) => rows[range].iter().map(|&v| Fe::raw(v)).collect(),
        }
    }

    /// The unique codeword within distance t of `w`.
    pub fn decode(&self, w: &[Fe]) -> Result<Vec<Fe>> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: w.len(),
            });
        }
        if let Some(x) = w.iter().find(|x| x.value() >= self.order) {
            return Err(Error::OutOfRange {
                value: x.value(),
                order: self.order,
            });
        }
        let mut padded: Vec<u64> = w.iter().map(|x| x.value()).collect();
        padded.resize(self.stride, 0);
        let hit = match &self.table {
            Table::Bytes(rows) => {
                let bytes: Vec<u8> = padded.iter().map(|&v| v as u8).collect();
                unique_close(rows, self.stride, &bytes, self.t)
            }
            Table::Wide(rows) => unique_close(rows, self.stride, &padded, self.t),
        };
        match hit {
            Some(Some(i)) => Ok(self.row(i)),
            _ => Err(Error::Undecodable { t: self.t }),
        }
    }
}

/// One-shot exhaustive decode, streaming over all q^r codewords without a table.
/// Allows up to [`ENUMERATION_LIMIT`] codewords.
pub fn oracle_decode(code: &CodeSpec, w: &[Fe]) -> Result<Vec<Fe>> {
    let field = code.field();
    if w.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: w.len(),
        });
    }
    if message_count(field, code.r(), ENUMERATION_LIMIT).is_none() {
        return Err(Error::GuardExceeded(format!(
            "{}^{} codewords",
            field.order(),
            code.r()
        )));
    }
    let t = code.t();
    let mut found: Vec<Vec<Fe>> = Vec::new();
    for_each_codeword(field, &code.generator_matrix(), |c| {
        if found.len() < 2 && hamming_distance(c, w) <= t {
            found.push(c.to_vec());
        }
    });
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::Undecodable { t }),
    }
}
