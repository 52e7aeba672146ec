//! Dense linear algebra over F2.
//!
//! Vectors are packed into `u64` words; bit `k` lives in word `k / 64` at
//! position `k % 64`. Subspaces are kept in reduced row-echelon form so that
//! every coset has a canonical representative (the vector that vanishes on
//! all pivot columns).

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{check_budget, Error, Result};
use crate::scan::Word;

/// Exact rational used for every normalized quantity.
pub type Rational = Ratio<i64>;

/// `num / den` as a reduced rational. Panics when `den == 0`.
pub fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; word_count(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector { len, words: vec![u64::MAX; word_count(len)] };
        v.clear_padding();
        v
    }

    pub fn unit(len: usize, bit: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(bit, true);
        v
    }

    /// Builds a vector from the positions of its set bits.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for k in indices {
            v.flip(k);
        }
        v
    }

    /// Builds a vector from raw words; bits at or beyond `len` are dropped.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(word_count(len), 0);
        let mut v = BitVector { len, words };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, k: usize) -> bool {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        (self.words[k / WORD] >> (k % WORD)) & 1 == 1
    }

    pub fn set(&mut self, k: usize, value: bool) {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        let mask = 1u64 << (k % WORD);
        if value {
            self.words[k / WORD] |= mask;
        } else {
            self.words[k / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, k: usize) {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        self.words[k / WORD] ^= 1u64 << (k % WORD);
    }

    /// In-place addition over F2. Panics on a length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the common support, i.e. the F2 dot product.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot product of vectors with different lengths");
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones % 2 == 1
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Positions of the set bits, ascending.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones_iter().next()
    }
}

/// Lexicographic order on the bit string `b_0 b_1 ... b_{n-1}` with `0 < 1`;
/// vectors of different lengths order by length first.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    return a.reverse_bits().cmp(&b.reverse_bits());
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len {
            f.write_str(if self.get(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Parses a `0`/`1` string, bit 0 first.
impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = BitVector::zeros(s.len());
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(k, true),
                _ => {
                    return Err(Error::Parse { line: 0, message: format!("invalid bit character {c:?}") })
                }
            }
        }
        Ok(v)
    }
}

/// A matrix over F2 stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl F2Matrix {
    pub fn zeros(row_count: usize, cols: usize) -> Self {
        F2Matrix { cols, rows: vec![BitVector::zeros(cols); row_count] }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix { cols: n, rows: (0..n).map(|k| BitVector::unit(n, k)).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::mismatch(format!("row length {cols}"), format!("row length {}", bad.len())));
        }
        Ok(F2Matrix { cols, rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// `M · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::mismatch(format!("vector length {}", self.cols), format!("length {}", v.len())));
        }
        Ok(BitVector::from_indices(
            self.rows.len(),
            self.rows.iter().enumerate().filter(|(_, r)| r.dot(v)).map(|(k, _)| k),
        ))
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if other.rows.len() != self.cols {
            return Err(Error::mismatch(
                format!("{} rows", self.cols),
                format!("{} rows", other.rows.len()),
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.ones_iter() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(F2Matrix { cols: other.cols, rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }
}

/// A linear subspace of `F2^ambient_dim`, stored as a reduced row-echelon
/// basis: pivots strictly increase and every pivot column holds a single 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVector>,
    pivots: Vec<usize>,
}

/// Minimum-weight member of a coset together with the lexicographically least
/// vector attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetLeader {
    pub weight: usize,
    pub leader: BitVector,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|k| BitVector::unit(ambient, k)).collect(), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = BitVector>) -> Result<Self> {
        let rows: Vec<BitVector> = vectors.into_iter().collect();
        Ok(rref(&F2Matrix::from_rows(ambient, rows)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() == self.ambient {
            Ok(())
        } else {
            Err(Error::mismatch(format!("length {}", self.ambient), format!("length {}", v.len())))
        }
    }

    /// Reduces `v` against the basis. Returns the canonical coset
    /// representative (zero on every pivot column) and the basis rows used.
    pub fn reduce(&self, v: &BitVector) -> Result<(BitVector, Vec<usize>)> {
        self.check_len(v)?;
        let mut rest = v.clone();
        let mut used = Vec::new();
        for (k, (row, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if rest.get(p) {
                rest.xor_assign(row);
                used.push(k);
            }
        }
        Ok((rest, used))
    }

    /// Coordinates of `v` in the basis when `v` lies in the span.
    pub fn in_span(&self, v: &BitVector) -> Result<Option<Vec<usize>>> {
        let (rest, used) = self.reduce(v)?;
        Ok(rest.is_zero().then_some(used))
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.in_span(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for b in other.basis() {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exhaustive minimum weight over `v + self`, ties broken towards the
    /// lexicographically least vector. Needs `2^dim <= budget`.
    pub fn coset_min_weight(&self, v: &BitVector, budget: u64) -> Result<CosetLeader> {
        self.check_len(v)?;
        check_budget(self.dim(), budget)?;
        let (weight, leader) = if self.ambient <= 64 {
            let basis: Vec<u64> = self.basis.iter().map(Word::from_bits).collect();
            let (w, l) = crate::scan::min_weight_in_coset(&u64::from_bits(v), &basis);
            (w, l.into_bits(self.ambient))
        } else {
            crate::scan::min_weight_in_coset(v, &self.basis)
        };
        Ok(CosetLeader { weight: weight as usize, leader })
    }

    /// One canonical representative per coset of `self`, `2^(ambient - dim)`
    /// in total. Fails when that count exceeds `cap`.
    pub fn coset_representatives(&self, cap: u64) -> Result<CosetRepresentatives> {
        let free = self.non_pivot_columns();
        check_budget(free.len(), cap)?;
        Ok(CosetRepresentatives { ambient: self.ambient, free })
    }

    fn non_pivot_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// The subspace of vectors orthogonal to every basis vector.
    pub fn orthogonal_complement(&self) -> Subspace {
        kernel_basis(&F2Matrix { cols: self.ambient, rows: self.basis.clone() })
    }
}

/// Deterministic enumeration of the quotient `F2^n / S`: representative `k`
/// places the bits of `k` on the non-pivot columns of `S`, lowest bit on the
/// lowest column.
#[derive(Clone, Debug)]
pub struct CosetRepresentatives {
    ambient: usize,
    free: Vec<usize>,
}

impl CosetRepresentatives {
    pub fn count(&self) -> u64 {
        1u64 << self.free.len()
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn get(&self, k: u64) -> BitVector {
        assert!(k < self.count(), "representative index {k} out of range");
        BitVector::from_indices(self.ambient, self.free.iter().enumerate().filter(|(b, _)| (k >> b) & 1 == 1).map(|(_, &c)| c))
    }

    /// Representatives with indices in `range`, for splitting work.
    pub fn range(&self, range: Range<u64>) -> impl Iterator<Item = BitVector> + '_ {
        let end = range.end.min(self.count());
        (range.start..end).map(move |k| self.get(k))
    }

    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.range(0..self.count())
    }
}

/// Row space of `m` in reduced row-echelon form.
pub fn rref(m: &F2Matrix) -> Subspace {
    let mut rows: Vec<BitVector> = m.rows().iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.col_count() {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Subspace { ambient: m.col_count(), basis: rows, pivots }
}

/// `{ v : M v = 0 }`.
pub fn kernel_basis(m: &F2Matrix) -> Subspace {
    let echelon = rref(m);
    let free = echelon.non_pivot_columns();
    let vectors = free.iter().map(|&f| {
        let mut v = BitVector::unit(m.col_count(), f);
        for (row, &p) in echelon.basis().iter().zip(echelon.pivots()) {
            if row.get(f) {
                v.set(p, true);
            }
        }
        v
    });
    let rows: Vec<BitVector> = vectors.collect();
    rref(&F2Matrix { cols: m.col_count(), rows })
}
