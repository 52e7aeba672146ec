use std::fmt;

use super::complete_two;
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{BitVector, Rational};
use crate::tester::{run_cocycle_tester_with, BoundSource, TestMode, TesterReport};

/// Symmetric `m × m` matrix with entries `±1` and `+1` on the diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    m: usize,
    negative: Vec<bool>,
}

impl SignMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<SignMatrix> {
        let m = rows.len();
        let mut negative = vec![false; m * m];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::mismatch(format!("{m} entries in row {r}"), row.len()));
            }
            for (c, &value) in row.iter().enumerate() {
                negative[r * m + c] = match value {
                    1 => false,
                    -1 => true,
                    _ => return Err(Error::BadEntry { row: r, col: c, value }),
                };
            }
        }
        for r in 0..m {
            if negative[r * m + r] {
                return Err(Error::BadDiagonal(r));
            }
            if let Some(c) = (r + 1..m).find(|&c| negative[r * m + c] != negative[c * m + r]) {
                return Err(Error::NotSymmetric(r, c));
            }
        }
        Ok(SignMatrix { m, negative })
    }

    /// `α αᵀ`; `alpha[k]` is `true` for `-1`.
    pub fn outer(alpha: &[bool]) -> SignMatrix {
        let m = alpha.len();
        let negative = (0..m * m).map(|k| alpha[k / m] != alpha[k % m]).collect();
        SignMatrix { m, negative }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        if self.negative[r * self.m + c] {
            -1
        } else {
            1
        }
    }

    /// Negates the pair `(r, c)`, `(c, r)` with `r != c`.
    pub fn flip(&mut self, r: usize, c: usize) {
        assert_ne!(r, c, "diagonal entries are fixed");
        self.negative[r * self.m + c] ^= true;
        self.negative[c * self.m + r] ^= true;
    }

    /// Edge cochain of `K_m`: bit `ij` is set iff `M_ij = -1`, edges in
    /// lexicographic order.
    pub fn edge_bits(&self) -> BitVector {
        let m = self.m;
        let pairs = (0..m).flat_map(|r| (r + 1..m).map(move |c| (r, c)));
        BitVector::from_indices(
            m * m.saturating_sub(1) / 2,
            pairs.enumerate().filter(|&(_, (r, c))| self.negative[r * m + c]).map(|(k, _)| k),
        )
    }

    /// `α` with `M = α αᵀ` and `α_0 = +1`, if one exists.
    pub fn tensor_root(&self) -> Option<Vec<bool>> {
        if self.m == 0 {
            return Some(Vec::new());
        }
        let alpha: Vec<bool> = (0..self.m).map(|c| self.negative[c]).collect();
        (SignMatrix::outer(&alpha) == *self).then_some(alpha)
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.m {
            let row: Vec<&str> = (0..self.m).map(|c| if self.negative[r * self.m + c] { "-1" } else { "1" }).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorReport {
    pub m: usize,
    /// `M` is a tensor power, i.e. the tester never rejects.
    pub member: bool,
    pub tester: TesterReport,
}

/// Triple-product test: pick `{i, j, k}` and accept iff
/// `M_ij M_jk M_ki = 1`. Writing `-1` as 1 and `+1` as 0 turns this into the
/// sum-function test on `K_m`.
pub fn tensor_power_test(matrix: &SignMatrix, mode: TestMode, budget: u64) -> Result<TensorReport> {
    let x = complete_two(matrix.size())?;
    let f = Cochain::from_support(&x, 1, matrix.edge_bits())?;
    let tester = run_cocycle_tester_with(&x, &f, mode, budget, BoundSource::Given(Rational::from_integer(1)))?;
    Ok(TensorReport { m: matrix.size(), member: tester.accepts_always(), tester })
}
