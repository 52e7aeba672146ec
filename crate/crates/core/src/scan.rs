//! Gray-code enumeration kernels shared by the coset searches.
//!
//! Everything here is generic over a word type so that complexes whose cell
//! counts fit in 64 bits run on plain `u64` arithmetic while larger ones fall
//! back to [`BitVector`]. Results never depend on the word type or on how the
//! index range is split between workers.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::linalg::BitVector;

pub(crate) trait Word: Clone + Send + Sync {
    fn xor_assign(&mut self, other: &Self);
    fn weight(&self) -> u32;
    /// Lexicographic order on the bit string, bit 0 first.
    fn lex_cmp(&self, other: &Self) -> Ordering;
    fn from_bits(bits: &BitVector) -> Self;
    fn into_bits(self, len: usize) -> BitVector;
}

impl Word for u64 {
    fn xor_assign(&mut self, other: &Self) {
        *self ^= *other;
    }

    fn weight(&self) -> u32 {
        self.count_ones()
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.reverse_bits().cmp(&other.reverse_bits())
    }

    fn from_bits(bits: &BitVector) -> Self {
        debug_assert!(bits.len() <= 64);
        bits.words().first().copied().unwrap_or(0)
    }

    fn into_bits(self, len: usize) -> BitVector {
        BitVector::from_words(len, vec![self])
    }
}

impl Word for BitVector {
    fn xor_assign(&mut self, other: &Self) {
        BitVector::xor_assign(self, other);
    }

    fn weight(&self) -> u32 {
        BitVector::weight(self) as u32
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn from_bits(bits: &BitVector) -> Self {
        bits.clone()
    }

    fn into_bits(self, _len: usize) -> BitVector {
        self
    }
}

/// Minimum weight over `start + span(basis)` and the lexicographically least
/// member attaining it. Visits all `2^basis.len()` members.
pub(crate) fn min_weight_in_coset<W: Word>(start: &W, basis: &[W]) -> (u32, W) {
    let mut cur = start.clone();
    let mut best_weight = cur.weight();
    let mut best = cur.clone();
    for k in 1u64..(1u64 << basis.len()) {
        cur.xor_assign(&basis[k.trailing_zeros() as usize]);
        let w = cur.weight();
        if w < best_weight || (w == best_weight && cur.lex_cmp(&best) == Ordering::Less) {
            best_weight = w;
            best = cur.clone();
        }
    }
    (best_weight, best)
}

/// One non-zero coset seen by [`scan_quotient`].
#[derive(Clone, Debug)]
pub(crate) struct CosetSample<W> {
    /// Coset leader (lexicographically least among minimum weight members).
    pub leader: W,
    pub leader_weight: u32,
    /// Image of the coset under the linear map supplied to the scan.
    pub image: W,
    pub image_weight: u32,
}

/// Input to [`scan_quotient`]: a subspace `S` (its basis), the unit vectors
/// of the non-pivot columns of `S`, and the images of those unit vectors under
/// a linear map that vanishes on `S`.
pub(crate) struct Quotient<W> {
    pub subspace_basis: Vec<W>,
    pub free_units: Vec<W>,
    pub free_images: Vec<W>,
    pub zero: W,
    pub image_zero: W,
}

const CHUNK_LOG2: u32 = 10;

/// Visits every non-zero coset of `S` and keeps the sample that is least under
/// `prefer` (which must be a total order on distinct cosets). Work is split
/// into fixed index chunks, so the answer is the same for any thread count.
pub(crate) fn scan_quotient<W, F>(q: &Quotient<W>, prefer: F) -> Option<CosetSample<W>>
where
    W: Word,
    F: Fn(&CosetSample<W>, &CosetSample<W>) -> Ordering + Sync,
{
    let total: u64 = 1u64 << q.free_units.len();
    let chunk = 1u64 << CHUNK_LOG2;
    let chunks = total.div_ceil(chunk);
    let pick = |a: Option<CosetSample<W>>, b: Option<CosetSample<W>>| match (a, b) {
        (Some(a), Some(b)) => Some(if prefer(&b, &a) == Ordering::Less { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    };
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = (start + chunk).min(total);
            scan_range(q, start, end, &prefer)
        })
        .reduce(|| None, pick)
}

fn scan_range<W, F>(q: &Quotient<W>, start: u64, end: u64, prefer: &F) -> Option<CosetSample<W>>
where
    W: Word,
    F: Fn(&CosetSample<W>, &CosetSample<W>) -> Ordering,
{
    // Coset index k is the Gray code k ^ (k >> 1) over the free columns.
    let gray = start ^ (start >> 1);
    let mut rep = q.zero.clone();
    let mut image = q.image_zero.clone();
    for b in 0..q.free_units.len() {
        if (gray >> b) & 1 == 1 {
            rep.xor_assign(&q.free_units[b]);
            image.xor_assign(&q.free_images[b]);
        }
    }
    let mut best: Option<CosetSample<W>> = None;
    for k in start..end {
        if k != start {
            let b = k.trailing_zeros() as usize;
            rep.xor_assign(&q.free_units[b]);
            image.xor_assign(&q.free_images[b]);
        }
        if k == 0 {
            continue;
        }
        let (leader_weight, leader) = min_weight_in_coset(&rep, &q.subspace_basis);
        let sample = CosetSample { leader, leader_weight, image_weight: image.weight(), image: image.clone() };
        match &best {
            Some(b) if prefer(&sample, b) != Ordering::Less => {}
            _ => best = Some(sample),
        }
    }
    best
}
