//! Chains and cochains with F2 coefficients, and the (co)boundary maps.
//!
//! A chain and a cochain of the same dimension share one representation: a
//! bit per face of `X(i)` in canonical order.

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::linalg::{ratio, BitVector, F2Matrix, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cochain {
    dim: isize,
    support: BitVector,
}

impl Cochain {
    pub fn zero(x: &Complex, i: isize) -> Result<Cochain> {
        check_dim(x, i)?;
        Ok(Cochain { dim: i, support: BitVector::zeros(x.face_count(i)) })
    }

    pub fn from_support(x: &Complex, i: isize, support: BitVector) -> Result<Cochain> {
        check_dim(x, i)?;
        if support.len() != x.face_count(i) {
            return Err(Error::mismatch(
                format!("{} cells in X({i})", x.face_count(i)),
                format!("a vector of length {}", support.len()),
            ));
        }
        Ok(Cochain { dim: i, support })
    }

    /// Indicator of a set of `i`-faces. Listing a face twice cancels it.
    pub fn from_faces<'a>(x: &Complex, i: isize, faces: impl IntoIterator<Item = &'a Face>) -> Result<Cochain> {
        let mut c = Cochain::zero(x, i)?;
        for f in faces {
            if f.dim() != i {
                return Err(Error::mismatch(format!("an {i}-face"), format!("{f} of dimension {}", f.dim())));
            }
            let k = x.index_of(f).ok_or_else(|| Error::UnknownFace(f.clone()))?;
            c.support.flip(k);
        }
        Ok(c)
    }

    /// `χ_F` for a single face.
    pub fn indicator(x: &Complex, face: &Face) -> Result<Cochain> {
        Cochain::from_faces(x, face.dim(), [face])
    }

    /// The constant function 1 on `X(i)`.
    pub fn ones(x: &Complex, i: isize) -> Result<Cochain> {
        check_dim(x, i)?;
        Ok(Cochain { dim: i, support: BitVector::ones(x.face_count(i)) })
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn support(&self) -> &BitVector {
        &self.support
    }

    pub fn into_support(self) -> BitVector {
        self.support
    }

    pub fn weight(&self) -> usize {
        self.support.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn get(&self, k: usize) -> bool {
        self.support.get(k)
    }

    /// Faces in the support, canonical order.
    pub fn faces<'a>(&'a self, x: &'a Complex) -> impl Iterator<Item = &'a Face> + 'a {
        self.support.ones_iter().map(move |k| x.face(self.dim, k))
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.dim != other.dim || self.support.len() != other.support.len() {
            return Err(Error::mismatch(format!("{}-cochain", self.dim), format!("{}-cochain", other.dim)));
        }
        Ok(Cochain { dim: self.dim, support: self.support.xor(&other.support) })
    }
}

fn check_dim(x: &Complex, i: isize) -> Result<()> {
    if i < -1 || i > x.dim() {
        return Err(Error::mismatch(format!("dimension in -1..={}", x.dim()), i));
    }
    Ok(())
}

fn check_cochain(x: &Complex, c: &Cochain) -> Result<()> {
    check_dim(x, c.dim)?;
    if c.support.len() != x.face_count(c.dim) {
        return Err(Error::mismatch(
            format!("{} cells in X({})", x.face_count(c.dim), c.dim),
            format!("a cochain of length {}", c.support.len()),
        ));
    }
    Ok(())
}

/// `∂_i`: each face goes to the sum of its facets.
pub fn boundary(x: &Complex, c: &Cochain) -> Result<Cochain> {
    check_cochain(x, c)?;
    let i = c.dim;
    if i < 0 {
        return Err(Error::mismatch("a chain of dimension >= 0", i));
    }
    let mut out = BitVector::zeros(x.face_count(i - 1));
    for k in c.support.ones_iter() {
        for &j in x.facet_indices(i, k) {
            out.flip(j);
        }
    }
    Ok(Cochain { dim: i - 1, support: out })
}

/// `δ_i`: `(δf)(G)` is the sum of `f` over the facets of `G`. Defined for
/// `-1 <= i < dim X`; `δ_{-1}` sends `χ_∅` to the all-ones 0-cochain.
pub fn coboundary(x: &Complex, f: &Cochain) -> Result<Cochain> {
    check_cochain(x, f)?;
    let i = f.dim;
    if i >= x.dim() {
        return Err(Error::mismatch(format!("a cochain of dimension < {}", x.dim()), i));
    }
    let support = BitVector::from_indices(
        x.face_count(i + 1),
        (0..x.face_count(i + 1)).filter(|&k| x.facet_indices(i + 1, k).iter().filter(|&&j| f.support.get(j)).count() % 2 == 1),
    );
    Ok(Cochain { dim: i + 1, support })
}

/// `⟨a, b⟩ = Σ a(F) b(F)` over F2.
pub fn inner_product(a: &Cochain, b: &Cochain) -> Result<bool> {
    if a.dim != b.dim || a.support.len() != b.support.len() {
        return Err(Error::mismatch(format!("{}-cochain", a.dim), format!("{}-cochain", b.dim)));
    }
    Ok(a.support.dot(&b.support))
}

/// `‖f‖ = |supp f| / |X(i)|`.
pub fn norm(x: &Complex, f: &Cochain) -> Result<Rational> {
    check_cochain(x, f)?;
    Ok(ratio(f.weight(), x.face_count(f.dim)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Boundary,
    Coboundary,
}

/// Matrix of `∂_i` (shape `|X(i-1)| × |X(i)|`) or `δ_i` (shape
/// `|X(i+1)| × |X(i)|`), acting on column vectors.
pub fn operator_matrix(x: &Complex, i: isize, which: Operator) -> Result<F2Matrix> {
    match which {
        Operator::Boundary => {
            if i < 0 || i > x.dim() {
                return Err(Error::mismatch(format!("boundary index in 0..={}", x.dim()), i));
            }
            let mut m = F2Matrix::zeros(x.face_count(i - 1), x.face_count(i));
            for k in 0..x.face_count(i) {
                for &j in x.facet_indices(i, k) {
                    m.set(j, k, true);
                }
            }
            Ok(m)
        }
        Operator::Coboundary => {
            if i < -1 || i >= x.dim() {
                return Err(Error::mismatch(format!("coboundary index in -1..{}", x.dim()), i));
            }
            F2Matrix::from_rows(
                x.face_count(i),
                (0..x.face_count(i + 1)).map(|k| BitVector::from_indices(x.face_count(i), x.facet_indices(i + 1, k).iter().copied())).collect(),
            )
        }
    }
}
