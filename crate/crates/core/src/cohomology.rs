//! Coboundaries, cocycles, boundaries and cycles over F2.
//!
//! Cohomology is reduced: the empty face is part of every complex, so
//! `B^0 = {0, 1}` and `dim H^0` is one less than the number of components.

use std::sync::OnceLock;

use crate::cochain::{operator_matrix, Cochain, Operator};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rref, BitVector, Rational, Subspace};

fn check_index(x: &Complex, i: isize) -> Result<()> {
    if i < 0 || i > x.dim() {
        return Err(Error::mismatch(format!("index in 0..={}", x.dim()), i));
    }
    Ok(())
}

/// `B^i = Im δ_{i-1}`, including `δ_{-1}` at `i = 0`.
pub fn coboundary_space(x: &Complex, i: isize) -> Result<Subspace> {
    check_index(x, i)?;
    // The image of δ_{i-1} is the row space of its transpose.
    Ok(rref(&operator_matrix(x, i - 1, Operator::Coboundary)?.transpose()))
}

/// `Z^i = Ker δ_i`; all of `C^i` at the top dimension.
pub fn cocycle_space(x: &Complex, i: isize) -> Result<Subspace> {
    check_index(x, i)?;
    if i == x.dim() {
        return Ok(Subspace::full(x.face_count(i)));
    }
    Ok(kernel_basis(&operator_matrix(x, i, Operator::Coboundary)?))
}

/// `B_i = Im ∂_{i+1}`; zero at the top dimension.
pub fn boundary_space(x: &Complex, i: isize) -> Result<Subspace> {
    check_index(x, i)?;
    if i == x.dim() {
        return Ok(Subspace::zero(x.face_count(i)));
    }
    Ok(rref(&operator_matrix(x, i + 1, Operator::Boundary)?.transpose()))
}

/// `Z_i = Ker ∂_i` (with the augmentation `∂_0` to the empty face).
pub fn cycle_space(x: &Complex, i: isize) -> Result<Subspace> {
    check_index(x, i)?;
    Ok(kernel_basis(&operator_matrix(x, i, Operator::Boundary)?))
}

/// `dim Z^i - dim B^i`. For a connected graph and `i = 1` this is `|E| - |V| + 1`.
pub fn cohomology_dim(x: &Complex, i: isize) -> Result<usize> {
    Ok(cocycle_space(x, i)?.dim() - coboundary_space(x, i)?.dim())
}

pub fn homology_dim(x: &Complex, i: isize) -> Result<usize> {
    Ok(cycle_space(x, i)?.dim() - boundary_space(x, i)?.dim())
}

pub fn is_coboundary(x: &Complex, f: &Cochain) -> Result<bool> {
    let b = coboundary_space(x, f.dim())?;
    b.contains(f.support())
}

/// `dist(f, B^i)` with its normalization and the coset leader realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub dist: usize,
    pub normalized: Rational,
    pub leader: Cochain,
}

pub fn distance_to_coboundaries(x: &Complex, f: &Cochain, budget: u64) -> Result<Distance> {
    let b = coboundary_space(x, f.dim())?;
    distance_in(x, &b, f, budget)
}

pub(crate) fn distance_in(x: &Complex, b: &Subspace, f: &Cochain, budget: u64) -> Result<Distance> {
    let found = b.coset_min_weight(f.support(), budget)?;
    let cells = x.face_count(f.dim());
    Ok(Distance {
        dist: found.weight,
        normalized: Rational::new(found.weight as i64, cells as i64),
        leader: Cochain::from_support(x, f.dim(), found.leader)?,
    })
}

/// Outcome of checking `B_i^⊥ = Z^i` and `Z_i^⊥ = B^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub i: isize,
    pub cells: usize,
    pub dim_boundaries: usize,
    pub dim_cocycles: usize,
    pub dim_cycles: usize,
    pub dim_coboundaries: usize,
    pub passed: bool,
    /// A pair of basis vectors with non-zero inner product, if one exists.
    pub counterexample: Option<(BitVector, BitVector)>,
}

pub fn orthogonality_report(x: &Complex, i: isize) -> Result<OrthogonalityReport> {
    let bl = boundary_space(x, i)?;
    let zu = cocycle_space(x, i)?;
    let zl = cycle_space(x, i)?;
    let bu = coboundary_space(x, i)?;
    let cells = x.face_count(i);
    let mut counterexample = None;
    'outer: for (left, right) in [(&bl, &zu), (&zl, &bu)] {
        for a in left.basis() {
            for b in right.basis() {
                if a.dot(b) {
                    counterexample = Some((a.clone(), b.clone()));
                    break 'outer;
                }
            }
        }
    }
    let complementary = bl.dim() + zu.dim() == cells && zl.dim() + bu.dim() == cells;
    Ok(OrthogonalityReport {
        i,
        cells,
        dim_boundaries: bl.dim(),
        dim_cocycles: zu.dim(),
        dim_cycles: zl.dim(),
        dim_coboundaries: bu.dim(),
        passed: complementary && counterexample.is_none(),
        counterexample,
    })
}

/// Memoized `B^i` and `Z^i` for one complex. Each space is computed at most
/// once, also under concurrent access.
pub struct SpaceCache<'a> {
    complex: &'a Complex,
    coboundaries: Vec<OnceLock<Subspace>>,
    cocycles: Vec<OnceLock<Subspace>>,
}

impl<'a> SpaceCache<'a> {
    pub fn new(complex: &'a Complex) -> Self {
        let n = (complex.dim() + 1).max(0) as usize;
        SpaceCache {
            complex,
            coboundaries: (0..n).map(|_| OnceLock::new()).collect(),
            cocycles: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn complex(&self) -> &'a Complex {
        self.complex
    }

    pub fn coboundaries(&self, i: isize) -> Result<&Subspace> {
        check_index(self.complex, i)?;
        Ok(self.coboundaries[i as usize].get_or_init(|| coboundary_space(self.complex, i).expect("index already validated")))
    }

    pub fn cocycles(&self, i: isize) -> Result<&Subspace> {
        check_index(self.complex, i)?;
        Ok(self.cocycles[i as usize].get_or_init(|| cocycle_space(self.complex, i).expect("index already validated")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::coboundary;
    use crate::complex::Face;
    use crate::linalg::Rational;

    fn face(vs: &[usize]) -> Face {
        Face::new(vs.to_vec()).unwrap()
    }

    /// Components by union-find, independent of any linear algebra.
    fn components(x: &Complex) -> usize {
        let ids = x.vertex_ids();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], a: usize) -> usize {
            let mut r = a;
            while p[r] != r {
                r = p[r];
            }
            p[a] = r;
            r
        }
        for e in x.faces(1) {
            let a = x.index_of(&face(&e.vertices()[..1])).unwrap();
            let b = x.index_of(&face(&e.vertices()[1..])).unwrap();
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..ids.len()).filter(|&v| find(&mut parent, v) == v).count()
    }

    #[test]
    fn coboundary_space_examples() {
        let k4 = Complex::complete(4, 1).unwrap();
        let b0 = coboundary_space(&k4, 0).unwrap();
        assert_eq!(b0.basis(), &[BitVector::ones(4)]);
        assert_eq!(coboundary_space(&Complex::complete(4, 2).unwrap(), 1).unwrap().dim(), 3);
        for n in 3..=8 {
            assert_eq!(coboundary_space(&Complex::complete(n, 2).unwrap(), 1).unwrap().dim(), n - 1);
        }
        assert!(coboundary_space(&k4, 2).is_err());
    }

    #[test]
    fn cocycle_space_examples() {
        let path = Complex::from_maximal_faces([vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(cocycle_space(&path, 0).unwrap().dim(), 1);
        let two = Complex::from_maximal_faces([vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(cocycle_space(&two, 0).unwrap().dim(), 2);
        let c5 = Complex::from_maximal_faces((0..5).map(|v| vec![v, (v + 1) % 5])).unwrap();
        assert_eq!(cocycle_space(&c5, 1).unwrap().dim(), 5);
    }

    #[test]
    fn cohomology_dimensions() {
        let k4 = Complex::complete(4, 1).unwrap();
        assert_eq!(cohomology_dim(&k4, 0).unwrap(), 0);
        let three = Complex::from_maximal_faces([vec![0, 1], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(cohomology_dim(&three, 0).unwrap(), 2);
        for m in 3..=8 {
            assert_eq!(cohomology_dim(&Complex::complete(m, 2).unwrap(), 1).unwrap(), 0, "K_{m}^(2)");
        }
        // A connected graph has dim H^1 = |E| - |V| + 1.
        let c5 = Complex::from_maximal_faces((0..5).map(|v| vec![v, (v + 1) % 5])).unwrap();
        assert_eq!(cohomology_dim(&c5, 1).unwrap(), 1);
        let k5 = Complex::complete(5, 1).unwrap();
        assert_eq!(cohomology_dim(&k5, 1).unwrap(), 10 - 5 + 1);
    }

    #[test]
    fn components_match_union_find() {
        let graphs = [
            Complex::from_maximal_faces([vec![0, 1], vec![2, 3], vec![4]]).unwrap(),
            Complex::from_maximal_faces([vec![0, 1], vec![1, 2], vec![5, 6], vec![3]]).unwrap(),
            Complex::complete(6, 1).unwrap(),
            Complex::with_vertices(7, Vec::<Vec<usize>>::new()).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(cohomology_dim(g, 0).unwrap(), components(g) - 1);
        }
        for seed in 0..30 {
            let x = Complex::random(7, 1, Rational::new(1, 4), seed).unwrap();
            assert_eq!(cohomology_dim(&x, 0).unwrap(), components(&x) - 1);
        }
    }

    #[test]
    fn coboundary_membership() {
        let g = Complex::from_maximal_faces([vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let star = coboundary(&g, &Cochain::indicator(&g, &face(&[1])).unwrap()).unwrap();
        assert!(is_coboundary(&g, &star).unwrap());
        let k4 = Complex::complete(4, 2).unwrap();
        assert!(!is_coboundary(&k4, &Cochain::indicator(&k4, &face(&[0, 1])).unwrap()).unwrap());
        assert!(is_coboundary(&k4, &Cochain::zero(&k4, 1).unwrap()).unwrap());
    }

    #[test]
    fn distances_in_k4() {
        let k4 = Complex::complete(4, 2).unwrap();
        let star = coboundary(&k4, &Cochain::indicator(&k4, &face(&[2])).unwrap()).unwrap();
        let d = distance_to_coboundaries(&k4, &star, 1 << 10).unwrap();
        assert_eq!((d.dist, d.normalized), (0, Rational::from_integer(0)));
        assert!(d.leader.is_zero());
        let edge = Cochain::indicator(&k4, &face(&[0, 1])).unwrap();
        let d = distance_to_coboundaries(&k4, &edge, 1 << 10).unwrap();
        assert_eq!((d.dist, d.normalized), (1, Rational::new(1, 6)));
        let matching = Cochain::from_faces(&k4, 1, [&face(&[0, 1]), &face(&[2, 3])]).unwrap();
        let d = distance_to_coboundaries(&k4, &matching, 1 << 10).unwrap();
        assert_eq!((d.dist, d.normalized), (2, Rational::new(1, 3)));
        assert!(matches!(distance_to_coboundaries(&k4, &edge, 4), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn orthogonality_examples() {
        let r = orthogonality_report(&Complex::complete(4, 2).unwrap(), 1).unwrap();
        assert!(r.passed);
        assert_eq!((r.dim_boundaries, r.dim_cocycles, r.cells), (3, 3, 6));
        assert!(orthogonality_report(&Complex::complete(5, 2).unwrap(), 0).unwrap().passed);
        let tri = Complex::from_maximal_faces([vec![0, 1, 2]]).unwrap();
        assert!(orthogonality_report(&tri, 1).unwrap().passed);
    }

    #[test]
    fn homology_matches_cohomology() {
        let mut corpus = vec![
            Complex::from_maximal_faces([vec![0, 1, 2], vec![0, 2, 3], vec![3, 4], vec![5, 6], vec![6, 7], vec![5, 7]]).unwrap(),
            Complex::complete(6, 3).unwrap(),
        ];
        corpus.extend((0..10).map(|s| Complex::random(6, 2, Rational::new(1, 3), s).unwrap()));
        for x in &corpus {
            for i in 0..=x.dim() {
                assert_eq!(homology_dim(x, i).unwrap(), cohomology_dim(x, i).unwrap());
                let b = coboundary_space(x, i).unwrap();
                assert!(cocycle_space(x, i).unwrap().contains_subspace(&b).unwrap());
                assert!(cycle_space(x, i).unwrap().contains_subspace(&boundary_space(x, i).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn cache_returns_same_spaces() {
        let k5 = Complex::complete(5, 2).unwrap();
        let cache = SpaceCache::new(&k5);
        let a = cache.coboundaries(1).unwrap() as *const Subspace;
        let b = cache.coboundaries(1).unwrap() as *const Subspace;
        assert_eq!(a, b);
        assert_eq!(cache.cocycles(2).unwrap().dim(), 10);
        assert!(cache.cocycles(3).is_err());
    }
}
