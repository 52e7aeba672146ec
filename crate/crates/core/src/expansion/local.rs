//! Local views on `K_n^(2)` and the counting argument behind the lower bound
//! `ε_1(K_n^(2)) >= n / (n - 2)`.

use crate::cochain::{coboundary, Cochain};
use crate::cohomology::distance_to_coboundaries;
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::linalg::BitVector;

fn complete_two(x: &Complex) -> Result<usize> {
    x.complete_order(2).ok_or(Error::NotCompleteComplex(2))
}

fn edge(u: Vertex, v: Vertex) -> Face {
    Face::new(vec![u, v]).expect("distinct endpoints")
}

/// `α_u(v) = α(uv)` for `v != u` and `α_u(u) = 0`.
pub fn local_view(x: &Complex, alpha: &Cochain, u: Vertex) -> Result<Cochain> {
    let n = complete_two(x)?;
    if alpha.dim() != 1 {
        return Err(Error::mismatch("a 1-cochain", alpha.dim()));
    }
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, count: n });
    }
    let mut view = BitVector::zeros(n);
    for v in (0..n).filter(|&v| v != u) {
        let k = x.index_of(&edge(u, v)).expect("complete 1-skeleton");
        view.set(v, alpha.get(k));
    }
    Cochain::from_support(x, 0, view)
}

/// First `(u, e)` where `(α + δ_0 α_u)(e)` disagrees with the local identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdentityFailure {
    pub u: Vertex,
    pub edge: Face,
    pub found: bool,
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdentityReport {
    pub n: usize,
    /// `|δ_1 α|`.
    pub coboundary_weight: usize,
    /// `Σ_u |α + δ_0 α_u|`.
    pub local_sum: usize,
    /// `dist(α, B^1)`.
    pub dist: usize,
    pub counting_holds: bool,
    pub bound_holds: bool,
    pub counterexample: Option<LocalIdentityFailure>,
    pub passed: bool,
}

/// Checks, for every vertex `u` and edge `e`, that `(α + δ_0 α_u)(e)` is
/// `δ_1 α(ue)` when `u ∉ e` and `0` otherwise; then
/// `3 |δ_1 α| = Σ_u |α + δ_0 α_u|` and `Σ_u |α + δ_0 α_u| >= n dist(α, B^1)`.
pub fn verify_local_identity(x: &Complex, alpha: &Cochain, budget: u64) -> Result<LocalIdentityReport> {
    let n = complete_two(x)?;
    let d_alpha = coboundary(x, alpha)?;
    let mut local_sum = 0;
    let mut counterexample = None;
    for u in 0..n {
        let view = local_view(x, alpha, u)?;
        let diff = alpha.add(&coboundary(x, &view)?)?;
        local_sum += diff.weight();
        for (k, e) in x.faces(1).iter().enumerate() {
            let expected = if e.contains(u) {
                false
            } else {
                let t = e.with_vertex(u)?;
                d_alpha.get(x.index_of(&t).expect("complete 2-skeleton"))
            };
            let found = diff.get(k);
            if found != expected && counterexample.is_none() {
                counterexample = Some(LocalIdentityFailure { u, edge: e.clone(), found, expected });
            }
        }
    }
    let dist = distance_to_coboundaries(x, alpha, budget)?.dist;
    let counting_holds = 3 * d_alpha.weight() == local_sum;
    let bound_holds = local_sum >= n * dist;
    Ok(LocalIdentityReport {
        n,
        coboundary_weight: d_alpha.weight(),
        local_sum,
        dist,
        counting_holds,
        bound_holds,
        passed: counting_holds && bound_holds && counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(x: &Complex, pairs: &[(usize, usize)]) -> Cochain {
        let faces: Vec<Face> = pairs.iter().map(|&(a, b)| edge(a, b)).collect();
        Cochain::from_faces(x, 1, &faces).unwrap()
    }

    #[test]
    fn local_view_examples() {
        let k4 = Complex::complete(4, 2).unwrap();
        let star = edges(&k4, &[(0, 1), (0, 2), (0, 3)]);
        let view = local_view(&k4, &star, 0).unwrap();
        assert_eq!(view.support().to_string(), "0111");
        let d = coboundary(&k4, &view).unwrap();
        for (k, e) in k4.faces(1).iter().enumerate() {
            if e.contains(0) {
                assert_eq!(d.get(k), star.get(k));
            }
        }
        let zero = Cochain::zero(&k4, 1).unwrap();
        assert!(local_view(&k4, &zero, 2).unwrap().is_zero());
        let single = edges(&k4, &[(1, 3)]);
        assert_eq!(local_view(&k4, &single, 1).unwrap().support().to_string(), "0001");
    }

    #[test]
    fn single_edge_counts() {
        let k4 = Complex::complete(4, 2).unwrap();
        let r = verify_local_identity(&k4, &edges(&k4, &[(0, 1)]), 1 << 20).unwrap();
        assert!(r.passed);
        assert_eq!((r.coboundary_weight, r.local_sum, r.dist), (2, 6, 1));
    }

    #[test]
    fn rejects_incomplete_complexes() {
        let k4 = Complex::complete(4, 1).unwrap();
        let alpha = Cochain::zero(&k4, 1).unwrap();
        assert_eq!(local_view(&k4, &alpha, 0).unwrap_err(), Error::NotCompleteComplex(2));
        let partial = Complex::from_maximal_faces([vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]).unwrap();
        let alpha = Cochain::zero(&partial, 1).unwrap();
        assert!(verify_local_identity(&partial, &alpha, 1 << 20).is_err());
    }
}
