//! Seidel switching of labelled graphs on `{0, ..., n-1}`.
//!
//! A graph is a 1-cochain of `K_n`, and switching at `v` adds `δ_0 χ_v`.
//! Two graphs are equivalent iff their cochains differ by a coboundary. Only
//! labelled equivalence is in scope.

use super::{complete_two, Graph};
use crate::cochain::Cochain;
use crate::complex::Vertex;
use crate::error::{Error, Result};
use crate::linalg::{BitVector, Rational};
use crate::tester::{run_cocycle_tester_with, BoundSource, TestMode, TesterReport};

fn check_labelled(g: &Graph) -> Result<()> {
    if !g.is_labelled() {
        return Err(Error::VertexSetMismatch(format!("vertex ids must be 0..{}", g.vertex_count())));
    }
    Ok(())
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Edge set as a bit per pair of `K_n`, pairs in lexicographic order.
fn edge_bits(g: &Graph) -> BitVector {
    let n = g.vertex_count();
    BitVector::from_indices(n * n.saturating_sub(1) / 2, g.edges().map(|(u, v)| pair_index(n, u, v)))
}

fn from_edge_bits(n: usize, bits: &BitVector) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::from_edges(n, bits.ones_iter().map(|k| pairs[k]))
}

/// Removes the edges at `v` and joins `v` to its former non-neighbours.
pub fn seidel_switch(g: &Graph, v: Vertex) -> Result<Graph> {
    check_labelled(g)?;
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, count: n });
    }
    let mut bits = edge_bits(g);
    for w in (0..n).filter(|&w| w != v) {
        bits.flip(pair_index(n, v, w));
    }
    from_edge_bits(n, &bits)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeidelReport {
    pub n: usize,
    pub equivalent: bool,
    /// Vertices to switch in the first graph to reach the second, avoiding
    /// vertex 0.
    pub switching_set: Option<Vec<Vertex>>,
    /// The triangle tester on `α + α'`, i.e. comparing `δ_1 α` and `δ_1 α'`.
    pub tester: TesterReport,
}

/// Decides labelled Seidel equivalence and runs the random-triangle tester on
/// the difference of the two edge cochains.
pub fn seidel_equivalence(g1: &Graph, g2: &Graph, mode: TestMode, budget: u64) -> Result<SeidelReport> {
    check_labelled(g1)?;
    check_labelled(g2)?;
    let n = g1.vertex_count();
    if g2.vertex_count() != n {
        return Err(Error::VertexSetMismatch(format!("{n} vertices against {}", g2.vertex_count())));
    }
    let x = complete_two(n)?;
    let diff = edge_bits(g1).xor(&edge_bits(g2));
    // diff = δ_0 χ_S forces S ∋ w ⇔ diff(0w) once 0 ∉ S.
    let set: Vec<Vertex> = (1..n).filter(|&w| diff.get(pair_index(n, 0, w))).collect();
    let mut switched = BitVector::zeros(diff.len());
    for &v in &set {
        for w in (0..n).filter(|&w| w != v) {
            switched.flip(pair_index(n, v, w));
        }
    }
    let equivalent = switched == diff;
    let f = Cochain::from_support(&x, 1, diff)?;
    let tester = run_cocycle_tester_with(&x, &f, mode, budget, BoundSource::Given(Rational::from_integer(1)))?;
    Ok(SeidelReport { n, equivalent, switching_set: equivalent.then_some(set), tester })
}
