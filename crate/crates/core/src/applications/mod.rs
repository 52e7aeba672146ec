//! Testers built on the cocycle tester: constant functions on a graph, sum
//! functions and tensor powers on `K_m`, Seidel equivalence, and the girth
//! obstruction.

mod girth;
mod seidel;
mod tensor;

pub use girth::{girth_and_min_cycle, GirthReport};
pub use seidel::{seidel_equivalence, seidel_switch, SeidelReport};
pub use tensor::{tensor_power_test, SignMatrix, TensorReport};

use crate::cochain::{coboundary, Cochain};
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{BitVector, Rational};
use crate::tester::{run_cocycle_tester_with, BoundSource, TestMode, TesterReport};

/// A complex of dimension at most 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph(Complex);

impl Graph {
    pub fn new(x: Complex) -> Result<Graph> {
        if x.dim() > 1 {
            return Err(Error::NotAGraph(x.dim()));
        }
        Ok(Graph(x))
    }

    /// Graph on `{0, ..., n-1}` with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        Complex::with_vertices(n, edges.into_iter().map(|(u, v)| vec![u, v])).map(Graph)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Self::from_edges(n, []);
        }
        Complex::complete(n, 1).map(Graph)
    }

    pub fn complex(&self) -> &Complex {
        &self.0
    }

    pub fn into_complex(self) -> Complex {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.face_count(0)
    }

    pub fn edge_count(&self) -> usize {
        self.0.face_count(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.faces(1).iter().map(|e| (e.vertices()[0], e.vertices()[1]))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && Face::new(vec![u, v]).is_ok_and(|e| self.0.contains(&e))
    }

    /// Vertex ids are exactly `0..vertex_count`.
    pub fn is_labelled(&self) -> bool {
        self.0.vertex_ids().iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.is_labelled() && self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Neighbour lists, indexed by position in `X(0)`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for k in 0..self.edge_count() {
            let ends = self.0.facet_indices(1, k);
            adj[ends[0]].push(ends[1]);
            adj[ends[1]].push(ends[0]);
        }
        adj
    }
}

/// `K_n^(2)` for an adapter that needs triangles on `n` labelled vertices.
pub(crate) fn complete_two(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    Complex::complete(n, 2)
}

/// Constant-function test: pick a random edge, reject when `f` differs on its
/// ends. This is the 0-cocycle tester of the graph; the bound is `ε_0(G)`.
pub fn constant_function_test(g: &Graph, f: &Cochain, mode: TestMode, budget: u64) -> Result<TesterReport> {
    if f.dim() != 0 {
        return Err(Error::mismatch("a 0-cochain", f.dim()));
    }
    run_cocycle_tester_with(g.complex(), f, mode, budget, BoundSource::Computed)
}

/// `f(uv) = g(u) + g(v)`, i.e. `δ_0 g`, with `g` indexed by `X(0)`.
pub fn sum_function_encode(g: &BitVector, graph: &Graph) -> Result<Cochain> {
    let g = Cochain::from_support(graph.complex(), 0, g.clone())?;
    coboundary(graph.complex(), &g)
}

/// Triangle test for sum functions on `K_m`: accept iff
/// `f(rj) + f(jk) + f(kr) = 0` for a random triple. The reported bound is 1,
/// the constant available for every `m`.
pub fn sum_function_test(graph: &Graph, f: &Cochain, mode: TestMode, budget: u64) -> Result<TesterReport> {
    if !graph.is_complete() {
        return Err(Error::NotComplete);
    }
    if f.dim() != 1 || f.support().len() != graph.edge_count() {
        return Err(Error::mismatch(format!("a 1-cochain on {} edges", graph.edge_count()), f.dim()));
    }
    let x = complete_two(graph.vertex_count())?;
    // K_m and the 1-skeleton of K_m^(2) order their edges identically.
    let f = Cochain::from_support(&x, 1, f.support().clone())?;
    run_cocycle_tester_with(&x, &f, mode, budget, BoundSource::Given(Rational::from_integer(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{coboundary_space, cocycle_space};
    use crate::expansion::epsilon_graph_cheeger;

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn constant_function_examples() {
        let k4 = Graph::complete(4).unwrap();
        let x = k4.complex();
        let run = |bits: &str| {
            let f = Cochain::from_support(x, 0, bits.parse().unwrap()).unwrap();
            constant_function_test(&k4, &f, TestMode::Exact, BUDGET).unwrap()
        };
        let ones = run("1111");
        assert_eq!((ones.exact_rate, ones.distance), (Rational::from_integer(0), Some(Rational::from_integer(0))));
        let one = run("1000");
        assert_eq!((one.exact_rate, one.distance), (Rational::new(1, 2), Some(Rational::new(1, 4))));
        let two = run("1100");
        assert_eq!((two.exact_rate, two.distance), (Rational::new(2, 3), Some(Rational::new(1, 2))));
        assert_eq!(two.epsilon_bound, Some(Rational::new(4, 3)));
        assert_eq!(two.exact_rate, two.epsilon_bound.unwrap() * two.distance.unwrap());
        assert_eq!(epsilon_graph_cheeger(x, BUDGET).unwrap(), Rational::new(4, 3));
    }

    #[test]
    fn sum_function_encode_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(sum_function_encode(&BitVector::zeros(4), &k4).unwrap().is_zero());
        let star = sum_function_encode(&"1000".parse().unwrap(), &k4).unwrap();
        assert_eq!(star.support().to_string(), "111000");
        let other = sum_function_encode(&"0111".parse().unwrap(), &k4).unwrap();
        assert_eq!(star, other);
    }

    #[test]
    fn sum_function_test_examples() {
        for m in [4, 5] {
            let g = Graph::complete(m).unwrap();
            let edge = Cochain::indicator(g.complex(), &Face::new(vec![0, 1]).unwrap()).unwrap();
            let r = sum_function_test(&g, &edge, TestMode::Exact, BUDGET).unwrap();
            let expected = if m == 4 { Rational::new(1, 2) } else { Rational::new(3, 10) };
            assert_eq!(r.exact_rate, expected);
            assert_eq!(r.distance_weight, Some(1));
            assert_eq!(r.bound_satisfied, Some(true));
            let coded = sum_function_encode(&BitVector::unit(m, 2), &g).unwrap();
            assert!(sum_function_test(&g, &coded, TestMode::Exact, BUDGET).unwrap().accepts_always());
        }
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let f = Cochain::zero(path.complex(), 1).unwrap();
        assert_eq!(sum_function_test(&path, &f, TestMode::Exact, BUDGET).unwrap_err(), Error::NotComplete);
    }

    #[test]
    fn triangle_vanishing_characterizes_sum_functions() {
        for m in 3..=5 {
            let g = Graph::complete(m).unwrap();
            let x = complete_two(m).unwrap();
            let b = coboundary_space(&x, 1).unwrap();
            let e = g.edge_count();
            for bits in 0u64..(1 << e) {
                let f = Cochain::from_support(g.complex(), 1, BitVector::from_words(e, vec![bits])).unwrap();
                let passes = sum_function_test(&g, &f, TestMode::Exact, BUDGET).unwrap().accepts_always();
                assert_eq!(passes, b.contains(f.support()).unwrap());
            }
        }
        for m in 3..=8 {
            let x = complete_two(m).unwrap();
            assert_eq!(cocycle_space(&x, 1).unwrap(), coboundary_space(&x, 1).unwrap());
        }
    }

    #[test]
    fn graph_rejects_higher_faces() {
        assert_eq!(Graph::new(Complex::complete(4, 2).unwrap()).unwrap_err(), Error::NotAGraph(2));
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert!(g.has_edge(1, 0) && !g.has_edge(1, 2));
        assert!(g.is_labelled() && !g.is_complete());
    }
}
