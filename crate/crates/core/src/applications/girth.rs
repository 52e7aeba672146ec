use std::collections::VecDeque;

use super::Graph;
use crate::cochain::Cochain;
use crate::cohomology::cycle_space;
use crate::error::{check_budget, Error, Result};
use crate::linalg::BitVector;

/// Shortest cycle length next to the minimum weight of `Z_1(G)`. `None`
/// stands for an acyclic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthReport {
    pub girth: Option<usize>,
    pub cycle_space_dim: usize,
    /// Result of the exhaustive scan of `Z_1`, absent when it is over budget.
    pub min_cycle_weight: Option<Option<usize>>,
    /// Lexicographically least minimum-weight cycle.
    pub min_cycle: Option<Cochain>,
    pub required_log2: u32,
}

/// Girth by breadth-first search around every edge; the cycle space is
/// scanned only when `2^dim Z_1 <= budget`.
pub fn girth_and_min_cycle(g: &Graph, budget: u64) -> Result<GirthReport> {
    let x = g.complex();
    let adj = g.adjacency();
    let mut girth: Option<usize> = None;
    for k in 0..g.edge_count() {
        let ends = x.facet_indices(1, k);
        if let Some(d) = path_avoiding_edge(&adj, ends[0], ends[1]) {
            girth = Some(girth.map_or(d + 1, |best| best.min(d + 1)));
        }
    }
    if g.edge_count() == 0 {
        return Ok(GirthReport { girth, cycle_space_dim: 0, min_cycle_weight: Some(None), min_cycle: None, required_log2: 0 });
    }
    let z = cycle_space(x, 1)?;
    let required_log2 = z.dim() as u32;
    let mut report = GirthReport { girth, cycle_space_dim: z.dim(), min_cycle_weight: None, min_cycle: None, required_log2 };
    match check_budget(z.dim(), budget) {
        Ok(()) => {}
        Err(Error::BudgetExceeded { .. }) => return Ok(report),
        Err(e) => return Err(e),
    }
    let mut best: Option<BitVector> = None;
    let mut cur = BitVector::zeros(g.edge_count());
    for k in 1u64..(1u64 << z.dim()) {
        cur.xor_assign(&z.basis()[k.trailing_zeros() as usize]);
        let better = best.as_ref().is_none_or(|b| (cur.weight(), &cur) < (b.weight(), b));
        if better {
            best = Some(cur.clone());
        }
    }
    report.min_cycle_weight = Some(best.as_ref().map(BitVector::weight));
    report.min_cycle = best.map(|b| Cochain::from_support(x, 1, b)).transpose()?;
    Ok(report)
}

/// Length of a shortest `u`-`v` path that does not use the edge `uv`.
fn path_avoiding_edge(adj: &[Vec<usize>], u: usize, v: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if (a == u && b == v) || dist[b] != usize::MAX {
                continue;
            }
            dist[b] = dist[a] + 1;
            if b == v {
                return Some(dist[b]);
            }
            queue.push_back(b);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|k| (k, (k + 1) % 5))).unwrap();
        let r = girth_and_min_cycle(&c5, 1 << 20).unwrap();
        assert_eq!((r.girth, r.min_cycle_weight, r.cycle_space_dim), (Some(5), Some(Some(5)), 1));

        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let r = girth_and_min_cycle(&tree, 1 << 20).unwrap();
        assert_eq!((r.girth, r.min_cycle_weight), (None, Some(None)));

        let k4 = Graph::complete(4).unwrap();
        let r = girth_and_min_cycle(&k4, 1 << 20).unwrap();
        assert_eq!((r.girth, r.min_cycle_weight), (Some(3), Some(Some(3))));
        // Bit strings compare from bit 0, so the triangle avoiding vertex 0 is least.
        assert_eq!(r.min_cycle.unwrap().support().to_string(), "000111");

        let k7 = Graph::complete(7).unwrap();
        let r = girth_and_min_cycle(&k7, 1 << 10).unwrap();
        assert_eq!((r.girth, r.min_cycle_weight, r.required_log2), (Some(3), None, 15));
    }

    #[test]
    fn girth_of_the_petersen_graph() {
        let outer = (0..5).map(|k| (k, (k + 1) % 5));
        let spokes = (0..5).map(|k| (k, k + 5));
        let inner = (0..5).map(|k| (5 + k, 5 + (k + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let r = girth_and_min_cycle(&g, 1 << 20).unwrap();
        assert_eq!((r.girth, r.min_cycle_weight), (Some(5), Some(Some(5))));
    }
}
