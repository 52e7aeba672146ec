//! Exact coboundary expansion.
//!
//! `ε_i(X)` is the minimum of `‖δf‖ / ‖[f]‖` over `f ∉ B^i`. Since `δ` vanishes
//! on `B^i`, `δf` is constant on each coset `f + B^i`; the search therefore
//! walks the `2^(|X(i)| - dim B^i)` cosets once and runs an exhaustive
//! minimum-weight search (`2^dim B^i` members) inside each.

use std::cmp::Ordering;

use crate::cochain::{coboundary, Cochain};
use crate::cohomology::SpaceCache;
use crate::complex::Complex;
use crate::error::{check_budget, Error, Result};
use crate::linalg::{ratio, BitVector, Rational, Subspace};
use crate::scan::{scan_quotient, CosetSample, Quotient, Word};

mod local;

pub use local::{local_view, verify_local_identity, LocalIdentityFailure, LocalIdentityReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    pub i: usize,
    pub epsilon: Rational,
    /// Leader of the ratio-minimizing coset (lexicographically least on ties).
    pub witness: Cochain,
    pub witness_dist: usize,
    /// `|δ witness|`.
    pub witness_coboundary_weight: usize,
    pub cosets_enumerated: u64,
    /// `H^i != 0`, which happens exactly when `epsilon == 0`.
    pub h_nonzero: bool,
}

/// Checks `0 <= i < dim X`, reporting `i == dim X` as an empty codomain.
pub(crate) fn check_tester_index(x: &Complex, i: usize) -> Result<()> {
    let i = i as isize;
    if i > x.dim() {
        return Err(Error::mismatch(format!("index in 0..{}", x.dim()), i));
    }
    if x.face_count(i + 1) == 0 {
        return Err(Error::EmptyCodomain(i));
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Objective {
    /// Smallest `image_weight / leader_weight`.
    MinRatio,
    /// Largest `leader_weight / image_weight`.
    MaxFill,
}

fn compare<W: Word>(objective: Objective, a: &CosetSample<W>, b: &CosetSample<W>) -> Ordering {
    let (aw, al) = (a.image_weight as u64, a.leader_weight as u64);
    let (bw, bl) = (b.image_weight as u64, b.leader_weight as u64);
    let primary = match objective {
        Objective::MinRatio => (aw * bl).cmp(&(bw * al)),
        Objective::MaxFill => (bl * aw).cmp(&(al * bw)),
    };
    primary.then_with(|| a.leader.lex_cmp(&b.leader))
}

pub(crate) struct BestCoset {
    pub leader: BitVector,
    pub leader_weight: usize,
    pub image: BitVector,
    pub image_weight: usize,
}

/// Best non-zero coset of `s` under `objective`, where the image of a coset is
/// `δ_i` of any member.
fn best_coset(x: &Complex, i: usize, s: &Subspace, free: &[usize], objective: Objective) -> Result<Option<BestCoset>> {
    let i = i as isize;
    let images: Vec<BitVector> = free
        .iter()
        .map(|&c| coboundary(x, &Cochain::from_support(x, i, BitVector::unit(s.ambient_dim(), c))?).map(Cochain::into_support))
        .collect::<Result<_>>()?;
    let image_len = x.face_count(i + 1);
    let best = if s.ambient_dim() <= 64 && image_len <= 64 {
        run::<u64>(s, free, &images, image_len, objective)
    } else {
        run::<BitVector>(s, free, &images, image_len, objective)
    };
    Ok(best)
}

fn run<W: Word>(s: &Subspace, free: &[usize], images: &[BitVector], image_len: usize, objective: Objective) -> Option<BestCoset> {
    let n = s.ambient_dim();
    let q = Quotient {
        subspace_basis: s.basis().iter().map(W::from_bits).collect(),
        free_units: free.iter().map(|&c| W::from_bits(&BitVector::unit(n, c))).collect(),
        free_images: images.iter().map(W::from_bits).collect(),
        zero: W::from_bits(&BitVector::zeros(n)),
        image_zero: W::from_bits(&BitVector::zeros(image_len)),
    };
    scan_quotient(&q, |a, b| compare(objective, a, b)).map(|b| BestCoset {
        leader_weight: b.leader_weight as usize,
        image_weight: b.image_weight as usize,
        leader: b.leader.into_bits(n),
        image: b.image.into_bits(image_len),
    })
}

/// Exact `ε_i(X)`. Needs `2^(|X(i)| - dim B^i) <= budget` and
/// `2^dim B^i <= budget`.
pub fn epsilon(x: &Complex, i: usize, budget: u64) -> Result<ExpansionResult> {
    epsilon_with(&SpaceCache::new(x), i, budget)
}

pub fn epsilon_with(cache: &SpaceCache<'_>, i: usize, budget: u64) -> Result<ExpansionResult> {
    let x = cache.complex();
    check_tester_index(x, i)?;
    let b = cache.coboundaries(i as isize)?;
    let reps = b.coset_representatives(budget)?;
    check_budget(b.dim(), budget)?;
    if reps.free_columns().is_empty() {
        return Err(Error::TrivialQuotient(i as isize));
    }
    let best = best_coset(x, i, b, reps.free_columns(), Objective::MinRatio)?.expect("quotient is non-trivial");
    let cells = x.face_count(i as isize);
    let above = x.face_count(i as isize + 1);
    let epsilon = Rational::new((best.image_weight * cells) as i64, (best.leader_weight * above) as i64);
    Ok(ExpansionResult {
        i,
        h_nonzero: best.image_weight == 0,
        epsilon,
        witness: Cochain::from_support(x, i as isize, best.leader)?,
        witness_dist: best.leader_weight,
        witness_coboundary_weight: best.image_weight,
        cosets_enumerated: reps.count() - 1,
    })
}

/// `ε_0` of the 1-skeleton through the cut form
/// `(|V|/|E|) min_A |E(A, Ā)| / min(|A|, |Ā|)`, by enumerating vertex subsets.
pub fn epsilon_graph_cheeger(x: &Complex, budget: u64) -> Result<Rational> {
    if x.dim() < 1 {
        return Err(Error::mismatch("a complex of dimension >= 1", x.dim()));
    }
    let v = x.face_count(0);
    let e = x.face_count(1);
    check_budget(v, budget)?;
    if v < 2 {
        return Err(Error::TrivialQuotient(0));
    }
    let mut adj = vec![0u64; v];
    for k in 0..e {
        let ends = x.facet_indices(1, k);
        adj[ends[0]] |= 1 << ends[1];
        adj[ends[1]] |= 1 << ends[0];
    }
    // Subsets avoiding the last vertex cover every unordered cut {A, Ā} once.
    let mut best: Option<(u64, u64)> = None;
    for a in 1u64..(1u64 << (v - 1)) {
        let mut cut = 0u64;
        let mut rest = a;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (adj[u] & !a).count_ones() as u64;
        }
        let size = a.count_ones() as u64;
        let small = size.min(v as u64 - size);
        if best.is_none_or(|(c, s)| cut * s < c * small) {
            best = Some((cut, small));
        }
    }
    let (cut, small) = best.expect("at least two vertices");
    Ok(Rational::new((v as u64 * cut) as i64, (e as u64 * small) as i64))
}

/// Gromov's filling constant
/// `μ_i = max_{0 != β ∈ B^{i+1}} (1/‖β‖) min_{δα = β} ‖α‖`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuResult {
    pub i: usize,
    pub mu: Rational,
    /// The maximizing coboundary `β`.
    pub beta: Cochain,
    /// A minimum-weight `α` with `δα = β`.
    pub filling: Cochain,
    pub cosets_enumerated: u64,
}

/// Exact `μ_i(X)`: the cosets of `Z^i` are in bijection with `B^{i+1}` through
/// `δ`, and the cheapest filling of `β` is the leader of its coset.
pub fn mu(x: &Complex, i: usize, budget: u64) -> Result<MuResult> {
    mu_with(&SpaceCache::new(x), i, budget)
}

pub fn mu_with(cache: &SpaceCache<'_>, i: usize, budget: u64) -> Result<MuResult> {
    let x = cache.complex();
    check_tester_index(x, i)?;
    let z = cache.cocycles(i as isize)?;
    let reps = z.coset_representatives(budget)?;
    check_budget(z.dim(), budget)?;
    let best = best_coset(x, i, z, reps.free_columns(), Objective::MaxFill)?
        .expect("B^{i+1} is non-zero when X(i+1) is non-empty");
    let cells = x.face_count(i as isize);
    let above = x.face_count(i as isize + 1);
    Ok(MuResult {
        i,
        mu: Rational::new((best.leader_weight * above) as i64, (best.image_weight * cells) as i64),
        beta: Cochain::from_support(x, i as isize + 1, best.image)?,
        filling: Cochain::from_support(x, i as isize, best.leader)?,
        cosets_enumerated: reps.count() - 1,
    })
}

/// `‖δf‖ / ‖[f]‖` for one cochain outside `B^i`.
pub fn expansion_ratio(x: &Complex, f: &Cochain, budget: u64) -> Result<Option<Rational>> {
    let i = f.dim();
    check_tester_index(x, usize::try_from(i).map_err(|_| Error::mismatch("a cochain of dimension >= 0", i))?)?;
    let d = crate::cohomology::distance_to_coboundaries(x, f, budget)?;
    if d.dist == 0 {
        return Ok(None);
    }
    let df = coboundary(x, f)?;
    Ok(Some(ratio(df.weight(), x.face_count(i + 1)) / d.normalized))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cohomology_dim;
    use crate::complex::Face;

    const BUDGET: u64 = 1 << 24;

    fn face(vs: &[usize]) -> Face {
        Face::new(vs.to_vec()).unwrap()
    }

    /// Cut-form oracle written against vertex ids directly.
    fn cheeger_oracle(n: usize, edges: &[(usize, usize)]) -> Rational {
        let mut best: Option<Rational> = None;
        for a in 1u32..(1 << n) - 1 {
            let inside = |v: usize| (a >> v) & 1 == 1;
            let cut = edges.iter().filter(|&&(u, v)| inside(u) != inside(v)).count();
            let size = a.count_ones() as usize;
            let r = Rational::new((n * cut) as i64, (edges.len() * size.min(n - size)) as i64);
            best = Some(best.map_or(r, |b| b.min(r)));
        }
        best.unwrap()
    }

    #[test]
    fn k4_graph_epsilon() {
        let k4 = Complex::complete(4, 1).unwrap();
        let r = epsilon(&k4, 0, BUDGET).unwrap();
        assert_eq!(r.epsilon, Rational::new(4, 3));
        assert!(!r.h_nonzero);
        assert_eq!(r.cosets_enumerated, 7);
        let edges: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        assert_eq!(cheeger_oracle(4, &edges), Rational::new(4, 3));
    }

    #[test]
    fn k4_two_complex_epsilon_one() {
        let k4 = Complex::complete(4, 2).unwrap();
        let r = epsilon(&k4, 1, BUDGET).unwrap();
        assert_eq!(r.epsilon, Rational::from_integer(3));
        assert_eq!((r.witness_dist, r.witness_coboundary_weight), (1, 2));
        assert_eq!(r.witness.faces(&k4).collect::<Vec<_>>(), vec![&face(&[2, 3])]);
        assert_eq!(r.cosets_enumerated, 7);
    }

    #[test]
    fn disconnected_graph_has_zero_expansion() {
        let g = Complex::from_maximal_faces([vec![0, 1], vec![2, 3]]).unwrap();
        let r = epsilon(&g, 0, BUDGET).unwrap();
        assert_eq!(r.epsilon, Rational::from_integer(0));
        assert!(r.h_nonzero);
        assert!(coboundary(&g, &r.witness).unwrap().is_zero());
        assert!(!crate::cohomology::is_coboundary(&g, &r.witness).unwrap());
        assert_eq!(epsilon_graph_cheeger(&g, BUDGET).unwrap(), Rational::from_integer(0));
    }

    #[test]
    fn epsilon_errors() {
        let k4 = Complex::complete(4, 2).unwrap();
        assert_eq!(epsilon(&k4, 2, BUDGET).unwrap_err(), Error::EmptyCodomain(2));
        assert!(matches!(epsilon(&k4, 3, BUDGET), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(epsilon(&k4, 1, 4), Err(Error::BudgetExceeded { required_log2: 3, .. })));
        let edge = Complex::from_maximal_faces([vec![0, 1]]).unwrap();
        assert_eq!(epsilon(&edge, 0, BUDGET).unwrap().epsilon, Rational::from_integer(2));
    }

    #[test]
    fn cheeger_examples() {
        assert_eq!(epsilon_graph_cheeger(&Complex::complete(4, 1).unwrap(), BUDGET).unwrap(), Rational::new(4, 3));
        assert_eq!(epsilon_graph_cheeger(&Complex::complete(5, 1).unwrap(), BUDGET).unwrap(), Rational::new(3, 2));
        assert_eq!(epsilon_graph_cheeger(&Complex::complete(6, 1).unwrap(), BUDGET).unwrap(), Rational::new(6, 5));
        assert!(epsilon_graph_cheeger(&Complex::complete(6, 0).unwrap(), BUDGET).is_err());
        assert!(matches!(epsilon_graph_cheeger(&Complex::complete(6, 1).unwrap(), 32), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn cheeger_matches_coset_route_on_random_graphs() {
        for seed in 0..40 {
            let n = 3 + (seed as usize % 8);
            let g = Complex::random(n, 1, Rational::new(1, 2), seed).unwrap();
            if g.face_count(1) == 0 {
                continue;
            }
            let edges: Vec<(usize, usize)> = g.faces(1).iter().map(|e| (e.vertices()[0], e.vertices()[1])).collect();
            let cheeger = epsilon_graph_cheeger(&g, BUDGET).unwrap();
            assert_eq!(cheeger, cheeger_oracle(n, &edges));
            assert_eq!(epsilon(&g, 0, BUDGET).unwrap().epsilon, cheeger, "seed {seed}");
        }
    }

    #[test]
    fn mu_examples() {
        let k4 = Complex::complete(4, 1).unwrap();
        let m = mu(&k4, 0, BUDGET).unwrap();
        assert_eq!(m.mu, Rational::new(3, 4));
        assert_eq!((m.beta.weight(), m.filling.weight()), (4, 2));
        assert_eq!(coboundary(&k4, &m.filling).unwrap(), m.beta);

        let k4_2 = Complex::complete(4, 2).unwrap();
        let m1 = mu(&k4_2, 1, BUDGET).unwrap();
        assert_eq!(m1.mu, Rational::new(1, 3));
        assert_eq!(m1.mu * epsilon(&k4_2, 1, BUDGET).unwrap().epsilon, Rational::from_integer(1));

        let two = Complex::from_maximal_faces([vec![0, 1], vec![2, 3]]).unwrap();
        assert!(cohomology_dim(&two, 0).unwrap() > 0);
        assert_eq!(mu(&two, 0, BUDGET).unwrap().mu, Rational::new(1, 2));
    }

    #[test]
    fn mu_times_epsilon_is_one_without_cohomology() {
        let mut corpus = vec![Complex::complete(5, 2).unwrap(), Complex::complete(6, 2).unwrap(), Complex::complete(5, 3).unwrap()];
        corpus.extend((0..10).map(|s| Complex::random(6, 2, Rational::new(1, 2), s).unwrap()));
        for x in &corpus {
            for i in 0..x.dim() as usize {
                if cohomology_dim(x, i as isize).unwrap() == 0 {
                    let e = epsilon(x, i, BUDGET).unwrap().epsilon;
                    assert_eq!(mu(x, i, BUDGET).unwrap().mu * e, Rational::from_integer(1));
                }
            }
        }
    }

    #[test]
    fn witness_attains_the_minimum() {
        for (n, i) in [(5, 1), (6, 1), (6, 0)] {
            let x = Complex::complete(n, 2).unwrap();
            let r = epsilon(&x, i, BUDGET).unwrap();
            assert_eq!(expansion_ratio(&x, &r.witness, BUDGET).unwrap(), Some(r.epsilon));
            let d = crate::cohomology::distance_to_coboundaries(&x, &r.witness, BUDGET).unwrap();
            assert_eq!(d.leader, r.witness);
        }
    }

    #[test]
    fn coboundary_is_constant_on_cosets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let x = Complex::complete(6, 2).unwrap();
        let b = crate::cohomology::coboundary_space(&x, 1).unwrap();
        let reps = b.coset_representatives(BUDGET).unwrap();
        for k in (0..reps.count()).step_by(97) {
            let rep = Cochain::from_support(&x, 1, reps.get(k)).unwrap();
            let image = coboundary(&x, &rep).unwrap();
            for _ in 0..8 {
                let mut member = rep.support().clone();
                for row in b.basis() {
                    if rng.gen_bool(0.5) {
                        member.xor_assign(row);
                    }
                }
                let member = Cochain::from_support(&x, 1, member).unwrap();
                assert_eq!(coboundary(&x, &member).unwrap(), image);
            }
        }
    }
}
