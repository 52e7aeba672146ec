//! The `i`-cocycle tester: pick a uniform `(i+1)`-cell `F` and accept iff
//! `δf(F) = 0`, reading only the `i + 2` facets of `F`.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cochain::{coboundary, Cochain};
use crate::cohomology::{distance_in, is_coboundary, SpaceCache};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::expansion::{check_tester_index, epsilon_with};
use crate::linalg::{ratio, Rational};

/// Trials per PRNG substream. Batch `b` uses stream `b` of the seeded
/// generator, so counts do not depend on scheduling.
pub const BATCH: u64 = 4096;

/// Two-sided 99% normal quantile used by [`wilson_interval`].
pub const Z99: f64 = 2.5758293035489004;

fn check_cochain(x: &Complex, f: &Cochain) -> Result<usize> {
    let i = usize::try_from(f.dim()).map_err(|_| Error::mismatch("a cochain of dimension >= 0", f.dim()))?;
    check_tester_index(x, i)?;
    Ok(i)
}

/// `‖δf‖`, the probability that the tester rejects `f`.
pub fn exact_rejection_probability(x: &Complex, f: &Cochain) -> Result<Rational> {
    let i = check_cochain(x, f)?;
    let df = coboundary(x, f)?;
    Ok(ratio(df.weight(), x.face_count(i as isize + 1)))
}

/// Read access to a cochain that counts every coordinate looked at.
pub struct QueryOracle<'a> {
    f: &'a Cochain,
    queries: AtomicU64,
}

impl<'a> QueryOracle<'a> {
    pub fn new(f: &'a Cochain) -> Self {
        QueryOracle { f, queries: AtomicU64::new(0) }
    }

    pub fn query(&self, k: usize) -> bool {
        self.queries.fetch_add(1, Ordering::Relaxed);
        self.f.get(k)
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

/// One round of the tester on the `cell`-th `(i+1)`-face. Returns `true` on
/// rejection.
pub fn tester_round(x: &Complex, oracle: &QueryOracle<'_>, cell: usize) -> bool {
    let i = oracle.f.dim();
    x.facet_indices(i + 1, cell).iter().fold(false, |acc, &k| acc ^ oracle.query(k))
}

/// Wilson score interval for `successes / trials` at normal quantile `z`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleStats {
    pub trials: u64,
    pub seed: u64,
    pub rejections: u64,
    pub sampled_rate: Rational,
    pub wilson99: (f64, f64),
    /// Coordinates of `f` read over all trials; always `trials * (i + 2)`.
    pub total_queries: u64,
}

impl SampleStats {
    pub fn covers(&self, rate: Rational) -> bool {
        let r = *rate.numer() as f64 / *rate.denom() as f64;
        self.wilson99.0 <= r && r <= self.wilson99.1
    }
}

/// Runs `trials` independent rounds with cells drawn from ChaCha8 seeded by `seed`.
pub fn sample_tester(x: &Complex, f: &Cochain, trials: u64, seed: u64) -> Result<SampleStats> {
    let i = check_cochain(x, f)?;
    if trials == 0 {
        return Err(Error::mismatch("at least one trial", 0));
    }
    let cells = x.face_count(i as isize + 1);
    let oracle = QueryOracle::new(f);
    let rejections: u64 = (0..trials.div_ceil(BATCH))
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let n = BATCH.min(trials - b * BATCH);
            (0..n).filter(|_| tester_round(x, &oracle, rng.gen_range(0..cells))).count() as u64
        })
        .sum();
    Ok(SampleStats {
        trials,
        seed,
        rejections,
        sampled_rate: Rational::new(rejections as i64, trials as i64),
        wilson99: wilson_interval(rejections, trials, Z99),
        total_queries: oracle.queries(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestMode {
    Exact,
    Sampled { trials: u64, seed: u64 },
}

/// Where the constant in `rate >= c · dist` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// Compute `ε_i(X)` by coset enumeration.
    Computed,
    /// Use a known lower bound on `ε_i(X)`.
    Given(Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TesterReport {
    pub i: usize,
    /// Coordinates read per round, `i + 2`.
    pub queries: usize,
    pub exact_rate: Rational,
    pub sample: Option<SampleStats>,
    /// `dist(f, B^i) / |X(i)|`, absent when over budget.
    pub distance: Option<Rational>,
    pub distance_weight: Option<usize>,
    pub epsilon_bound: Option<Rational>,
    /// `exact_rate >= epsilon_bound · distance`, when both are known.
    pub bound_satisfied: Option<bool>,
    pub budget: u64,
}

impl TesterReport {
    /// Whether `f` is a cocycle, i.e. the tester never rejects.
    pub fn accepts_always(&self) -> bool {
        self.exact_rate == Rational::from_integer(0)
    }
}

/// Exact rejection rate, optional sampling, and the distance and bound fields
/// when the budget allows. Budget overruns blank the exact-distance fields
/// instead of failing.
pub fn run_cocycle_tester(x: &Complex, f: &Cochain, mode: TestMode, budget: u64) -> Result<TesterReport> {
    run_cocycle_tester_with(x, f, mode, budget, BoundSource::Computed)
}

pub fn run_cocycle_tester_with(x: &Complex, f: &Cochain, mode: TestMode, budget: u64, bound: BoundSource) -> Result<TesterReport> {
    let i = check_cochain(x, f)?;
    let exact_rate = exact_rejection_probability(x, f)?;
    let sample = match mode {
        TestMode::Exact => None,
        TestMode::Sampled { trials, seed } => Some(sample_tester(x, f, trials, seed)?),
    };
    let cache = SpaceCache::new(x);
    let distance = over_budget_as_none(cache.coboundaries(i as isize).and_then(|b| distance_in(x, b, f, budget)))?;
    let epsilon_bound = match bound {
        BoundSource::Given(c) => Some(c),
        BoundSource::Computed => over_budget_as_none(epsilon_with(&cache, i, budget).map(|r| r.epsilon))?,
    };
    let bound_satisfied = match (&distance, epsilon_bound) {
        (Some(d), Some(e)) => Some(exact_rate >= e * d.normalized),
        _ => None,
    };
    Ok(TesterReport {
        i,
        queries: i + 2,
        exact_rate,
        sample,
        distance_weight: distance.as_ref().map(|d| d.dist),
        distance: distance.map(|d| d.normalized),
        epsilon_bound,
        bound_satisfied,
        budget,
    })
}

fn over_budget_as_none<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A coset whose rejection rate falls below `ε_i` times its distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundViolation {
    pub leader: Cochain,
    pub rate: Rational,
    pub distance: Rational,
}

/// Exhaustive check that the cocycle tester rejects every `f` with
/// probability at least `ε_i(X) · dist(f, B^i) / |X(i)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub i: usize,
    pub epsilon: Rational,
    pub cosets_checked: u64,
    /// Cosets meeting the bound with equality.
    pub equality_cosets: u64,
    /// Leader of the `ε_i` minimizer; its coset attains equality.
    pub equality_witness: Cochain,
    pub equality_rate: Rational,
    pub equality_distance: Rational,
    /// A cocycle outside `B^i`, present exactly when `H^i != 0`.
    pub cohomology_witness: Option<Cochain>,
    pub first_violation: Option<BoundViolation>,
    pub passed: bool,
}

pub fn testability_certificate(x: &Complex, i: usize, budget: u64) -> Result<Certificate> {
    let cache = SpaceCache::new(x);
    let eps = epsilon_with(&cache, i, budget)?;
    let b = cache.coboundaries(i as isize)?;
    let reps = b.coset_representatives(budget)?;
    let (cells, above) = (x.face_count(i as isize), x.face_count(i as isize + 1));
    let check = |k: u64| -> Result<(bool, Option<BoundViolation>)> {
        let rep = reps.get(k);
        let dist = b.coset_min_weight(&rep, budget)?;
        let rep = Cochain::from_support(x, i as isize, rep)?;
        let rate = ratio(coboundary(x, &rep)?.weight(), above);
        let distance = ratio(dist.weight, cells);
        let floor = eps.epsilon * distance;
        if rate < floor {
            let leader = Cochain::from_support(x, i as isize, dist.leader)?;
            return Ok((false, Some(BoundViolation { leader, rate, distance })));
        }
        Ok((rate == floor, None))
    };
    let outcomes: Vec<(bool, Option<BoundViolation>)> = (1..reps.count()).into_par_iter().map(check).collect::<Result<_>>()?;
    let equality_cosets = outcomes.iter().filter(|(eq, _)| *eq).count() as u64;
    let first_violation = outcomes.into_iter().find_map(|(_, v)| v);
    let equality_rate = exact_rejection_probability(x, &eps.witness)?;
    let equality_distance = ratio(eps.witness_dist, cells);
    let cohomology_witness = if eps.h_nonzero && !is_coboundary(x, &eps.witness)? { Some(eps.witness.clone()) } else { None };
    let passed = first_violation.is_none() && equality_cosets > 0 && equality_rate == eps.epsilon * equality_distance;
    Ok(Certificate {
        i,
        epsilon: eps.epsilon,
        cosets_checked: reps.count() - 1,
        equality_cosets,
        equality_witness: eps.witness,
        equality_rate,
        equality_distance,
        cohomology_witness,
        first_violation,
        passed,
    })
}
