//! JSON shapes of command results. Rationals are `{num, den, approx}` and
//! cochains are lists of faces.

use cobound::applications::{GirthReport, SeidelReport, TensorReport};
use cobound::expansion::{ExpansionResult, MuResult};
use cobound::tester::{Certificate, SampleStats, TesterReport};
use cobound::{Cochain, Complex, Rational};
use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<'a, R: Serialize> {
    pub command: &'a str,
    pub version: &'a str,
    pub params: Value,
    pub result: R,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required_log2: Option<u32>,
}

#[derive(Serialize, Clone, Copy, Debug)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
    pub approx: ApproxString,
}

/// Decimal rendering, six places. Never parsed back.
#[derive(Clone, Copy, Debug)]
pub struct ApproxString(f64);

impl Serialize for ApproxString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{:.6}", self.0))
    }
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        let (num, den) = (*r.numer(), *r.denom());
        RationalJson { num, den, approx: ApproxString(num as f64 / den as f64) }
    }
}

pub type FaceList = Vec<Vec<usize>>;

pub fn faces(x: &Complex, f: &Cochain) -> FaceList {
    f.faces(x).map(|face| face.vertices().to_vec()).collect()
}

#[derive(Serialize)]
pub struct Generated {
    pub f_vector: Vec<usize>,
    pub maximal_faces: usize,
    pub out: Option<String>,
}

#[derive(Serialize)]
pub struct DimEntry {
    pub i: isize,
    pub faces: usize,
    pub cohomology: usize,
    pub homology: usize,
}

#[derive(Serialize)]
pub struct Info {
    pub vertices: usize,
    pub dim: isize,
    pub f_vector: Vec<usize>,
    pub dims: Vec<DimEntry>,
}

#[derive(Serialize)]
pub struct EpsilonJson {
    pub i: usize,
    pub epsilon: RationalJson,
    pub witness: FaceList,
    pub witness_dist: usize,
    pub witness_coboundary_weight: usize,
    pub cosets_enumerated: u64,
    pub h_nonzero: bool,
}

impl EpsilonJson {
    pub fn new(x: &Complex, r: &ExpansionResult) -> Self {
        EpsilonJson {
            i: r.i,
            epsilon: r.epsilon.into(),
            witness: faces(x, &r.witness),
            witness_dist: r.witness_dist,
            witness_coboundary_weight: r.witness_coboundary_weight,
            cosets_enumerated: r.cosets_enumerated,
            h_nonzero: r.h_nonzero,
        }
    }
}

#[derive(Serialize)]
pub struct MuJson {
    pub i: usize,
    pub mu: RationalJson,
    pub beta: FaceList,
    pub filling: FaceList,
    pub cosets_enumerated: u64,
}

impl MuJson {
    pub fn new(x: &Complex, r: &MuResult) -> Self {
        MuJson {
            i: r.i,
            mu: r.mu.into(),
            beta: faces(x, &r.beta),
            filling: faces(x, &r.filling),
            cosets_enumerated: r.cosets_enumerated,
        }
    }
}

#[derive(Serialize)]
pub struct SampleJson {
    pub trials: u64,
    pub seed: u64,
    pub rejections: u64,
    pub sampled_rate: RationalJson,
    pub wilson99: [f64; 2],
    pub total_queries: u64,
}

impl From<&SampleStats> for SampleJson {
    fn from(s: &SampleStats) -> Self {
        SampleJson {
            trials: s.trials,
            seed: s.seed,
            rejections: s.rejections,
            sampled_rate: s.sampled_rate.into(),
            wilson99: [s.wilson99.0, s.wilson99.1],
            total_queries: s.total_queries,
        }
    }
}

#[derive(Serialize)]
pub struct TesterJson {
    pub i: usize,
    pub queries: usize,
    pub exact_rate: RationalJson,
    pub sample: Option<SampleJson>,
    pub distance: Option<RationalJson>,
    pub distance_weight: Option<usize>,
    pub epsilon_bound: Option<RationalJson>,
    pub bound_satisfied: Option<bool>,
    pub budget: u64,
}

impl From<&TesterReport> for TesterJson {
    fn from(r: &TesterReport) -> Self {
        TesterJson {
            i: r.i,
            queries: r.queries,
            exact_rate: r.exact_rate.into(),
            sample: r.sample.as_ref().map(SampleJson::from),
            distance: r.distance.map(Into::into),
            distance_weight: r.distance_weight,
            epsilon_bound: r.epsilon_bound.map(Into::into),
            bound_satisfied: r.bound_satisfied,
            budget: r.budget,
        }
    }
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub leader: FaceList,
    pub rate: RationalJson,
    pub distance: RationalJson,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub i: usize,
    pub epsilon: RationalJson,
    pub cosets_checked: u64,
    pub equality_cosets: u64,
    pub equality_witness: FaceList,
    pub equality_rate: RationalJson,
    pub equality_distance: RationalJson,
    pub cohomology_witness: Option<FaceList>,
    pub violation: Option<ViolationJson>,
    pub passed: bool,
}

impl CertificateJson {
    pub fn new(x: &Complex, c: &Certificate) -> Self {
        CertificateJson {
            i: c.i,
            epsilon: c.epsilon.into(),
            cosets_checked: c.cosets_checked,
            equality_cosets: c.equality_cosets,
            equality_witness: faces(x, &c.equality_witness),
            equality_rate: c.equality_rate.into(),
            equality_distance: c.equality_distance.into(),
            cohomology_witness: c.cohomology_witness.as_ref().map(|w| faces(x, w)),
            violation: c.first_violation.as_ref().map(|v| ViolationJson {
                leader: faces(x, &v.leader),
                rate: v.rate.into(),
                distance: v.distance.into(),
            }),
            passed: c.passed,
        }
    }
}

#[derive(Serialize)]
pub struct MembershipJson {
    pub member: bool,
    pub tester: TesterJson,
}

#[derive(Serialize)]
pub struct TensorJson {
    pub m: usize,
    pub member: bool,
    pub tester: TesterJson,
}

impl From<&TensorReport> for TensorJson {
    fn from(r: &TensorReport) -> Self {
        TensorJson { m: r.m, member: r.member, tester: (&r.tester).into() }
    }
}

#[derive(Serialize)]
pub struct SeidelJson {
    pub n: usize,
    pub equivalent: bool,
    pub switching_set: Option<Vec<usize>>,
    pub tester: TesterJson,
}

impl From<&SeidelReport> for SeidelJson {
    fn from(r: &SeidelReport) -> Self {
        SeidelJson { n: r.n, equivalent: r.equivalent, switching_set: r.switching_set.clone(), tester: (&r.tester).into() }
    }
}

#[derive(Serialize)]
pub struct GirthJson {
    pub girth: Option<usize>,
    pub cycle_space_dim: usize,
    pub scanned: bool,
    pub min_cycle_weight: Option<usize>,
    pub min_cycle: Option<FaceList>,
    pub required_log2: u32,
}

impl GirthJson {
    pub fn new(x: &Complex, r: &GirthReport) -> Self {
        GirthJson {
            girth: r.girth,
            cycle_space_dim: r.cycle_space_dim,
            scanned: r.min_cycle_weight.is_some(),
            min_cycle_weight: r.min_cycle_weight.flatten(),
            min_cycle: r.min_cycle.as_ref().map(|c| faces(x, c)),
            required_log2: r.required_log2,
        }
    }
}
