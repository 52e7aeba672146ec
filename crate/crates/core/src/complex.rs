//! Finite simplicial complexes with a canonical per-dimension face order.
//!
//! Faces of each dimension are kept sorted lexicographically by vertex
//! sequence; that order is the coordinate order of every cochain. The empty
//! face is always present, so `X(-1) = {∅}`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Rational;

pub type Vertex = usize;

/// A face given by strictly increasing vertex ids. Dimension is `len - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Sorts the vertices; rejects repeated vertices.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Face> {
        let original = vertices.clone();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertexInFace(original));
        }
        Ok(Face(vertices))
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The codimension-one faces, in the order of the removed vertex.
    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(self.0.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect())
        })
    }

    /// This face with `v` added.
    pub fn with_vertex(&self, v: Vertex) -> Result<Face> {
        let mut vs = self.0.clone();
        vs.push(v);
        Face::new(vs)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face{:?}", self.0)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// A downward-closed family of faces. Immutable once built.
#[derive(Clone)]
pub struct Complex {
    vertex_count: usize,
    // faces[i + 1] holds X(i), sorted.
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
    // facets[i + 1][k] = indices in X(i - 1) of the facets of faces[i + 1][k].
    facets: Vec<Vec<Vec<usize>>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.faces == other.faces
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("vertex_count", &self.vertex_count)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

impl Complex {
    /// Downward closure of the given faces.
    pub fn from_maximal_faces<I, F>(faces: I) -> Result<Complex>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<Vertex>>,
    {
        let mut by_dim: Vec<BTreeSet<Face>> = vec![BTreeSet::new()];
        let mut stack = Vec::new();
        let mut any = false;
        for raw in faces {
            any = true;
            let raw: Vec<Vertex> = raw.into();
            if raw.is_empty() {
                return Err(Error::EmptyFace);
            }
            stack.push(Face::new(raw)?);
        }
        if !any {
            return Err(Error::EmptyInput);
        }
        by_dim[0].insert(Face::empty());
        while let Some(face) = stack.pop() {
            let slot = face.0.len();
            if by_dim.len() <= slot {
                by_dim.resize_with(slot + 1, BTreeSet::new);
            }
            if by_dim[slot].contains(&face) {
                continue;
            }
            if slot > 1 {
                stack.extend(face.facets());
            }
            by_dim[slot].insert(face);
        }
        Ok(Self::from_sorted(by_dim.into_iter().map(|s| s.into_iter().collect()).collect()))
    }

    /// Like [`Complex::from_maximal_faces`], additionally adding every vertex
    /// `0..vertex_count` as a face.
    pub fn with_vertices<I, F>(vertex_count: usize, faces: I) -> Result<Complex>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<Vertex>>,
    {
        let listed: Vec<Vec<Vertex>> = faces.into_iter().map(Into::into).collect();
        if let Some(&v) = listed.iter().flatten().find(|&&v| v >= vertex_count) {
            return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
        }
        Self::from_maximal_faces((0..vertex_count).map(|v| vec![v]).chain(listed))
    }

    /// `faces[i + 1]` must be the sorted list X(i), downward closed.
    fn from_sorted(mut faces: Vec<Vec<Face>>) -> Complex {
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        let index: Vec<HashMap<Face, usize>> =
            faces.iter().map(|fs| fs.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect()).collect();
        let facets = faces
            .iter()
            .enumerate()
            .map(|(slot, fs)| {
                if slot == 0 {
                    return vec![Vec::new()];
                }
                fs.iter().map(|f| f.facets().map(|g| index[slot - 1][&g]).collect()).collect()
            })
            .collect();
        let vertex_count = faces.get(1).and_then(|vs| vs.last()).map_or(0, |v| v.0[0] + 1);
        Complex { vertex_count, faces, index, facets }
    }

    /// `K_n^(d)`: all subsets of `{0, ..., n-1}` with at most `d + 1` elements.
    pub fn complete(n: usize, d: usize) -> Result<Complex> {
        if d >= n {
            return Err(Error::InvalidDimension(format!("K_n^(d) needs d < n, got n = {n}, d = {d}")));
        }
        let faces = (0..=d + 1).map(|size| (0..n).combinations(size).map(Face).collect()).collect();
        Ok(Self::from_sorted(faces))
    }

    /// All faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Result<Complex> {
        if k as isize > self.dim() {
            return Err(Error::InvalidDimension(format!("skeleton {k} of a complex of dimension {}", self.dim())));
        }
        Ok(Complex {
            vertex_count: self.vertex_count,
            faces: self.faces[..k + 2].to_vec(),
            index: self.index[..k + 2].to_vec(),
            facets: self.facets[..k + 2].to_vec(),
        })
    }

    /// The full `(d-1)`-skeleton of `K_n^(d)` plus each `d`-face independently
    /// with probability `p`, drawn from ChaCha8 seeded with `seed`.
    pub fn random(n: usize, d: usize, p: Rational, seed: u64) -> Result<Complex> {
        if p < Rational::from_integer(0) || p > Rational::from_integer(1) {
            return Err(Error::InvalidProbability(p.to_string()));
        }
        let full = Self::complete(n, d)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (num, den) = (*p.numer() as u64, *p.denom() as u64);
        let mut faces = full.faces.clone();
        let top = faces.pop().unwrap_or_default();
        faces.push(top.into_iter().filter(|_| rng.gen_range(0..den) < num).collect());
        Ok(Self::from_sorted(faces))
    }

    /// One plus the largest vertex id.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Largest `i` with `X(i)` non-empty (`-1` for `{∅}`).
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// `X(i)` in canonical order; empty outside `-1..=dim`.
    pub fn faces(&self, i: isize) -> &[Face] {
        usize::try_from(i + 1).ok().and_then(|s| self.faces.get(s)).map_or(&[], Vec::as_slice)
    }

    pub fn face_count(&self, i: isize) -> usize {
        self.faces(i).len()
    }

    pub fn face(&self, i: isize, k: usize) -> &Face {
        &self.faces(i)[k]
    }

    /// Position of `face` in `X(dim face)`.
    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.index.get(face.0.len()).and_then(|m| m.get(face).copied())
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index_of(face).is_some()
    }

    /// Indices in `X(i - 1)` of the facets of the `k`-th face of `X(i)`.
    pub fn facet_indices(&self, i: isize, k: usize) -> &[usize] {
        &self.facets[(i + 1) as usize][k]
    }

    /// `(|X(0)|, ..., |X(dim)|)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().skip(1).map(Vec::len).collect()
    }

    /// Faces not contained in any larger face, by dimension then lexicographically.
    pub fn maximal_faces(&self) -> Vec<Face> {
        let mut covered: Vec<Vec<bool>> = self.faces.iter().map(|fs| vec![false; fs.len()]).collect();
        for slot in 2..self.faces.len() {
            for ks in &self.facets[slot] {
                for &k in ks {
                    covered[slot - 1][k] = true;
                }
            }
        }
        (1..self.faces.len())
            .flat_map(|slot| {
                let covered = &covered[slot];
                self.faces[slot].iter().enumerate().filter(|(k, _)| !covered[*k]).map(|(_, f)| f.clone())
            })
            .collect()
    }

    /// Returns `n` when this complex is exactly `K_n^(d)`.
    pub fn complete_order(&self, d: usize) -> Option<usize> {
        if self.dim() != d as isize {
            return None;
        }
        let n = self.face_count(0);
        let labelled = self.faces(0).iter().enumerate().all(|(k, f)| f.0 == [k]);
        let counts = (0..=d).all(|i| self.face_count(i as isize) == binomial(n, i + 1));
        (labelled && counts).then_some(n)
    }

    /// Vertex ids of `X(0)` in order.
    pub fn vertex_ids(&self) -> Vec<Vertex> {
        self.faces(0).iter().map(|f| f.0[0]).collect()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}
