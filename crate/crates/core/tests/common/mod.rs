//! Brute-force oracles and the shared test corpus. Nothing here calls into the
//! library's linear algebra: incidences come from vertex lists and spaces are
//! enumerated element by element.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use cobound::{Complex, Rational};

pub const BUDGET: u64 = 1 << 24;

/// Index of every `i`-face by vertex list.
fn face_index(x: &Complex, i: isize) -> HashMap<Vec<usize>, usize> {
    x.faces(i).iter().enumerate().map(|(k, f)| (f.vertices().to_vec(), k)).collect()
}

/// `δ_i f` on bitmasks, from the definition: `(δf)(F)` sums `f` over the
/// faces obtained by deleting one vertex of `F`.
pub fn naive_coboundary(x: &Complex, i: isize, f: u64) -> u64 {
    let index = face_index(x, i);
    let mut out = 0u64;
    for (k, face) in x.faces(i + 1).iter().enumerate() {
        let vs = face.vertices();
        let mut bit = 0u64;
        for drop in 0..vs.len() {
            let facet: Vec<usize> = vs.iter().enumerate().filter(|&(j, _)| j != drop).map(|(_, &v)| v).collect();
            bit ^= (f >> index[&facet]) & 1;
        }
        out |= bit << k;
    }
    out
}

/// `B^i` as an explicit set: `δ_{i-1}` of every `(i-1)`-cochain.
pub fn naive_coboundaries(x: &Complex, i: isize) -> Vec<u64> {
    let below = x.face_count(i - 1);
    assert!(below <= 22, "naive coboundary enumeration too large");
    let set: HashSet<u64> = (0u64..(1 << below)).map(|g| naive_coboundary(x, i - 1, g)).collect();
    let mut v: Vec<u64> = set.into_iter().collect();
    v.sort_unstable();
    v
}

pub fn naive_dist(b: &[u64], f: u64) -> u32 {
    b.iter().map(|&w| (w ^ f).count_ones()).min().unwrap()
}

/// `min ‖δf‖ / ‖[f]‖` over every `f ∉ B^i`, or `None` when `B^i = C^i`.
pub fn naive_epsilon(x: &Complex, i: usize) -> Option<Rational> {
    let i = i as isize;
    let cells = x.face_count(i);
    let above = x.face_count(i + 1);
    assert!(cells <= 20 && above <= 64);
    let b = naive_coboundaries(x, i);
    let members: HashSet<u64> = b.iter().copied().collect();
    let mut best: Option<Rational> = None;
    for f in 0u64..(1 << cells) {
        if members.contains(&f) {
            continue;
        }
        let num = naive_coboundary(x, i, f).count_ones() as i64 * cells as i64;
        let den = naive_dist(&b, f) as i64 * above as i64;
        let r = Rational::new(num, den);
        best = Some(best.map_or(r, |c| c.min(r)));
    }
    best
}

/// `(|V|/|E|) min_A |E(A, Ā)| / min(|A|, |Ā|)` over proper non-empty `A`.
pub fn cheeger_by_subsets(n: usize, edges: &[(usize, usize)]) -> Rational {
    let mut best: Option<Rational> = None;
    for a in 1u64..(1 << n) - 1 {
        let inside = |v: usize| (a >> v) & 1 == 1;
        let cut = edges.iter().filter(|&&(u, v)| inside(u) != inside(v)).count();
        let size = a.count_ones() as usize;
        let r = Rational::new((n * cut) as i64, (edges.len() * size.min(n - size)) as i64);
        best = Some(best.map_or(r, |c| c.min(r)));
    }
    best.unwrap()
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Complex {
    Complex::with_vertices(n, edges.iter().map(|&(u, v)| vec![u, v])).unwrap()
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|k| (k.min((k + 1) % n), k.max((k + 1) % n))).collect()
}

pub fn cube_edges() -> Vec<(usize, usize)> {
    (0..8usize).flat_map(|a| (0..3).map(move |b| (a, a ^ (1 << b)))).filter(|&(a, b)| a < b).collect()
}

pub fn petersen_edges() -> Vec<(usize, usize)> {
    let outer = (0..5).map(|k| (k, (k + 1) % 5));
    let spokes = (0..5).map(|k| (k, k + 5));
    let inner = (0..5).map(|k| (5 + k, 5 + (k + 2) % 5));
    outer.chain(spokes).chain(inner).map(|(a, b)| (a.min(b), a.max(b))).collect()
}

/// One triangle glued into the complete graph on four vertices.
pub fn one_triangle_on_k4() -> Complex {
    Complex::from_maximal_faces([vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]).unwrap()
}

/// Six-vertex real projective plane.
pub fn projective_plane() -> Complex {
    Complex::from_maximal_faces([
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 1, 5],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4],
        vec![2, 4, 5],
        vec![1, 3, 5],
    ])
    .unwrap()
}

/// Seven-vertex torus.
pub fn torus() -> Complex {
    Complex::from_maximal_faces((0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])).unwrap()
}

pub fn octahedron() -> Complex {
    let mut faces = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                faces.push(vec![a, b, c]);
            }
        }
    }
    Complex::from_maximal_faces(faces).unwrap()
}

/// Named complexes used across the integration tests.
pub fn corpus() -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> = Vec::new();
    for n in 2..=7 {
        out.push((format!("K{n}"), Complex::complete(n, 1).unwrap()));
    }
    for n in 4..=6 {
        out.push((format!("K{n}^(2)"), Complex::complete(n, 2).unwrap()));
    }
    out.push(("K5^(3)".into(), Complex::complete(5, 3).unwrap()));
    out.push(("two disjoint edges".into(), graph(4, &[(0, 1), (2, 3)])));
    out.push(("edge plus isolated vertex".into(), graph(3, &[(0, 1)])));
    out.push(("two triangles".into(), graph(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])));
    out.push(("path P5".into(), graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])));
    out.push(("star S4".into(), graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])));
    for n in 3..=8 {
        out.push((format!("C{n}"), graph(n, &cycle_edges(n))));
    }
    out.push(("3-cube".into(), graph(8, &cube_edges())));
    out.push(("Petersen".into(), graph(10, &petersen_edges())));
    out.push(("K3,3".into(), graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])));
    out.push(("one triangle on K4".into(), one_triangle_on_k4()));
    out.push(("octahedron".into(), octahedron()));
    out.push(("projective plane".into(), projective_plane()));
    out.push(("torus".into(), torus()));
    out.push(("bowtie".into(), Complex::from_maximal_faces([vec![0, 1, 2], vec![0, 3, 4]]).unwrap()));
    out.push(("triangle with tail".into(), Complex::from_maximal_faces([vec![0, 1, 2], vec![2, 3], vec![3, 4]]).unwrap()));
    for seed in 0..8 {
        out.push((format!("G(8,1/2) seed {seed}"), Complex::random(8, 1, Rational::new(1, 2), seed).unwrap()));
    }
    for seed in 0..8 {
        out.push((format!("X(5,2,1/2) seed {seed}"), Complex::random(5, 2, Rational::new(1, 2), seed).unwrap()));
        out.push((format!("X(6,2,1/3) seed {seed}"), Complex::random(6, 2, Rational::new(1, 3), seed).unwrap()));
    }
    for seed in 0..4 {
        out.push((format!("X(5,3,1/2) seed {seed}"), Complex::random(5, 3, Rational::new(1, 2), seed).unwrap()));
    }
    out
}
