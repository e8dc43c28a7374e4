//! Simplicial complexes given by their facets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph, VertexSet, MAX_VERTICES};

/// A simplicial complex on a labelled ambient vertex set.
///
/// The ambient set may contain ghost vertices that lie in no face; they arise
/// when a complex is restricted to a vertex subset. A complex with no facets is
/// the void complex; the complex whose only face is `∅` has the single facet
/// `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    ambient: VertexSet,
    facets: Vec<VertexSet>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Keeps the inclusion-maximal sets, sorted lexicographically, without repeats.
fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.lex_cmp(*b));
    kept
}

impl SimplicialComplex {
    /// Complex generated by `facets` over the vertices named in `labels`.
    /// Non-maximal generators are dropped.
    pub fn new(labels: Vec<String>, facets: Vec<VertexSet>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let ambient = VertexSet::full(n);
        for f in &facets {
            if let Some(v) = (*f - ambient).first() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(SimplicialComplex {
            labels,
            ambient,
            facets: maximal_sets(facets),
        })
    }

    /// Like [`SimplicialComplex::new`] with labels `x1..xn`.
    pub fn from_facets(n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        Self::new(default_labels(n), facets)
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            labels: default_labels(n),
            ambient: VertexSet::full(n),
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            labels: default_labels(n),
            ambient: VertexSet::full(n),
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            labels: default_labels(n),
            ambient: VertexSet::full(n),
            facets: vec![VertexSet::full(n)],
        }
    }

    /// Independence complex of `g`: its faces are the independent sets.
    pub fn independence(g: &Graph) -> Self {
        SimplicialComplex {
            labels: g.labels().to_vec(),
            ambient: g.vertices(),
            facets: g.maximal_independent_sets(),
        }
    }

    /// Clique complex of `g`: its faces are the cliques.
    pub fn clique(g: &Graph) -> Self {
        SimplicialComplex {
            labels: g.labels().to_vec(),
            ambient: g.vertices(),
            facets: maximal_cliques(g),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The ambient vertex set, ghosts included.
    pub fn ambient(&self) -> VertexSet {
        self.ambient
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc | f)
    }

    /// Ambient vertices lying in no face.
    pub fn ghost_vertices(&self) -> VertexSet {
        self.ambient - self.vertices()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `dim Δ`, or `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// `dim Δ + 1`, the Krull dimension of the Stanley–Reisner ring.
    pub fn krull_dimension(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn is_facet(&self, face: VertexSet) -> bool {
        self.facets.contains(&face)
    }

    /// `Δ|_W`: faces contained in `w`, over the ambient set `w`.
    pub fn restrict(&self, w: VertexSet) -> Self {
        let facets = if self.is_void() {
            Vec::new()
        } else {
            maximal_sets(self.facets.iter().map(|&f| f & w).collect())
        };
        SimplicialComplex {
            labels: self.labels.clone(),
            ambient: w & self.ambient,
            facets,
        }
    }

    /// `link_Δ(F) = {E ∈ Δ : E ∩ F = ∅, E ∪ F ∈ Δ}`.
    pub fn link(&self, face: VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace);
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|&f| f - face)
            .collect();
        Ok(SimplicialComplex {
            labels: self.labels.clone(),
            ambient: self.ambient - face,
            facets: maximal_sets(facets),
        })
    }

    /// `del_Δ(F) = {E ∈ Δ : E ∩ F = ∅}`.
    pub fn deletion(&self, face: VertexSet) -> Self {
        let facets = if self.is_void() {
            Vec::new()
        } else {
            maximal_sets(self.facets.iter().map(|&f| f - face).collect())
        };
        SimplicialComplex {
            labels: self.labels.clone(),
            ambient: self.ambient - face,
            facets,
        }
    }

    /// Number of facets containing `v`.
    pub fn facet_degree(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }

    /// Vertices in exactly one facet.
    pub fn free_vertices(&self) -> VertexSet {
        self.vertices()
            .iter()
            .filter(|&v| self.facet_degree(v) == 1)
            .collect()
    }

    /// `v` is shedding when no facet of its link is a facet of its deletion,
    /// equivalently every facet of the deletion is a facet of `Δ`.
    pub fn is_shedding(&self, v: usize) -> bool {
        self.vertices().contains(v)
            && self
                .deletion(VertexSet::singleton(v))
                .facets
                .iter()
                .all(|f| self.is_facet(*f))
    }

    /// Calls `visit` on every face, each exactly once, `∅` first.
    pub fn for_each_face(&self, mut visit: impl FnMut(VertexSet)) {
        if self.is_void() {
            return;
        }
        fn walk(face: VertexSet, containing: &[VertexSet], visit: &mut impl FnMut(VertexSet)) {
            visit(face);
            let above = match face.max_member() {
                Some(m) => !VertexSet::full(m + 1),
                None => !VertexSet::EMPTY,
            };
            let candidates = containing.iter().fold(VertexSet::EMPTY, |a, &f| a | f) & above;
            for v in candidates {
                let next: Vec<VertexSet> =
                    containing.iter().copied().filter(|f| f.contains(v)).collect();
                walk(face.with(v), &next, visit);
            }
        }
        walk(VertexSet::EMPTY, &self.facets, &mut visit);
    }

    /// Faces grouped by cardinality: entry `k` lists the faces of size `k`.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let mut out = vec![Vec::new(); self.krull_dimension() + 1];
        self.for_each_face(|f| out[f.len()].push(f));
        if self.is_void() {
            out.clear();
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = vec![0u64; self.krull_dimension() + 1];
        self.for_each_face(|face| f[face.len()] += 1);
        if self.is_void() {
            f.clear();
        }
        FVector(f)
    }

    pub fn h_vector(&self) -> HVector {
        self.f_vector().h_vector()
    }

    /// Facets rendered with labels, e.g. `{x1,x3}`.
    pub fn format_facets(&self) -> Vec<String> {
        self.facets
            .iter()
            .map(|f| {
                let names: Vec<&str> = f.iter().map(|v| self.labels[v].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect()
    }
}

/// Face counts: entry `k` is `f_{k-1}`, the number of faces with `k` vertices.
/// The void complex has the empty f-vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

/// `h_0, ..., h_d` for a complex of Krull dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i128>);

pub fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

impl FVector {
    /// `d`, the largest face size.
    pub fn krull_dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `h_i = Σ_{j≤i} (-1)^{i-j} C(d-j, d-i) f_{j-1}`.
    pub fn h_vector(&self) -> HVector {
        if self.0.is_empty() {
            return HVector(Vec::new());
        }
        let d = self.krull_dimension() as i128;
        let h = (0..=d)
            .map(|i| {
                (0..=i)
                    .map(|j| {
                        let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d - j, d - i) * self.0[j as usize] as i128
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }
}

impl HVector {
    pub fn krull_dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Degree of the h-polynomial `Σ h_i t^i`; `None` when it is zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&h| h != 0)
    }

    /// Inverse transform `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i`; `None` if some
    /// recovered count is negative.
    pub fn f_vector(&self) -> Option<FVector> {
        if self.0.is_empty() {
            return Some(FVector(Vec::new()));
        }
        let d = self.krull_dimension() as i128;
        (0..=d)
            .map(|j| {
                let v: i128 = (0..=j)
                    .map(|i| binomial(d - i, j - i) * self.0[i as usize])
                    .sum();
                u64::try_from(v).ok()
            })
            .collect::<Option<Vec<u64>>>()
            .map(FVector)
    }
}
