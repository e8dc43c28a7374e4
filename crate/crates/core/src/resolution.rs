//! Graded Betti numbers of `K[Δ_G] = R/I(G)` through Hochster's formula, and
//! the invariants read off the table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{FVector, HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::{is_prime, rank, Field, ModP, SparseRow};
use crate::Rational;

/// Largest vertex count accepted by [`betti_table`].
pub const DEFAULT_BETTI_CAP: usize = 16;

/// Coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::NotPrime(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c = s
            .trim()
            .parse()
            .map_err(|_| Error::parse("field", format!("expected 0 or a prime, got {s:?}")))?;
        FieldSpec::new(c)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "QQ")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

/// Reduced homology ranks; entry `k` is the rank in dimension `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedHomology(pub Vec<usize>);

impl ReducedHomology {
    pub fn rank(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

/// Boundary-matrix ranks for faces grouped by size, over the field whose unit
/// is `one`.
fn homology_ranks_in<F: Field>(by_size: &[Vec<VertexSet>], one: F) -> Vec<usize> {
    if by_size.is_empty() {
        return vec![0];
    }
    // boundary_rank[s]: rank of the boundary map out of faces of size s
    let mut boundary_rank = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        let index: HashMap<VertexSet, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let rows = by_size[s].iter().map(|&face| {
            let mut row: SparseRow<F> = face
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { one.clone() } else { -one.clone() };
                    (index[&face.without(v)], sign)
                })
                .collect();
            row.sort_by_key(|&(c, _)| c);
            row
        });
        boundary_rank[s] = rank(rows);
    }
    (0..by_size.len())
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

fn homology_ranks(by_size: &[Vec<VertexSet>], field: FieldSpec) -> Vec<usize> {
    match field.characteristic {
        0 => homology_ranks_in(by_size, Rational::one()),
        p => homology_ranks_in(by_size, ModP::new(1, p as u64)),
    }
}

/// Ranks of `H̃_k(Δ; K)` for `k = -1, ..., dim Δ`. The void complex has no
/// homology at all; `{∅}` has rank 1 in dimension `-1`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
    ReducedHomology(homology_ranks(&complex.faces_by_size(), field))
}

/// Independent subsets of `w`, grouped by size.
fn independent_sets_by_size(g: &Graph, w: VertexSet) -> Vec<Vec<VertexSet>> {
    let mut out: Vec<Vec<VertexSet>> = vec![Vec::new()];
    let mut stack = vec![(VertexSet::EMPTY, w)];
    while let Some((face, candidates)) = stack.pop() {
        if out.len() <= face.len() {
            out.resize(face.len() + 1, Vec::new());
        }
        out[face.len()].push(face);
        for v in candidates {
            let rest = candidates & !VertexSet::full(v + 1) - g.neighbors(v);
            stack.push((face.with(v), rest));
        }
    }
    for level in &mut out {
        level.sort_by(|a, b| a.lex_cmp(*b));
    }
    out
}

fn trim(mut ranks: Vec<usize>) -> Vec<usize> {
    while ranks.len() > 1 && ranks.last() == Some(&0) {
        ranks.pop();
    }
    ranks
}

/// Components of the complement of `G[w]`.
fn co_components(g: &Graph, w: VertexSet) -> Vec<VertexSet> {
    let mut rest = w;
    let mut out = Vec::new();
    while let Some(start) = rest.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let next = (w - g.neighbors(v)).without(v) - comp;
            comp |= next;
            frontier |= next;
        }
        rest = rest - comp;
        out.push(comp);
    }
    out
}

/// Reduced homology of `Δ_{G[w]}` (entry `k` is dimension `k - 1`).
///
/// A disconnected `G[w]` gives a join, whose homology is the convolution of
/// the parts; a disconnected complement gives a disjoint union. Pieces that
/// split neither way are computed directly and cached.
fn induced_homology(
    g: &Graph,
    w: VertexSet,
    field: FieldSpec,
    cache: &mut HashMap<VertexSet, Vec<usize>>,
) -> Vec<usize> {
    if w.is_empty() {
        return vec![1];
    }
    if w.len() == 1 {
        return vec![0];
    }
    if let Some(r) = cache.get(&w) {
        return r.clone();
    }
    let parts = g.components_within(w);
    let ranks = if parts.len() > 1 {
        parts.iter().fold(vec![1], |acc, &p| {
            let b = induced_homology(g, p, field, cache);
            let mut out = vec![0; acc.len() + b.len() - 1];
            for (i, &x) in acc.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        })
    } else {
        let co = co_components(g, w);
        if co.len() > 1 {
            let mut out = vec![0, co.len() - 1];
            for &p in &co {
                let b = induced_homology(g, p, field, cache);
                if out.len() < b.len() {
                    out.resize(b.len(), 0);
                }
                for (k, &r) in b.iter().enumerate().skip(1) {
                    out[k] += r;
                }
            }
            out
        } else {
            homology_ranks(&independent_sets_by_size(g, w), field)
        }
    };
    let ranks = trim(ranks);
    cache.insert(w, ranks.clone());
    ranks
}

/// One nonzero graded Betti number `β_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub rank: u64,
}

/// Graded Betti numbers `β_{i,j}` of `K[Δ_G]` for `i ≥ 1`; `β_{0,0} = 1` is
/// implicit. Entries are sorted by `(i, j)` and all ranks are positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n: usize,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_map(n: usize, map: BTreeMap<(usize, usize), u64>) -> Self {
        let entries = map
            .into_iter()
            .filter(|&(_, r)| r > 0)
            .map(|((i, j), rank)| BettiEntry { i, j, rank })
            .collect();
        BettiTable { n, entries }
    }

    /// Number of variables of the polynomial ring.
    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        if (i, j) == (0, 0) {
            return 1;
        }
        self.entries
            .binary_search_by_key(&(i, j), |e| (e.i, e.j))
            .map(|k| self.entries[k].rank)
            .unwrap_or(0)
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        if i == 0 {
            return 1;
        }
        self.entries.iter().filter(|e| e.i == i).map(|e| e.rank).sum()
    }

    pub fn pdim(&self) -> usize {
        self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }

    /// `max{j - i}`, and 0 when there are no relations.
    pub fn reg(&self) -> usize {
        self.entries.iter().map(|e| e.j - e.i).max().unwrap_or(0)
    }

    /// `n - pdim`.
    pub fn depth(&self) -> usize {
        self.n - self.pdim()
    }

    /// Every entry sits at `j = i + 1`.
    pub fn is_2linear(&self) -> bool {
        self.entries.iter().all(|e| e.j == e.i + 1)
    }
}

/// Rows `j - i`, columns `i`, in the usual Betti diagram layout.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.pdim() + 1;
        let rows = self.reg() + 1;
        let cell = |i: usize, j: usize| match self.get(i, j) {
            0 => ".".to_string(),
            r => r.to_string(),
        };
        let width = (0..cols)
            .flat_map(|i| (0..rows).map(move |k| (i, k)))
            .map(|(i, k)| cell(i, i + k).len())
            .chain((0..cols).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        write!(f, "    ")?;
        for i in 0..cols {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..cols {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for k in 0..rows {
            write!(f, "{k:>5}:")?;
            for i in 0..cols {
                write!(f, " {:>width$}", cell(i, i + k))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Betti table of `R/I(G)` by Hochster's formula
/// `β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_{G[W]})`.
pub fn betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with_cap(g, field, DEFAULT_BETTI_CAP)
}

pub fn betti_table_with_cap(g: &Graph, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::VertexCapExceeded {
            what: "betti_table",
            n,
            cap,
        });
    }
    let map = (1u64..1u64 << n)
        .into_par_iter()
        .map_init(HashMap::new, |cache, bits| {
            let w = VertexSet::from_bits(bits);
            // an isolated vertex of G[W] is a cone point of Δ_{G[W]}
            if w.iter().any(|v| !g.neighbors(v).intersects(w)) {
                return (w, Vec::new());
            }
            (w, induced_homology(g, w, field, cache))
        })
        .fold(BTreeMap::new, |mut acc, (w, ranks)| {
            let j = w.len();
            for (k, &r) in ranks.iter().enumerate() {
                // k indexes dimension k - 1, so i = j - 1 - (k - 1)
                if r > 0 {
                    *acc.entry((j - k, j)).or_insert(0u64) += r as u64;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, r) in b {
                *a.entry(key).or_insert(0) += r;
            }
            a
        });
    Ok(BettiTable::from_map(n, map))
}

pub fn pdim(g: &Graph, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(g, field)?.pdim())
}

pub fn reg(g: &Graph, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(g, field)?.reg())
}

pub fn depth(g: &Graph, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(g, field)?.depth())
}

/// Hilbert-series bookkeeping for `K[Δ_G]`. `s` is the degree of the
/// h-polynomial `h_0 + h_1 t + ... + h_s t^s`, the numerator of the Hilbert
/// series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub f: FVector,
    pub h: HVector,
    pub krull_dim: usize,
    pub s: usize,
    pub a_invariant: i64,
}

pub fn hilbert_data(g: &Graph) -> HilbertData {
    complex_hilbert_data(&SimplicialComplex::independence(g))
}

pub fn complex_hilbert_data(complex: &SimplicialComplex) -> HilbertData {
    let f = complex.f_vector();
    let h = f.h_vector();
    let krull_dim = f.krull_dimension();
    let s = h.degree().unwrap_or(0);
    HilbertData {
        f,
        h,
        krull_dim,
        s,
        a_invariant: s as i64 - krull_dim as i64,
    }
}

/// `(dim - depth) - (s - reg)` from a precomputed table.
pub fn eq1_residual(table: &BettiTable, hilbert: &HilbertData) -> i64 {
    (hilbert.krull_dim as i64 - table.depth() as i64) - (hilbert.s as i64 - table.reg() as i64)
}

/// `(dim K[Δ_G] - depth) - (deg h-polynomial - reg)`; nonnegative, and zero
/// when `G` is co-chordal.
pub fn check_eq1(g: &Graph, field: FieldSpec) -> Result<i64> {
    Ok(eq1_residual(&betti_table(g, field)?, &hilbert_data(g)))
}

pub fn has_2linear_resolution(g: &Graph, field: FieldSpec) -> Result<bool> {
    Ok(betti_table(g, field)?.is_2linear())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    const QQ: FieldSpec = FieldSpec::RATIONALS;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn homology_conventions() {
        let void = SimplicialComplex::void(2);
        assert!(reduced_homology_ranks(&void, QQ).is_acyclic());
        let empty = SimplicialComplex::empty(2);
        assert_eq!(reduced_homology_ranks(&empty, QQ).rank(-1), 1);

        let two = SimplicialComplex::from_facets(4, vec![set(&[0, 2]), set(&[1, 3])]).unwrap();
        assert_eq!(reduced_homology_ranks(&two, QQ).0, vec![0, 1, 0]);

        let hollow =
            SimplicialComplex::from_facets(3, vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])])
                .unwrap();
        assert_eq!(reduced_homology_ranks(&hollow, QQ).0, vec![0, 0, 1]);
        assert!(reduced_homology_ranks(&SimplicialComplex::simplex(4), QQ).is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let rp2 = SimplicialComplex::from_facets(6, tris.iter().map(|t| set(t)).collect()).unwrap();
        let q = reduced_homology_ranks(&rp2, QQ);
        let f2 = reduced_homology_ranks(&rp2, FieldSpec::new(2).unwrap());
        assert!(q.is_acyclic());
        assert_eq!(f2.rank(1), 1);
        assert_eq!(f2.rank(2), 1);
    }

    #[test]
    fn single_edge() {
        let t = betti_table(&named::path(2), QQ).unwrap();
        assert_eq!(t.entries(), &[BettiEntry { i: 1, j: 2, rank: 1 }]);
        assert_eq!((t.pdim(), t.reg(), t.depth()), (1, 1, 1));
    }

    #[test]
    fn edgeless_graph() {
        let t = betti_table(&Graph::new(3).unwrap(), QQ).unwrap();
        assert!(t.entries().is_empty());
        assert_eq!((t.pdim(), t.reg(), t.depth()), (0, 0, 3));
    }

    #[test]
    fn four_cycle() {
        // the complement 2K2 is chordal, so the resolution is linear
        let t = betti_table(&named::cycle(4), QQ).unwrap();
        let expected = [(1, 2, 4), (2, 3, 4), (3, 4, 1)];
        let got: Vec<_> = t.entries().iter().map(|e| (e.i, e.j, e.rank)).collect();
        assert_eq!(got, expected);
        assert!(t.is_2linear());
        assert_eq!(t.depth(), 1);
    }

    #[test]
    fn barbell_complement() {
        let g = named::barbell(4).complement();
        let t = betti_table(&g, QQ).unwrap();
        assert_eq!(t.pdim(), 6);
        assert_eq!(t.depth(), 2);
        assert!(t.is_2linear());
        let h = hilbert_data(&g);
        assert_eq!((h.s, h.krull_dim, h.a_invariant), (3, 4, -1));
        assert_eq!(eq1_residual(&t, &h), 0);
    }

    #[test]
    fn example_two() {
        assert_eq!(depth(&named::fig3_g1(), QQ).unwrap(), 1);
        assert_eq!(pdim(&named::fig3_g1(), QQ).unwrap(), 3);
        assert_eq!(depth(&named::fig3_g2(), QQ).unwrap(), 3);
        assert_eq!(pdim(&named::fig3_g2(), QQ).unwrap(), 5);
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=7 {
            assert_eq!(pdim(&Graph::complete(n).unwrap(), QQ).unwrap(), n - 1);
        }
    }

    #[test]
    fn two_linear() {
        assert!(has_2linear_resolution(&named::path(2), QQ).unwrap());
        assert!(!has_2linear_resolution(&named::cycle(5), QQ).unwrap());
    }

    #[test]
    fn wheel_six_residual() {
        // W6: hub plus C5; the C5 part contributes a degree-5 syzygy
        let g = named::wheel(6);
        let t = betti_table(&g, QQ).unwrap();
        let h = hilbert_data(&g);
        assert_eq!(t.pdim(), 5);
        assert_eq!(t.reg(), 2);
        assert_eq!(h.krull_dim, 2);
        let r = eq1_residual(&t, &h);
        assert!(r >= 0);
        assert_eq!(r, check_eq1(&g, QQ).unwrap());
    }

    /// Hochster's sum with every restriction computed from its faces.
    fn direct_table(g: &Graph, field: FieldSpec) -> BettiTable {
        let mut map = BTreeMap::new();
        for bits in 1u64..1 << g.vertex_count() {
            let w = VertexSet::from_bits(bits);
            let ranks = homology_ranks(&independent_sets_by_size(g, w), field);
            for (k, &r) in ranks.iter().enumerate() {
                if r > 0 {
                    *map.entry((w.len() - k, w.len())).or_insert(0u64) += r as u64;
                }
            }
        }
        BettiTable::from_map(g.vertex_count(), map)
    }

    #[test]
    fn splitting_matches_direct_sum() {
        let graphs = [
            named::cycle(7),
            named::wheel(7),
            named::example_1(),
            named::barbell(3),
            named::fig5()[0].clone(),
            named::fig9(),
            named::cycle(6).disjoint_union(&named::path(2)).unwrap(),
        ];
        for g in &graphs {
            for field in [QQ, FieldSpec::new(2).unwrap()] {
                assert_eq!(betti_table(g, field).unwrap(), direct_table(g, field));
                assert_eq!(
                    betti_table(&g.complement(), field).unwrap(),
                    direct_table(&g.complement(), field)
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::new(17).unwrap();
        assert!(matches!(
            betti_table(&g, QQ),
            Err(Error::VertexCapExceeded { cap: 16, .. })
        ));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("0".parse::<FieldSpec>().unwrap(), QQ);
        assert_eq!("7".parse::<FieldSpec>().unwrap().characteristic(), 7);
        assert_eq!("4".parse::<FieldSpec>(), Err(Error::NotPrime(4)));
        assert!("x".parse::<FieldSpec>().is_err());
    }
}
