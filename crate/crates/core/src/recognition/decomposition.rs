use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

pub const MAX_VD_VERTICES: usize = 16;
pub const MAX_SHELLING_FACETS: usize = 12;
pub const MAX_LEAF_ORDER_FACETS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    VertexDecomposable,
    Shellable,
    QuasiForest,
}

/// Recursive certificate of vertex decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SheddingTree {
    /// A simplex, `{∅}`, or the void complex.
    Simplex,
    Shed {
        vertex: usize,
        deletion: Box<SheddingTree>,
        link: Box<SheddingTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum DecompositionWitness {
    VertexDecomposable { tree: SheddingTree },
    Shelling { order: Vec<VertexSet> },
    LeafOrder { order: Vec<VertexSet> },
    /// Exhaustive search found no witness.
    Refuted { kind: DecompositionKind },
}

impl DecompositionWitness {
    pub fn holds(&self) -> bool {
        !matches!(self, DecompositionWitness::Refuted { .. })
    }

    pub fn kind(&self) -> DecompositionKind {
        match self {
            DecompositionWitness::VertexDecomposable { .. } => DecompositionKind::VertexDecomposable,
            DecompositionWitness::Shelling { .. } => DecompositionKind::Shellable,
            DecompositionWitness::LeafOrder { .. } => DecompositionKind::QuasiForest,
            DecompositionWitness::Refuted { kind } => *kind,
        }
    }

    /// Replays a positive witness against `complex`; refutations are not
    /// checkable and return `false`.
    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        match self {
            DecompositionWitness::VertexDecomposable { tree } => {
                check_tree(complex.facets(), tree)
            }
            DecompositionWitness::Shelling { order } => is_shelling_order(complex, order),
            DecompositionWitness::LeafOrder { order } => is_leaf_order(complex, order),
            DecompositionWitness::Refuted { .. } => false,
        }
    }
}

fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.lex_cmp(*b));
    kept
}

fn deletion(facets: &[VertexSet], v: usize) -> Vec<VertexSet> {
    maximal(facets.iter().map(|f| f.without(v)).collect())
}

fn link(facets: &[VertexSet], v: usize) -> Vec<VertexSet> {
    maximal(
        facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect(),
    )
}

fn vertices(facets: &[VertexSet]) -> VertexSet {
    facets.iter().fold(VertexSet::EMPTY, |a, &f| a | f)
}

fn is_shedding(facets: &[VertexSet], v: usize) -> bool {
    let lk = link(facets, v);
    deletion(facets, v).iter().all(|f| !lk.contains(f))
}

/// Relabels the vertices in increasing order to `0, 1, ...`; facets sorted.
fn canonical(facets: &[VertexSet]) -> Vec<u64> {
    let vs = vertices(facets).to_vec();
    let mut key: Vec<u64> = facets
        .iter()
        .map(|f| {
            vs.iter()
                .enumerate()
                .filter(|(_, &v)| f.contains(v))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    key.sort_unstable();
    key
}

fn decomposable(facets: &[VertexSet], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if facets.len() <= 1 {
        return true;
    }
    let key = canonical(facets);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let result = vertices(facets).iter().any(|v| {
        is_shedding(facets, v)
            && decomposable(&link(facets, v), memo)
            && decomposable(&deletion(facets, v), memo)
    });
    memo.insert(key, result);
    result
}

fn build_tree(facets: &[VertexSet], memo: &mut HashMap<Vec<u64>, bool>) -> SheddingTree {
    if facets.len() <= 1 {
        return SheddingTree::Simplex;
    }
    for v in vertices(facets) {
        let (lk, del) = (link(facets, v), deletion(facets, v));
        if is_shedding(facets, v) && decomposable(&lk, memo) && decomposable(&del, memo) {
            return SheddingTree::Shed {
                vertex: v,
                deletion: Box::new(build_tree(&del, memo)),
                link: Box::new(build_tree(&lk, memo)),
            };
        }
    }
    unreachable!("called on a decomposable complex")
}

fn check_tree(facets: &[VertexSet], tree: &SheddingTree) -> bool {
    match tree {
        SheddingTree::Simplex => facets.len() <= 1,
        SheddingTree::Shed {
            vertex,
            deletion: del,
            link: lk,
        } => {
            vertices(facets).contains(*vertex)
                && is_shedding(facets, *vertex)
                && check_tree(&deletion(facets, *vertex), del)
                && check_tree(&link(facets, *vertex), lk)
        }
    }
}

/// Searches for a shedding-vertex decomposition (non-pure sense: `v` is
/// shedding when no facet of `link(v)` is a facet of `del(v)`).
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<DecompositionWitness> {
    let n = complex.vertices().len();
    if n > MAX_VD_VERTICES {
        return Err(Error::VertexCapExceeded {
            what: "vertex decomposability",
            n,
            cap: MAX_VD_VERTICES,
        });
    }
    let mut memo = HashMap::new();
    Ok(if decomposable(complex.facets(), &mut memo) {
        DecompositionWitness::VertexDecomposable {
            tree: build_tree(complex.facets(), &mut memo),
        }
    } else {
        DecompositionWitness::Refuted {
            kind: DecompositionKind::VertexDecomposable,
        }
    })
}

fn is_permutation_of_facets(complex: &SimplicialComplex, order: &[VertexSet]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort_by(|a, b| a.lex_cmp(*b));
    sorted == complex.facets()
}

/// `F_j` can follow `earlier` in a shelling: for every earlier `F_i` some
/// `v ∈ F_j \ F_i` has `F_j \ {v}` inside an earlier facet.
fn shells_after(f: VertexSet, earlier: &[VertexSet]) -> bool {
    let ridge_vertices: VertexSet = f
        .iter()
        .filter(|&v| earlier.iter().any(|e| f.without(v).is_subset(*e)))
        .collect();
    earlier.iter().all(|e| (f - *e).intersects(ridge_vertices))
}

pub fn is_shelling_order(complex: &SimplicialComplex, order: &[VertexSet]) -> bool {
    is_permutation_of_facets(complex, order)
        && (1..order.len()).all(|j| shells_after(order[j], &order[..j]))
}

/// `F` is a leaf of `⟨earlier, F⟩`: some earlier facet contains the
/// intersection of `F` with every earlier facet.
fn leaf_after(f: VertexSet, earlier: &[VertexSet]) -> bool {
    earlier.is_empty()
        || earlier
            .iter()
            .any(|m| earlier.iter().all(|e| (*e & f).is_subset(*m & f)))
}

pub fn is_leaf_order(complex: &SimplicialComplex, order: &[VertexSet]) -> bool {
    is_permutation_of_facets(complex, order)
        && (1..order.len()).all(|j| leaf_after(order[j], &order[..j]))
}

/// Depth-first search for an order in which each facet may follow the set
/// of facets before it; feasibility only depends on that set.
fn search_order(
    facets: &[VertexSet],
    fits: impl Fn(VertexSet, &[VertexSet]) -> bool,
) -> Option<Vec<VertexSet>> {
    fn walk(
        facets: &[VertexSet],
        placed: u64,
        order: &mut Vec<usize>,
        failed: &mut HashSet<u64>,
        fits: &dyn Fn(VertexSet, &[VertexSet]) -> bool,
    ) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        if failed.contains(&placed) {
            return false;
        }
        let earlier: Vec<VertexSet> = order.iter().map(|&i| facets[i]).collect();
        for i in 0..facets.len() {
            if placed >> i & 1 == 0 && fits(facets[i], &earlier) {
                order.push(i);
                if walk(facets, placed | 1 << i, order, failed, fits) {
                    return true;
                }
                order.pop();
            }
        }
        failed.insert(placed);
        false
    }
    let mut order = Vec::new();
    walk(facets, 0, &mut order, &mut HashSet::new(), &fits)
        .then(|| order.iter().map(|&i| facets[i]).collect())
}

pub fn is_shellable(complex: &SimplicialComplex) -> Result<DecompositionWitness> {
    let facets = complex.facets().len();
    if facets > MAX_SHELLING_FACETS {
        return Err(Error::FacetCapExceeded {
            what: "shellability",
            facets,
            cap: MAX_SHELLING_FACETS,
        });
    }
    Ok(match search_order(complex.facets(), shells_after) {
        Some(order) => DecompositionWitness::Shelling { order },
        None => DecompositionWitness::Refuted {
            kind: DecompositionKind::Shellable,
        },
    })
}

pub fn quasi_forest_leaf_order(complex: &SimplicialComplex) -> Result<DecompositionWitness> {
    let facets = complex.facets().len();
    if facets > MAX_LEAF_ORDER_FACETS {
        return Err(Error::FacetCapExceeded {
            what: "leaf order",
            facets,
            cap: MAX_LEAF_ORDER_FACETS,
        });
    }
    Ok(match search_order(complex.facets(), leaf_after) {
        Some(order) => DecompositionWitness::LeafOrder { order },
        None => DecompositionWitness::Refuted {
            kind: DecompositionKind::QuasiForest,
        },
    })
}
