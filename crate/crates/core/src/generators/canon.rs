//! Canonical forms for isomorphism testing of small graphs.
//!
//! Individualisation–refinement: refine an ordered vertex partition to an
//! equitable one, branch on the first non-singleton cell, and keep the
//! largest adjacency key over all leaves. Within a cell only one vertex per
//! twin class is tried, since swapping twins is an automorphism that fixes
//! every individualised vertex.

use crate::graph::{Graph, VertexSet};

/// Adjacency rows of the canonically relabelled graph; two graphs are
/// isomorphic iff their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    rows: Vec<u64>,
}

/// Returns the canonical key and the relabelling (`perm[v]` is the new index
/// of `v`) that realises it.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.vertex_count();
    let twins = twin_classes(g);
    let mut best: Option<(CanonicalKey, Vec<usize>)> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, &twins, start, &mut best);
    best.unwrap_or((CanonicalKey { n: 0, rows: vec![] }, vec![]))
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).0
}

/// The canonically relabelled copy of `g`, with default labels.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    g.permuted(&perm).with_default_labels()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degrees().iter().sum::<usize>() == b.degrees().iter().sum::<usize>()
        && canonical_key(a) == canonical_key(b)
}

/// `class[v]`: smallest vertex `u` with `N(u) \ {v} = N(v) \ {u}`.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            (0..=v)
                .find(|&u| g.neighbors(u).without(v) == g.neighbors(v).without(u))
                .unwrap()
        })
        .collect()
}

/// Splits cells by neighbour counts into every cell until nothing changes.
/// The resulting cell order depends only on the isomorphism type of
/// `(g, partition)`.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (g.neighbors(v) & m).len()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(
    g: &Graph,
    twins: &[usize],
    cells: Vec<Vec<usize>>,
    best: &mut Option<(CanonicalKey, Vec<usize>)>,
) {
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let n = g.vertex_count();
        let mut perm = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = g.neighbors(v).iter().map(|u| 1u64 << perm[u]).sum();
        }
        let key = CanonicalKey { n, rows };
        if best.as_ref().map_or(true, |(b, _)| key > *b) {
            *best = Some((key, perm));
        }
        return;
    };
    let mut tried_classes = VertexSet::EMPTY;
    for &v in &cells[pos] {
        if tried_classes.contains(twins[v]) {
            continue;
        }
        tried_classes.insert(twins[v]);
        let mut split = cells.clone();
        let rest: Vec<usize> = cells[pos].iter().copied().filter(|&u| u != v).collect();
        split[pos] = vec![v];
        split.insert(pos + 1, rest);
        search(g, twins, refine(g, split), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use std::collections::HashSet;

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    /// Minimum adjacency key over all n! relabellings.
    fn brute_force_key(g: &Graph) -> Vec<u64> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.vertex_count();
        permutations(n)
            .into_iter()
            .map(|perm| {
                let mut rows = vec![0u64; n];
                for v in 0..n {
                    rows[perm[v]] = g.neighbors(v).iter().map(|u| 1u64 << perm[u]).sum();
                }
                rows
            })
            .min()
            .unwrap()
    }

    #[test]
    fn isomorphism_classes_match_brute_force() {
        for n in 1..=5 {
            let graphs = all_graphs(n);
            let fast: Vec<CanonicalKey> = graphs.iter().map(canonical_key).collect();
            let slow: Vec<Vec<u64>> = graphs.iter().map(brute_force_key).collect();
            for i in 0..graphs.len() {
                for j in (i + 1..graphs.len()).step_by(3) {
                    assert_eq!(fast[i] == fast[j], slow[i] == slow[j]);
                }
            }
            let classes: HashSet<_> = fast.into_iter().collect();
            let expected = [1, 2, 4, 11, 34][n - 1];
            assert_eq!(classes.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn relabelled_copies_share_keys() {
        let g = named::fig3_g2();
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        assert!(is_isomorphic(&g, &g.permuted(&perm)));
        let [a, b] = named::fig5();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        let g = named::example_1();
        let c = canonical_graph(&g);
        assert!(is_isomorphic(&g, &c));
        assert_eq!(canonical_graph(&c), c);
    }

    #[test]
    fn large_cliques_stay_cheap() {
        let g = Graph::complete(20).unwrap();
        assert_eq!(canonical_graph(&g), g);
    }
}
