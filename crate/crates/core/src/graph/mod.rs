//! Finite simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one [`VertexSet`] bitmask per vertex, so most
//! neighbourhood computations are a handful of word operations. Vertices are
//! indexed `0..n` and carry a display label (default `x1`, ..., `xn`).

mod chordal;
mod cliques;
mod flow;
mod set;

pub use chordal::Chordality;
pub use cliques::maximal_cliques;
pub use flow::EdgeConnectivity;
pub use set::{Members, VertexSet};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `x1..xn`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_labels(default_labels(n))
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Graph {
            labels,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to a vertex set.
    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max_member() {
            Some(v) if v >= self.vertex_count() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            }),
            _ => Ok(()),
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    /// Degree of `v` in the induced subgraph on `within`.
    pub fn degree_within(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within).len()
    }

    /// Maximum degree together with every vertex attaining it. The edgeless
    /// and empty graphs report 0 (with all vertices, respectively none).
    pub fn max_degree(&self) -> (usize, VertexSet) {
        self.max_degree_within(self.vertices())
    }

    /// Maximum degree of the induced subgraph on `within`, with the attaining
    /// vertices.
    pub fn max_degree_within(&self, within: VertexSet) -> (usize, VertexSet) {
        let mut best = 0;
        let mut at = VertexSet::EMPTY;
        for v in within {
            let d = self.degree_within(v, within);
            if d > best {
                best = d;
                at = VertexSet::singleton(v);
            } else if d == best {
                at.insert(v);
            }
        }
        (best, at)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            labels: self.labels.clone(),
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &a)| (all - a).without(v))
                .collect(),
        }
    }

    /// `N(F)`: every vertex adjacent to some member of `F`.
    pub fn open_neighborhood(&self, f: VertexSet) -> Result<VertexSet> {
        self.check_set(f)?;
        Ok(f.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]))
    }

    /// `N[F] = N(F) ∪ F`.
    pub fn closed_neighborhood(&self, f: VertexSet) -> Result<VertexSet> {
        Ok(self.open_neighborhood(f)? | f)
    }

    /// First edge inside `f`, if any.
    pub fn edge_inside(&self, f: VertexSet) -> Option<(usize, usize)> {
        f.iter()
            .find_map(|u| (self.adj[u] & f).first().map(|v| (u.min(v), u.max(v))))
    }

    pub fn is_independent(&self, f: VertexSet) -> bool {
        self.edge_inside(f).is_none()
    }

    pub fn is_clique(&self, f: VertexSet) -> bool {
        f.iter().all(|v| f.without(v).is_subset(self.adj[v]))
    }

    /// True iff `F` is independent and `N[F] = V(G)`.
    pub fn is_maximal_independent(&self, f: VertexSet) -> bool {
        if self.check_set(f).is_err() || !self.is_independent(f) {
            return false;
        }
        let closed = f.iter().fold(f, |acc, v| acc | self.adj[v]);
        closed == self.vertices()
    }

    /// All maximal independent sets, ordered lexicographically by their
    /// sorted member lists.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        maximal_cliques(&self.complement())
    }

    /// `n` minus the smallest size of a maximal independent set, i.e. the
    /// largest size of a minimal vertex cover.
    pub fn bight(&self) -> usize {
        let smallest = self
            .maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .min()
            .unwrap_or(0);
        self.vertex_count() - smallest
    }

    /// Induced subgraph on `s`; vertices are renumbered in increasing order and
    /// keep their labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let kept = s.to_vec();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| index[u]).collect())
            .collect();
        Ok(Graph {
            labels: kept.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        })
    }

    /// `G \ S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        self.induced_subgraph(self.vertices() - s)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    /// Connected components of the induced subgraph on `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                next = (next & within) - comp;
                comp |= next;
                frontier = next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A vertex adjacent to every other vertex, if one exists.
    pub fn full_vertex(&self) -> Option<usize> {
        let all = self.vertices();
        (0..self.vertex_count()).find(|&v| self.adj[v].with(v) == all)
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`). Labels move
    /// with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { labels, adj }
    }

    /// Same edges with the default labels `x1..xn`.
    pub fn with_default_labels(&self) -> Graph {
        Graph {
            labels: default_labels(self.vertex_count()),
            adj: self.adj.clone(),
        }
    }

    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    /// Disjoint union; vertices of `other` follow those of `self`. Labels are
    /// reset to the defaults.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.vertex_count();
        let mut g = Graph::new(n + other.vertex_count())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n)?;
        }
        Ok(g)
    }

    /// Iterated deletion of closed neighbourhoods along the ordered
    /// independent set `order`.
    pub fn peel(&self, order: &[usize]) -> Result<PeelingTrace> {
        let mut seen = VertexSet::EMPTY;
        for &v in order {
            self.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        if let Some((u, v)) = self.edge_inside(seen) {
            return Err(Error::NotIndependent { u, v });
        }
        let mut residuals = vec![self.vertices()];
        let mut removed_neighbors = Vec::with_capacity(order.len());
        for &v in order {
            let current = *residuals.last().unwrap();
            let nbrs = self.adj[v] & current;
            removed_neighbors.push(nbrs);
            residuals.push(current - nbrs.with(v));
        }
        Ok(PeelingTrace {
            order: order.to_vec(),
            residuals,
            removed_neighbors,
        })
    }
}

/// The sequence `G_0 = G, G_i = G_{i-1} \ N_{G_{i-1}}[v_i]` for an ordered
/// independent set `v_1, ..., v_r`. Each `G_i` is kept as the vertex set of an
/// induced subgraph of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelingTrace {
    order: Vec<usize>,
    residuals: Vec<VertexSet>,
    removed_neighbors: Vec<VertexSet>,
}

impl PeelingTrace {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertex set of `G_i`, `0 <= i <= r`.
    pub fn residual(&self, i: usize) -> VertexSet {
        self.residuals[i]
    }

    pub fn residual_graph(&self, g: &Graph, i: usize) -> Graph {
        g.induced_subgraph(self.residuals[i])
            .expect("residual sets are subsets of the graph")
    }

    /// `N_{G_{i-1}}(v_i)` for `1 <= i <= r`.
    pub fn neighbors_at(&self, i: usize) -> VertexSet {
        self.removed_neighbors[i - 1]
    }

    /// `deg_{G_{i-1}}(v_i)` for `1 <= i <= r`.
    pub fn degree_at(&self, i: usize) -> usize {
        self.removed_neighbors[i - 1].len()
    }

    pub fn final_residual(&self) -> VertexSet {
        *self.residuals.last().unwrap()
    }

    pub fn ends_empty(&self) -> bool {
        self.final_residual().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set_of(labels).unwrap()
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(k4.complement().vertex_count(), 4);
    }

    #[test]
    fn complement_is_involution_on_example_graph() {
        let g = named::example_1();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_c4_is_two_disjoint_edges() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let edges: Vec<_> = c4.complement().edges().collect();
        // {x1,x3} and {x2,x4}
        assert_eq!(edges, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn closed_neighborhood_examples() {
        let g = named::example_1();
        let x1 = set(&g, &["x1"]);
        assert_eq!(g.closed_neighborhood(x1).unwrap(), set(&g, &["x1", "x2", "x4"]));
        assert_eq!(g.closed_neighborhood(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(g.closed_neighborhood(g.vertices()).unwrap(), g.vertices());
        assert!(matches!(
            g.closed_neighborhood(VertexSet::singleton(7)),
            Err(Error::VertexOutOfRange { vertex: 7, n: 7 })
        ));
    }

    #[test]
    fn peel_example_1() {
        let g = named::example_1();
        let order = [g.index_of("x1").unwrap(), g.index_of("x5").unwrap()];
        let trace = g.peel(&order).unwrap();
        assert_eq!(trace.residual(1), set(&g, &["x3", "x5", "x6", "x7"]));
        assert_eq!(trace.residual(2), set(&g, &["x7"]));
        let g1 = trace.residual_graph(&g, 1);
        assert_eq!(g1.edge_count(), 4);
        assert!(!trace.ends_empty());
    }

    #[test]
    fn peel_empty_order() {
        let g = named::example_1();
        let trace = g.peel(&[]).unwrap();
        assert!(trace.is_empty());
        assert_eq!(trace.residual(0), g.vertices());
    }

    #[test]
    fn peel_example_3_ends_empty() {
        let g = named::example_3();
        let order: Vec<usize> = ["x3", "x1", "x6"]
            .iter()
            .map(|l| g.index_of(l).unwrap())
            .collect();
        let trace = g.peel(&order).unwrap();
        assert!(trace.ends_empty());
        assert_eq!(trace.residual(1), set(&g, &["x1", "x6"]));
        assert_eq!(trace.residual(2), set(&g, &["x6"]));
    }

    #[test]
    fn peel_rejects_dependent_and_repeated_sets() {
        let g = named::example_1();
        assert_eq!(g.peel(&[0, 1]), Err(Error::NotIndependent { u: 0, v: 1 }));
        assert_eq!(g.peel(&[0, 0]), Err(Error::RepeatedVertex(0)));
        assert!(g.peel(&[9]).is_err());
    }

    #[test]
    fn maximal_independence_examples() {
        let g1 = named::example_1();
        assert!(!g1.is_maximal_independent(set(&g1, &["x1", "x5"])));
        let g3 = named::example_3();
        assert!(g3.is_maximal_independent(set(&g3, &["x3", "x1", "x6"])));
        let k1 = Graph::new(1).unwrap();
        assert!(!k1.is_maximal_independent(VertexSet::EMPTY));
        assert!(k1.is_maximal_independent(VertexSet::singleton(0)));
    }

    #[test]
    fn degree_queries() {
        let g = named::example_1();
        // x5 is adjacent to x2, x3, x4 and x6
        assert_eq!(g.degree(g.index_of("x5").unwrap()).unwrap(), 4);
        assert_eq!(g.edge_count(), 12);
        let (d, at) = g.max_degree();
        assert_eq!(d, 4);
        assert_eq!(at, set(&g, &["x2", "x3", "x4", "x5", "x6"]));
        let e = Graph::new(5).unwrap();
        assert!(e.degrees().iter().all(|&d| d == 0));
        assert_eq!(e.isolated_vertices(), e.vertices());
        assert!(g.degree(7).is_err());
    }

    #[test]
    fn barbell_complement_max_degree() {
        let g = named::barbell(4).complement();
        assert_eq!(g.max_degree().0, 4);
    }

    #[test]
    fn components_and_subgraphs() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(
            g.components(),
            vec![
                [0, 1, 2].into_iter().collect(),
                VertexSet::singleton(3),
                [4, 5].into_iter().collect()
            ]
        );
        assert!(!g.is_connected());
        let h = g.remove_vertices([1, 3].into_iter().collect()).unwrap();
        assert_eq!(h.labels(), &["x1", "x3", "x5", "x6"]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn full_vertex_detection() {
        assert_eq!(named::wheel(5).full_vertex(), Some(0));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.full_vertex(), None);
    }
}
