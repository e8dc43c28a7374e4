use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::graph::{maximal_cliques, Chordality, Graph, VertexSet};

/// Results of the two necessary conditions on `G` for `Ḡ` to be a
/// (d1,...,dq)-tree with at least two maximal cliques: every maximum-degree
/// vertex of `G` is free and shedding in `Δ_G`, and the maximum-degree vertices
/// are pairwise adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenReport {
    pub max_degree: usize,
    pub max_vertices: Vec<usize>,
    pub not_free: Vec<usize>,
    pub not_shedding: Vec<usize>,
    pub non_adjacent: Vec<(usize, usize)>,
}

impl ScreenReport {
    pub fn free_and_shedding(&self) -> bool {
        self.not_free.is_empty() && self.not_shedding.is_empty()
    }

    pub fn max_degree_adjacent(&self) -> bool {
        self.non_adjacent.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.free_and_shedding() && self.max_degree_adjacent()
    }

    /// First failure in words, using the labels of `g`.
    pub fn failure(&self, g: &Graph) -> Option<String> {
        if let Some(&v) = self.not_free.first() {
            return Some(format!(
                "{} has maximum degree {} but is not a free vertex of the independence complex",
                g.label(v),
                self.max_degree
            ));
        }
        if let Some(&v) = self.not_shedding.first() {
            return Some(format!(
                "{} has maximum degree {} but is not a shedding vertex of the independence complex",
                g.label(v),
                self.max_degree
            ));
        }
        self.non_adjacent.first().map(|&(u, v)| {
            format!(
                "{} and {} are non-adjacent vertices of maximum degree {}",
                g.label(u),
                g.label(v),
                self.max_degree
            )
        })
    }
}

pub fn necessary_screens(g: &Graph) -> ScreenReport {
    let (max_degree, best) = g.max_degree();
    let delta = SimplicialComplex::independence(g);
    let free = delta.free_vertices();
    let max_vertices = best.to_vec();
    let not_free = best.iter().filter(|&v| !free.contains(v)).collect();
    let not_shedding = best.iter().filter(|&v| !delta.is_shedding(v)).collect();
    let mut non_adjacent = Vec::new();
    for (i, &u) in max_vertices.iter().enumerate() {
        for &v in &max_vertices[i + 1..] {
            if !g.has_edge(u, v) {
                non_adjacent.push((u, v));
            }
        }
    }
    ScreenReport {
        max_degree,
        max_vertices,
        not_free,
        not_shedding,
        non_adjacent,
    }
}

/// Gluing step `i ≥ 2`: `vertex` is the new vertex of `F_i` and
/// `F_i \ {vertex} ⊆ F_host` with `host < i` (indices into the build order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Glue {
    pub vertex: usize,
    pub host: usize,
}

/// Build order `F_1, ..., F_q` of a (d1,...,dq)-tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeWitness {
    pub facets: Vec<VertexSet>,
    pub glue: Vec<Glue>,
}

impl TreeWitness {
    /// `(d_1, ..., d_q)`.
    pub fn sequence(&self) -> Vec<usize> {
        self.facets.iter().map(|f| f.len()).collect()
    }

    /// `d_q`.
    pub fn last_size(&self) -> usize {
        self.facets.last().map_or(0, |f| f.len())
    }

    /// Rebuilds the graph on `n` vertices from `K_{d_1}` by the recorded
    /// gluings, checking every step; `None` if a step is invalid.
    pub fn replay(&self, n: usize) -> Option<Graph> {
        let first = *self.facets.first()?;
        if self.glue.len() + 1 != self.facets.len() || first.is_empty() {
            return None;
        }
        let mut g = Graph::new(n).ok()?;
        let mut used = VertexSet::EMPTY;
        let add_clique = |g: &mut Graph, f: VertexSet| {
            for u in f {
                for v in f {
                    if u < v {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
        };
        if first.max_member()? >= n {
            return None;
        }
        add_clique(&mut g, first);
        used |= first;
        for (i, step) in self.glue.iter().enumerate() {
            let f = self.facets[i + 1];
            let prev = self.facets[i];
            if f.len() > prev.len() || !f.contains(step.vertex) || used.contains(step.vertex) {
                return None;
            }
            if step.host > i || !f.without(step.vertex).is_subset(self.facets[step.host]) {
                return None;
            }
            if f.max_member()? >= n {
                return None;
            }
            add_clique(&mut g, f);
            used |= f;
        }
        (used == VertexSet::full(n)).then_some(g)
    }

    pub fn verify(&self, g: &Graph) -> bool {
        self.replay(g.vertex_count())
            .is_some_and(|h| h.same_edges(g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Rejection {
    NotChordal { cycle: Vec<usize> },
    CountMismatch {
        vertices: usize,
        facets: usize,
        max_facet: usize,
    },
    NoValidPeeling,
    NecessaryConditionFailure { detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TreeCertificate {
    Accepted(TreeWitness),
    Rejected(Rejection),
}

impl TreeCertificate {
    pub fn is_accepted(&self) -> bool {
        matches!(self, TreeCertificate::Accepted(_))
    }

    pub fn witness(&self) -> Option<&TreeWitness> {
        match self {
            TreeCertificate::Accepted(w) => Some(w),
            TreeCertificate::Rejected(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            TreeCertificate::Accepted(_) => None,
            TreeCertificate::Rejected(r) => Some(r),
        }
    }
}

/// Decides whether `h` is a (d1,...,dq)-tree.
///
/// The last facet built is a smallest facet with a vertex in no other facet,
/// the rest of it lying inside another facet. Undoing such steps until a
/// single facet remains recovers a build order; dead ends are backtracked.
pub fn recognize_dq_tree(h: &Graph) -> TreeCertificate {
    let n = h.vertex_count();
    if n == 0 {
        return TreeCertificate::Rejected(Rejection::NoValidPeeling);
    }
    if let Chordality::NotChordal { cycle } = h.chordality() {
        return TreeCertificate::Rejected(Rejection::NotChordal { cycle });
    }
    let facets = maximal_cliques(h);
    if facets.len() >= 2 {
        let g = h.complement();
        if let Some(detail) = necessary_screens(&g).failure(&g) {
            return TreeCertificate::Rejected(Rejection::NecessaryConditionFailure { detail });
        }
    }
    let max_facet = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    if n != max_facet + facets.len() - 1 {
        return TreeCertificate::Rejected(Rejection::CountMismatch {
            vertices: n,
            facets: facets.len(),
            max_facet,
        });
    }
    let mut failed = HashSet::new();
    let mut steps = Vec::new();
    let all = if facets.len() == 64 {
        u64::MAX
    } else {
        (1u64 << facets.len()) - 1
    };
    if !peel(&facets, all, &mut failed, &mut steps) {
        return TreeCertificate::Rejected(Rejection::NoValidPeeling);
    }
    // steps lists (facet, new vertex, host facet) from last built to second
    let root = all & !steps.iter().fold(0u64, |m, s| m | 1 << s.0);
    let mut order = vec![root.trailing_zeros() as usize];
    order.extend(steps.iter().rev().map(|s| s.0));
    let position = |f: usize| order.iter().position(|&o| o == f).unwrap();
    let glue = steps
        .iter()
        .rev()
        .map(|&(_, vertex, host)| Glue {
            vertex,
            host: position(host),
        })
        .collect();
    TreeCertificate::Accepted(TreeWitness {
        facets: order.iter().map(|&i| facets[i]).collect(),
        glue,
    })
}

fn peel(
    facets: &[VertexSet],
    live: u64,
    failed: &mut HashSet<u64>,
    steps: &mut Vec<(usize, usize, usize)>,
) -> bool {
    if live.count_ones() == 1 {
        return true;
    }
    if failed.contains(&live) {
        return false;
    }
    let ids: Vec<usize> = (0..facets.len()).filter(|&i| live >> i & 1 == 1).collect();
    let smallest = ids.iter().map(|&i| facets[i].len()).min().unwrap();
    for &i in ids.iter().filter(|&&i| facets[i].len() == smallest) {
        let others = ids
            .iter()
            .filter(|&&j| j != i)
            .fold(VertexSet::EMPTY, |acc, &j| acc | facets[j]);
        let free = facets[i] - others;
        // one new vertex per step
        if free.len() != 1 {
            continue;
        }
        let x = free.first().unwrap();
        let rest = facets[i].without(x);
        let Some(&host) = ids
            .iter()
            .find(|&&j| j != i && rest.is_subset(facets[j]))
        else {
            continue;
        };
        steps.push((i, x, host));
        if peel(facets, live & !(1 << i), failed, steps) {
            return true;
        }
        steps.pop();
    }
    failed.insert(live);
    false
}
