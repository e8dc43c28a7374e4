use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// Outcome of a chordality test, carrying a checkable certificate either way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chordality {
    /// Perfect elimination ordering: the later neighbours of every vertex form
    /// a clique.
    Chordal { peo: Vec<usize> },
    /// A shortest induced cycle of length at least four, in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Chordality::Chordal { peo } => is_perfect_elimination_ordering(g, peo),
            Chordality::NotChordal { cycle } => is_chordless_cycle(g, cycle),
        }
    }
}

pub(crate) fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n || order.iter().copied().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}

fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let members: VertexSet = cycle.iter().copied().collect();
    if k < 4 || members.len() != k {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &v)| {
        let prev = cycle[(i + k - 1) % k];
        let next = cycle[(i + 1) % k];
        g.neighbors(v) & members == VertexSet::singleton(prev).with(next)
    })
}

/// Maximum cardinality search visit order; its reverse is a perfect
/// elimination ordering exactly when the graph is chordal.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut numbered = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - numbered)
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & numbered).len(), std::cmp::Reverse(v)))
            .unwrap();
        numbered.insert(v);
        visit.push(v);
    }
    visit
}

/// Shortest induced cycle of length ≥ 4: for every vertex `u` and pair of
/// non-adjacent neighbours `a, b`, a shortest `a`–`b` path avoiding the rest of
/// `N[u]` closes a chordless cycle through `u`.
fn shortest_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for u in 0..g.vertex_count() {
        let nu = g.neighbors(u);
        for a in nu {
            for b in nu {
                if b <= a || g.has_edge(a, b) {
                    continue;
                }
                let allowed = g.vertices() - nu.with(u) | VertexSet::singleton(a).with(b);
                if let Some(path) = shortest_path(g, a, b, allowed) {
                    if best.as_ref().map_or(true, |c| path.len() + 1 < c.len()) {
                        let mut cycle = vec![u];
                        cycle.extend(path);
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = VertexSet::singleton(from);
    let mut frontier = vec![from];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in frontier {
            for w in (g.neighbors(v) & allowed) - seen {
                seen.insert(w);
                parent[w] = v;
                if w == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                next.push(w);
            }
        }
        frontier = next;
    }
    None
}

impl Graph {
    /// Chordality with certificate: a perfect elimination ordering, or a
    /// shortest chordless cycle of length at least four.
    pub fn chordality(&self) -> Chordality {
        let mut peo = maximum_cardinality_search(self);
        peo.reverse();
        if is_perfect_elimination_ordering(self, &peo) {
            Chordality::Chordal { peo }
        } else {
            let cycle = shortest_chordless_cycle(self)
                .expect("a graph without a perfect elimination ordering has a long induced cycle");
            Chordality::NotChordal { cycle }
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality().is_chordal()
    }
}
