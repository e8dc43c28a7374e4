use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Global minimum edge cut size.
///
/// `value` is 0 with `connected == false` for disconnected graphs. Complete
/// graphs report `K_n ↦ n − 1`, and graphs with at most one vertex report 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeConnectivity {
    pub value: usize,
    pub connected: bool,
}

/// Unit-capacity max flow between `s` and `t` by BFS augmenting paths.
fn max_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    // residual[u][v]: remaining capacity u -> v; each undirected edge is a
    // pair of opposite unit arcs
    let mut residual = vec![vec![0i32; n]; n];
    for (u, v) in g.edges() {
        residual[u][v] = 1;
        residual[v][u] = 1;
    }
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n {
                if parent[v] == usize::MAX && residual[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            residual[u][v] -= 1;
            residual[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

impl Graph {
    /// Minimum over `t ≠ 0` of the max flow from vertex 0 to `t`; every
    /// global cut separates vertex 0 from some `t`.
    pub fn edge_connectivity(&self) -> EdgeConnectivity {
        let n = self.vertex_count();
        if n <= 1 {
            return EdgeConnectivity { value: 0, connected: true };
        }
        if !self.is_connected() {
            return EdgeConnectivity { value: 0, connected: false };
        }
        let value = (1..n).map(|t| max_flow(self, 0, t)).min().unwrap();
        EdgeConnectivity { value, connected: true }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::named;
    use proptest::prelude::*;

    /// Smallest number of crossing edges over all proper bipartitions.
    fn brute_force(g: &Graph) -> usize {
        let n = g.vertex_count();
        (1u64..(1 << (n - 1)))
            .map(|bits| {
                let side = VertexSet::from_bits(bits);
                g.edges()
                    .filter(|&(u, v)| side.contains(u) != side.contains(v))
                    .count()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn fig11_instances() {
        assert_eq!(named::fig11_g1().edge_connectivity().value, 1);
        assert_eq!(named::fig11_g2().edge_connectivity().value, 2);
    }

    #[test]
    fn path_and_complete() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_connectivity().value, 1);
        for n in 2..7 {
            assert_eq!(Graph::complete(n).unwrap().edge_connectivity().value, n - 1);
        }
    }

    #[test]
    fn disconnected_is_flagged() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            g.edge_connectivity(),
            EdgeConnectivity { value: 0, connected: false }
        );
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 2usize..9, bits in any::<u64>()) {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> (k % 64) & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            let ec = g.edge_connectivity();
            if g.is_connected() {
                prop_assert_eq!(ec.value, brute_force(&g));
                prop_assert!(ec.value <= g.min_degree());
            } else {
                prop_assert!(!ec.connected);
            }
        }
    }
}
