use super::{Graph, VertexSet};

/// All maximal cliques, by Bron–Kerbosch with Tomita pivoting over bitsets.
///
/// Output is sorted lexicographically by the sorted member lists. The graph
/// on zero vertices has the single maximal clique `∅`.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn expand(
    g: &Graph,
    clique: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(clique);
        }
        return;
    }
    // pivot maximising |P ∩ N(u)|
    let pivot = (candidates | excluded)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & candidates).len())
        .expect("candidates is nonempty");
    for v in candidates - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        expand(g, clique.with(v), candidates & nv, excluded & nv, out);
        candidates.remove(v);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all subsets.
    fn oracle(g: &Graph) -> Vec<VertexSet> {
        let n = g.vertex_count();
        let cliques: Vec<VertexSet> = (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_clique(s))
            .collect();
        let mut maximal: Vec<VertexSet> = cliques
            .iter()
            .copied()
            .filter(|&s| !cliques.iter().any(|&t| t != s && s.is_subset(t)))
            .collect();
        maximal.sort_by(|a, b| a.lex_cmp(*b));
        maximal
    }

    #[test]
    fn complete_graph_has_one_clique() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(maximal_cliques(&g), vec![g.vertices()]);
    }

    #[test]
    fn empty_graph_has_empty_clique() {
        let g = Graph::new(0).unwrap();
        assert_eq!(maximal_cliques(&g), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn independent_sets_of_c4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mis = c4.maximal_independent_sets();
        assert_eq!(mis, vec![VertexSet::from_bits(0b0101), VertexSet::from_bits(0b1010)]);
        assert_eq!(mis, oracle(&c4.complement()));
    }

    #[test]
    fn k_n_independent_sets_are_singletons() {
        let g = Graph::complete(4).unwrap();
        let mis = g.maximal_independent_sets();
        assert_eq!(mis, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_with_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(maximal_cliques(&g), oracle(&g));
        }
    }
}
