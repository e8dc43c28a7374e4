//! Fixed graphs drawn in the figures and examples, with a documented vertex
//! numbering. Labels are `x1..xn` in the order listed on each constructor.

use crate::graph::Graph;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    // 1-based edge lists, as in the figures
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &edges).expect("fixed graph is well formed")
}

/// The 7-vertex graph used for the peeling example (`G_1 = G \ N[x1]`,
/// `G_2 = G_1 \ N[x5]`). Same drawing as [`example_3`].
pub fn example_1() -> Graph {
    graph(
        7,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (2, 5),
            (5, 4),
            (3, 5),
            (5, 6),
            (2, 6),
            (4, 6),
            (3, 7),
            (6, 7),
        ],
    )
}

/// The max-process example graph; `x2..x6` all have degree 4.
pub fn example_3() -> Graph {
    example_1()
}

/// Two copies of `K_r` joined by the bridge `x1 x2`. The first clique is
/// `{x1, x3, ..., x_{r+1}}`, the second `{x2, x_{r+2}, ..., x_{2r}}`.
pub fn barbell(r: usize) -> Graph {
    assert!(r >= 2 && 2 * r <= 64, "barbell needs 2 <= r <= 32");
    let mut g = Graph::new(2 * r).unwrap();
    let first: Vec<usize> = std::iter::once(0).chain(2..r + 1).collect();
    let second: Vec<usize> = std::iter::once(1).chain(r + 1..2 * r).collect();
    for side in [&first, &second] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g.add_edge(0, 1).unwrap();
    g
}

/// Hub `x1` joined to every vertex of the cycle `x2 x3 ... xn x2`.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4, "a wheel needs a cycle of length at least 3");
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        g.add_edge(0, v).unwrap();
        let next = if v + 1 == n { 1 } else { v + 1 };
        g.add_edge(v, next).unwrap();
    }
    g
}

/// The cycle `x1 x2 ... xn x1`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// The path `x1 x2 ... xn`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Triangle `x1 x2 x3` plus triangle `x2 x3 x4`: the (3,3)-tree `K_4 − e`.
pub fn fig2_33_tree() -> Graph {
    graph(4, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3)])
}

/// Triangle `x1 x2 x3` with the pendant edge `x3 x4`: a (3,2)-tree.
pub fn fig2_32_tree() -> Graph {
    graph(4, &[(1, 2), (2, 3), (3, 1), (3, 4)])
}

/// Triangles `x1 x2 x3` and `x3 x5 x4` sharing `x3`: chordal, not a
/// (d1,...,dq)-tree.
pub fn fig2_bowtie() -> Graph {
    graph(5, &[(1, 2), (2, 3), (3, 1), (3, 5), (5, 4), (4, 3)])
}

/// `G_1` of the depth example; its complement is a (2,2,1)-tree.
pub fn fig3_g1() -> Graph {
    fig2_32_tree()
}

/// `G_2` of the depth example: `K_4` on `x1..x4` with the four "ear"
/// vertices `x5 ~ {x2,x3}`, `x6 ~ {x1,x4}`, `x7 ~ {x1,x2}`, `x8 ~ {x3,x4}`.
/// Its complement is a (4,3,3,3,3)-tree.
pub fn fig3_g2() -> Graph {
    graph(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (1, 3),
            (2, 4),
            (5, 2),
            (5, 3),
            (6, 1),
            (6, 4),
            (7, 1),
            (7, 2),
            (8, 3),
            (8, 4),
        ],
    )
}

/// The wheel `W_5`; the hub is `x1`.
pub fn fig4() -> Graph {
    wheel(5)
}

/// The two non-isomorphic (3,3,2)-trees: `K_4 − e` on `x1..x4` with a pendant
/// at a degree-2 vertex (`x4 x5`) and at a degree-3 vertex (`x3 x5`).
pub fn fig5() -> [Graph; 2] {
    [
        graph(5, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3), (4, 5)]),
        graph(5, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3), (3, 5)]),
    ]
}

/// Triangle `x1 x2 x3`, path `x3 x4 x5`, triangle `x5 x6 x7`. The vertex the
/// figure calls `x` is `x4`.
pub fn fig6() -> Graph {
    graph(
        7,
        &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
    )
}

/// `K_4 − {x1 x2}` on `x1..x4` plus the isolated vertex `x5` (the figure's
/// `x`). The component's complement is a (2,1,1)-tree.
pub fn fig9() -> Graph {
    graph(5, &[(1, 3), (3, 2), (2, 4), (4, 1), (3, 4)])
}

/// A star complete graph: hub `x6` with `K_2 = {x1,x5}`, `K_3 = {x2,x3,x7}`
/// and `K_1 = {x4}` attached.
pub fn fig10() -> Graph {
    graph(
        7,
        &[
            (1, 6),
            (6, 5),
            (5, 1),
            (2, 6),
            (6, 3),
            (3, 7),
            (7, 2),
            (3, 2),
            (4, 6),
            (7, 6),
        ],
    )
}

/// The (3,2)-tree of the connectivity example.
pub fn fig11_g1() -> Graph {
    fig2_32_tree()
}

/// The (3,3)-tree of the connectivity example.
pub fn fig11_g2() -> Graph {
    fig2_33_tree()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barbell_shape() {
        let g = barbell(4);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 2 * 6 + 1);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.degree(0).unwrap(), 4);
    }

    #[test]
    fn wheel_hub_degree() {
        let g = wheel(5);
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn fig3_g2_degrees() {
        assert_eq!(fig3_g2().degrees(), vec![5, 5, 5, 5, 2, 2, 2, 2]);
    }

    #[test]
    fn fig9_has_one_isolated_vertex() {
        let g = fig9();
        assert_eq!(g.isolated_vertices().to_vec(), vec![4]);
        assert_eq!(g.max_degree().0, 3);
    }
}
