use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How the max-process picks among vertices of equal maximum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum TieBreak {
    /// Lowest index among the maximum-degree vertices.
    #[default]
    Lowest,
    /// Use the listed vertices for the first steps, then lowest index. Each
    /// forced vertex must have maximum degree when it is picked.
    Forced(Vec<usize>),
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::Lowest => write!(f, "lowest"),
            TieBreak::Forced(vs) => {
                let vs: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "forced:{}", vs.join(","))
            }
        }
    }
}

/// One run of the max-process: `v_i` has maximum degree in `G_{i-1}` and
/// `G_i = G_{i-1} \ N_{G_{i-1}}[v_i]`, until no vertex is left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxProcessTrace {
    pub chosen: Vec<usize>,
    /// `deg_{G_{i-1}}(v_i)`.
    pub degrees: Vec<usize>,
    /// Vertex sets of `G_0, ..., G_r`.
    pub residuals: Vec<VertexSet>,
    pub maximal: bool,
    pub tie_break: String,
}

impl MaxProcessTrace {
    pub fn set(&self) -> VertexSet {
        self.chosen.iter().copied().collect()
    }

    /// `Σ deg_{G_{i-1}}(v_i)`, which equals `|N_G(F)|`.
    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

fn finish(g: &Graph, chosen: Vec<usize>, tie_break: String) -> MaxProcessTrace {
    let trace = g.peel(&chosen).expect("max-process picks an independent set");
    let degrees = (1..=chosen.len()).map(|i| trace.degree_at(i)).collect();
    let residuals: Vec<VertexSet> = (0..=chosen.len()).map(|i| trace.residual(i)).collect();
    MaxProcessTrace {
        maximal: residuals.last().is_some_and(|r| r.is_empty()),
        chosen,
        degrees,
        residuals,
        tie_break,
    }
}

pub fn max_process(g: &Graph, tie_break: &TieBreak) -> Result<MaxProcessTrace> {
    let forced: &[usize] = match tie_break {
        TieBreak::Lowest => &[],
        TieBreak::Forced(vs) => vs,
    };
    let mut rest = g.vertices();
    let mut chosen = Vec::new();
    while !rest.is_empty() {
        let (_, best) = g.max_degree_within(rest);
        let step = chosen.len();
        let v = match forced.get(step) {
            Some(&v) => {
                g.check_vertex(v)?;
                if !best.contains(v) {
                    return Err(Error::NotMaxDegree { vertex: v, step: step + 1 });
                }
                v
            }
            None => best.first().expect("nonempty residual has a vertex"),
        };
        chosen.push(v);
        rest = rest - (g.neighbors(v) | VertexSet::singleton(v));
    }
    Ok(finish(g, chosen, tie_break.to_string()))
}

/// Every run of the max-process, one per sequence of tie choices, in
/// lexicographic order of the chosen vertices.
pub fn max_process_all(g: &Graph) -> Vec<MaxProcessTrace> {
    fn walk(g: &Graph, rest: VertexSet, chosen: &mut Vec<usize>, out: &mut Vec<MaxProcessTrace>) {
        if rest.is_empty() {
            out.push(finish(g, chosen.clone(), "all".into()));
            return;
        }
        let (_, best) = g.max_degree_within(rest);
        for v in best {
            chosen.push(v);
            walk(g, rest - (g.neighbors(v) | VertexSet::singleton(v)), chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    walk(g, g.vertices(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn example_three() {
        let g = named::example_3();
        let t = max_process(&g, &TieBreak::Forced(vec![2])).unwrap();
        assert_eq!(t.chosen, vec![2, 0, 5]);
        assert!(t.maximal);
        assert_eq!(t.degrees, vec![4, 0, 0]);
        assert!(g.is_maximal_independent(t.set()));
        assert_eq!(
            max_process(&g, &TieBreak::Forced(vec![0])),
            Err(Error::NotMaxDegree { vertex: 0, step: 1 })
        );
    }

    #[test]
    fn complete_graph() {
        let t = max_process(&Graph::complete(5).unwrap(), &TieBreak::Lowest).unwrap();
        assert_eq!(t.chosen, vec![0]);
        assert!(t.maximal);
    }

    #[test]
    fn every_branch_is_maximal() {
        let g = named::example_1();
        let all = max_process_all(&g);
        assert!(all.len() >= 5);
        for t in &all {
            assert!(g.is_maximal_independent(t.set()));
            assert_eq!(
                t.degree_sum(),
                g.open_neighborhood(t.set()).unwrap().len()
            );
        }
        assert!(all.iter().any(|t| t.chosen == vec![2, 0, 5]));
    }
}
