use serde::{Deserialize, Serialize};

use super::dqtree::recognize_dq_tree;
use crate::error::Result;
use crate::graph::Graph;
use crate::resolution::{betti_table, FieldSpec};

/// Which rule produced a [`FastPdim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PdimMethod {
    /// A vertex adjacent to all others: `n - 1`.
    FullVertex,
    /// Connected with a (d1,...,dq)-tree complement: maximum degree.
    DqTreeMaxDegree,
    /// Isolated vertices dropped, one of the two rules above on the rest.
    IsolatedVertices,
    /// Complement is a (d1,...,dq)-tree, so `Δ_G` is vertex decomposable
    /// and `pdim = bight`.
    Bight,
    /// Full Betti table.
    Hochster,
}

impl PdimMethod {
    pub fn tag(self) -> &'static str {
        match self {
            PdimMethod::FullVertex => "full-vertex",
            PdimMethod::DqTreeMaxDegree => "dq-tree-max-degree",
            PdimMethod::IsolatedVertices => "isolated-vertices",
            PdimMethod::Bight => "bight",
            PdimMethod::Hochster => "hochster",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FastPdim {
    pub value: usize,
    pub method: PdimMethod,
}

pub fn has_full_vertex(g: &Graph) -> Option<usize> {
    g.full_vertex()
}

/// Rules that apply to a connected graph.
fn connected_rule(g: &Graph) -> Option<FastPdim> {
    if g.vertex_count() > 0 && has_full_vertex(g).is_some() {
        return Some(FastPdim {
            value: g.vertex_count() - 1,
            method: PdimMethod::FullVertex,
        });
    }
    if g.is_connected() && recognize_dq_tree(&g.complement()).is_accepted() {
        return Some(FastPdim {
            value: g.max_degree().0,
            method: PdimMethod::DqTreeMaxDegree,
        });
    }
    None
}

/// Projective dimension of `R/I(G)` through the structural shortcuts when one
/// applies, otherwise from the Betti table.
pub fn pdim_fast(g: &Graph, field: FieldSpec) -> Result<FastPdim> {
    if let Some(r) = connected_rule(g) {
        return Ok(r);
    }
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() && isolated != g.vertices() {
        let rest = g.remove_vertices(isolated)?;
        if rest.is_connected() {
            if let Some(r) = connected_rule(&rest) {
                return Ok(FastPdim {
                    value: r.value,
                    method: PdimMethod::IsolatedVertices,
                });
            }
        }
    }
    if recognize_dq_tree(&g.complement()).is_accepted() {
        return Ok(FastPdim {
            value: g.bight(),
            method: PdimMethod::Bight,
        });
    }
    Ok(FastPdim {
        value: betti_table(g, field)?.pdim(),
        method: PdimMethod::Hochster,
    })
}

/// `d_q` when the complement is a (d1,...,dq)-tree.
pub fn depth_fast(g: &Graph) -> Option<usize> {
    recognize_dq_tree(&g.complement())
        .witness()
        .map(|w| w.last_size())
}

/// The value `maxdeg + #isolated` proposed for a graph made of one connected
/// component and isolated vertices; `None` for other shapes.
pub fn disconnected_formula(g: &Graph) -> Option<usize> {
    let isolated = g.isolated_vertices();
    let nontrivial = g.components().iter().filter(|c| c.len() > 1).count();
    (nontrivial == 1 && !isolated.is_empty()).then(|| g.max_degree().0 + isolated.len())
}
