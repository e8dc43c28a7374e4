//! Theorem suites run over graph corpora.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::generators::{enumerate_graphs, MAX_ENUMERATION_VERTICES};
use crate::graph::Graph;
use crate::recognition::{
    disconnected_formula, is_shellable, is_vertex_decomposable, necessary_screens,
    quasi_forest_leaf_order, recognize_dq_tree,
};
use crate::resolution::{betti_table, hilbert_data, eq1_residual, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `pdim ≥ bight ≥ maxdeg`.
    ThmPdimMax,
    /// A full vertex forces `pdim = n - 1`.
    ThmFullVertex,
    /// For co-chordal `G`: `Ḡ` is a (d1,...,dq)-tree iff `Δ_G` is vertex
    /// decomposable and a quasi-forest iff it is shellable and a quasi-forest.
    ThmDtreeVd,
    /// Connected `G` with a (d1,...,dq)-tree complement has `pdim = maxdeg`.
    ThmDtreePdim,
    /// A connected (d1,...,dq)-tree with `q ≥ 2` has edge connectivity
    /// `d_q - 1`. Applied to the scanned graph itself.
    LemmaKConnected,
    /// A (d1,...,dq)-tree complement passes both screens.
    PropScreens,
    /// 2-linear resolution iff co-chordal.
    Froberg,
    /// The Eq. 1 residual is nonnegative, and zero for co-chordal graphs.
    Eq1,
    /// A (d1,...,dq)-tree complement has `depth = d_q`.
    DepthRemark,
    /// One co-chordal component plus `k ≥ 1` isolated vertices has
    /// `pdim = maxdeg + k`.
    DisconnectedFormula,
}

pub const ALL_SUITES: [Suite; 10] = [
    Suite::ThmPdimMax,
    Suite::ThmFullVertex,
    Suite::ThmDtreeVd,
    Suite::ThmDtreePdim,
    Suite::LemmaKConnected,
    Suite::PropScreens,
    Suite::Froberg,
    Suite::Eq1,
    Suite::DepthRemark,
    Suite::DisconnectedFormula,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::ThmPdimMax => "thm-pdim-max",
            Suite::ThmFullVertex => "thm-full-vertex",
            Suite::ThmDtreeVd => "thm-dtree-vd",
            Suite::ThmDtreePdim => "thm-dtree-pdim",
            Suite::LemmaKConnected => "lemma-k-connected",
            Suite::PropScreens => "prop-screens",
            Suite::Froberg => "froberg",
            Suite::Eq1 => "eq1",
            Suite::DepthRemark => "depth-remark",
            Suite::DisconnectedFormula => "disconnected-formula",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SUITES
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ALL_SUITES.iter().map(|s| s.name()).collect();
                Error::parse("suite", format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    NotApplicable,
    Pass,
    Violation { detail: String },
}

fn violation(detail: String) -> Outcome {
    Outcome::Violation { detail }
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        violation(detail())
    }
}

/// Runs one suite on one graph.
pub fn check(suite: Suite, g: &Graph, field: FieldSpec) -> Result<Outcome> {
    let n = g.vertex_count();
    Ok(match suite {
        Suite::ThmPdimMax => {
            let pdim = betti_table(g, field)?.pdim();
            let (bight, maxdeg) = (g.bight(), g.max_degree().0);
            expect(pdim >= bight && bight >= maxdeg, || {
                format!("pdim {pdim}, bight {bight}, maxdeg {maxdeg}")
            })
        }
        Suite::ThmFullVertex => match g.full_vertex() {
            None => Outcome::NotApplicable,
            Some(_) => {
                let pdim = betti_table(g, field)?.pdim();
                expect(pdim + 1 == n, || format!("pdim {pdim} with n = {n}"))
            }
        },
        Suite::ThmDtreeVd => {
            let complement = g.complement();
            if !complement.is_chordal() {
                return Ok(Outcome::NotApplicable);
            }
            let delta = SimplicialComplex::independence(g);
            let tree = recognize_dq_tree(&complement).is_accepted();
            let qf = quasi_forest_leaf_order(&delta)?.holds();
            let vd = is_vertex_decomposable(&delta)?.holds();
            let sh = is_shellable(&delta)?.holds();
            expect(tree == (vd && qf) && tree == (sh && qf), || {
                format!("tree {tree}, vertex decomposable {vd}, shellable {sh}, quasi-forest {qf}")
            })
        }
        Suite::ThmDtreePdim => {
            if !g.is_connected() || !recognize_dq_tree(&g.complement()).is_accepted() {
                return Ok(Outcome::NotApplicable);
            }
            let pdim = betti_table(g, field)?.pdim();
            let maxdeg = g.max_degree().0;
            expect(pdim == maxdeg, || format!("pdim {pdim}, maxdeg {maxdeg}"))
        }
        Suite::LemmaKConnected => {
            let cert = recognize_dq_tree(g);
            match cert.witness() {
                Some(w) if w.facets.len() >= 2 && g.is_connected() => {
                    let lambda = g.edge_connectivity().value;
                    let dq = w.last_size();
                    expect(lambda + 1 == dq, || {
                        format!("edge connectivity {lambda}, d_q = {dq}")
                    })
                }
                _ => Outcome::NotApplicable,
            }
        }
        Suite::PropScreens => {
            if !recognize_dq_tree(&g.complement()).is_accepted() {
                return Ok(Outcome::NotApplicable);
            }
            let report = necessary_screens(g);
            expect(report.passes(), || {
                report.failure(g).unwrap_or_default()
            })
        }
        Suite::Froberg => {
            let linear = betti_table(g, field)?.is_2linear();
            let co = g.complement().is_chordal();
            expect(linear == co, || format!("2-linear {linear}, co-chordal {co}"))
        }
        Suite::Eq1 => {
            let r = eq1_residual(&betti_table(g, field)?, &hilbert_data(g));
            let co = g.complement().is_chordal();
            expect(r >= 0 && (!co || r == 0), || {
                format!("residual {r}, co-chordal {co}")
            })
        }
        Suite::DepthRemark => match recognize_dq_tree(&g.complement()).witness() {
            None => Outcome::NotApplicable,
            Some(w) => {
                let depth = betti_table(g, field)?.depth();
                let dq = w.last_size();
                expect(depth == dq, || format!("depth {depth}, d_q = {dq}"))
            }
        },
        Suite::DisconnectedFormula => {
            let Some(predicted) = disconnected_formula(g) else {
                return Ok(Outcome::NotApplicable);
            };
            let component = g.remove_vertices(g.isolated_vertices())?;
            if !component.complement().is_chordal() {
                return Ok(Outcome::NotApplicable);
            }
            let pdim = betti_table(g, field)?.pdim();
            expect(pdim == predicted, || {
                format!(
                    "pdim {pdim}, maxdeg + isolated = {} + {} = {predicted}",
                    g.max_degree().0,
                    g.isolated_vertices().len()
                )
            })
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub suite: Suite,
    pub graphs: usize,
    pub applicable: usize,
    /// Sorted by graph6 string.
    pub violations: Vec<Violation>,
}

impl ScanSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `suite` over `graphs` in parallel; the result does not depend on the
/// schedule.
pub fn run_suite(suite: Suite, graphs: &[Graph], field: FieldSpec) -> Result<ScanSummary> {
    let outcomes: Vec<(String, Outcome)> = graphs
        .par_iter()
        .map(|g| Ok((to_graph6(g), check(suite, g, field)?)))
        .collect::<Result<_>>()?;
    let applicable = outcomes
        .iter()
        .filter(|(_, o)| *o != Outcome::NotApplicable)
        .count();
    let mut violations: Vec<Violation> = outcomes
        .into_iter()
        .filter_map(|(graph6, o)| match o {
            Outcome::Violation { detail } => Some(Violation { graph6, detail }),
            _ => None,
        })
        .collect();
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(ScanSummary {
        suite,
        graphs: graphs.len(),
        applicable,
        violations,
    })
}

/// All graphs on `1..=max_n` vertices up to isomorphism.
pub fn corpus(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if max_n > MAX_ENUMERATION_VERTICES {
        return Err(Error::VertexCapExceeded {
            what: "graph enumeration",
            n: max_n,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(
            enumerate_graphs(n)?
                .into_iter()
                .filter(|g| !connected_only || g.is_connected()),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    const QQ: FieldSpec = FieldSpec::RATIONALS;

    #[test]
    fn suites_on_small_corpus() {
        let graphs = corpus(5, false).unwrap();
        for suite in ALL_SUITES {
            let s = run_suite(suite, &graphs, QQ).unwrap();
            match suite {
                Suite::DisconnectedFormula => assert!(!s.passed()),
                Suite::PropScreens => {
                    // the edgeless graphs: single-simplex complexes
                    assert!(s.violations.iter().all(|v| {
                        crate::format::parse_graph6(&v.graph6).unwrap().edge_count() == 0
                    }));
                }
                _ => assert!(s.passed(), "{suite}: {:?}", s.violations),
            }
        }
    }

    #[test]
    fn fig9_violates_the_disconnected_formula() {
        match check(Suite::DisconnectedFormula, &named::fig9(), QQ).unwrap() {
            Outcome::Violation { detail } => assert!(detail.starts_with("pdim 3")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in ALL_SUITES {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
