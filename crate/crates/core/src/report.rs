//! Everything the toolkit knows about one graph, in one serializable record.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::complex::{FVector, HVector};
use crate::error::Result;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::recognition::{
    max_process, necessary_screens, pdim_fast, recognize_dq_tree, FastPdim, MaxProcessTrace,
    ScreenReport, TieBreak, TreeCertificate,
};
use crate::resolution::{
    betti_table, eq1_residual, hilbert_data, BettiTable, FieldSpec, DEFAULT_BETTI_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub labels: Vec<String>,
    pub n: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub connected: bool,
    pub isolated: usize,
    pub chordal: bool,
    pub co_chordal: bool,
    pub bight: usize,
    pub field: FieldSpec,
    pub pdim: FastPdim,
    pub depth: usize,
    /// `None` when the graph is over the Betti-table vertex cap.
    pub reg: Option<usize>,
    pub betti: Option<BettiTable>,
    pub f_vector: FVector,
    pub h_vector: HVector,
    /// Degree of the h-polynomial.
    pub s: usize,
    pub krull_dim: usize,
    pub a_invariant: i64,
    pub eq1_residual: Option<i64>,
    pub two_linear: Option<bool>,
    /// Whether the shortcut pdim matched the Betti table, when checked.
    pub pdim_verified: Option<bool>,
    pub complement_tree: TreeCertificate,
    pub screens: ScreenReport,
    pub max_process: MaxProcessTrace,
}

impl InvariantReport {
    /// `pdim + depth = n`, `maxdeg ≤ bight ≤ pdim`, and the shortcut agrees
    /// with the table when both are present.
    pub fn is_consistent(&self) -> bool {
        self.pdim.value + self.depth == self.n
            && self.max_degree <= self.bight
            && self.bight <= self.pdim.value
            && self.pdim_verified != Some(false)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let w = &mut s;
        let _ = writeln!(w, "graph6        {}", self.graph6);
        let _ = writeln!(w, "vertices      {} ({})", self.n, self.labels.join(" "));
        let _ = writeln!(w, "edges         {}", self.edges);
        let _ = writeln!(w, "degrees       {:?} (max {})", self.degrees, self.max_degree);
        let _ = writeln!(w, "connected     {} ({} isolated)", self.connected, self.isolated);
        let _ = writeln!(w, "chordal       {}  co-chordal {}", self.chordal, self.co_chordal);
        let _ = writeln!(w, "field         {}", self.field);
        let _ = writeln!(w, "bight         {}", self.bight);
        let verified = match self.pdim_verified {
            Some(true) => ", matches Betti table",
            Some(false) => ", DISAGREES with Betti table",
            None => "",
        };
        let _ = writeln!(w, "pdim          {} [{}{}]", self.pdim.value, self.pdim.method.tag(), verified);
        let _ = writeln!(w, "depth         {}", self.depth);
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let _ = writeln!(w, "reg           {}", opt(self.reg.map(|r| r.to_string())));
        let _ = writeln!(w, "f-vector      {:?}", self.f_vector.0);
        let _ = writeln!(w, "h-vector      {:?}", self.h_vector.0);
        let _ = writeln!(
            w,
            "h-polynomial  degree {}, dim {}, a-invariant {}",
            self.s, self.krull_dim, self.a_invariant
        );
        let _ = writeln!(w, "eq1 residual  {}", opt(self.eq1_residual.map(|r| r.to_string())));
        let _ = writeln!(w, "2-linear      {}", opt(self.two_linear.map(|r| r.to_string())));
        let tree = match &self.complement_tree {
            TreeCertificate::Accepted(t) => format!("accepted, sequence {:?}", t.sequence()),
            TreeCertificate::Rejected(r) => format!("rejected ({})", rejection_text(r)),
        };
        let _ = writeln!(w, "complement    {tree}");
        let screens = if self.screens.passes() { "pass" } else { "fail" };
        let _ = writeln!(w, "screens       {screens}");
        let chosen: Vec<&str> = self
            .max_process
            .chosen
            .iter()
            .map(|&v| self.labels[v].as_str())
            .collect();
        let _ = writeln!(w, "max-process   {}", chosen.join(" "));
        if let Some(b) = &self.betti {
            let _ = writeln!(w, "betti table");
            let _ = write!(w, "{b}");
        }
        s
    }
}

pub fn rejection_text(r: &crate::recognition::Rejection) -> String {
    use crate::recognition::Rejection::*;
    match r {
        NotChordal { cycle } => format!("not chordal, induced cycle of length {}", cycle.len()),
        CountMismatch {
            vertices,
            facets,
            max_facet,
        } => format!(
            "{vertices} vertices but {facets} maximal cliques with largest {max_facet}"
        ),
        NoValidPeeling => "no valid peeling order".into(),
        NecessaryConditionFailure { detail } => detail.clone(),
    }
}

pub fn invariant_report(g: &Graph, field: FieldSpec, verify: bool) -> Result<InvariantReport> {
    let n = g.vertex_count();
    let complement = g.complement();
    let table = if n <= DEFAULT_BETTI_CAP {
        Some(betti_table(g, field)?)
    } else {
        None
    };
    let hilbert = hilbert_data(g);
    let pdim = pdim_fast(g, field)?;
    let pdim_verified = match (&table, verify) {
        (Some(t), true) => Some(t.pdim() == pdim.value),
        (None, true) => Some(betti_table(g, field)?.pdim() == pdim.value),
        _ => None,
    };
    let (max_degree, _) = g.max_degree();
    Ok(InvariantReport {
        graph6: to_graph6(g),
        labels: g.labels().to_vec(),
        n,
        edges: g.edge_count(),
        degrees: g.degrees(),
        max_degree,
        connected: g.is_connected(),
        isolated: g.isolated_vertices().len(),
        chordal: g.is_chordal(),
        co_chordal: complement.is_chordal(),
        bight: g.bight(),
        field,
        depth: n - pdim.value,
        pdim,
        reg: table.as_ref().map(|t| t.reg()),
        eq1_residual: table.as_ref().map(|t| eq1_residual(t, &hilbert)),
        two_linear: table.as_ref().map(|t| t.is_2linear()),
        betti: table,
        f_vector: hilbert.f,
        h_vector: hilbert.h,
        s: hilbert.s,
        krull_dim: hilbert.krull_dim,
        a_invariant: hilbert.a_invariant,
        pdim_verified,
        complement_tree: recognize_dq_tree(&complement),
        screens: necessary_screens(g),
        max_process: max_process(g, &TieBreak::Lowest)?,
    })
}
