//! Structural algorithms on graphs and their independence complexes.

mod decomposition;
mod dqtree;
mod fast;
mod maxprocess;

pub use decomposition::{
    is_leaf_order, is_shellable, is_shelling_order, is_vertex_decomposable,
    quasi_forest_leaf_order, DecompositionKind, DecompositionWitness, SheddingTree,
    MAX_LEAF_ORDER_FACETS, MAX_SHELLING_FACETS, MAX_VD_VERTICES,
};
pub use dqtree::{
    necessary_screens, recognize_dq_tree, Glue, Rejection, ScreenReport, TreeCertificate,
    TreeWitness,
};
pub use fast::{depth_fast, disconnected_formula, has_full_vertex, pdim_fast, FastPdim, PdimMethod};
pub use maxprocess::{max_process, max_process_all, MaxProcessTrace, TieBreak};
