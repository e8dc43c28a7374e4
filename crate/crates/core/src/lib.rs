//! Edge ideals of finite simple graphs: exact Betti tables through the
//! independence complex, and combinatorial recognition of complements of
//! (d1,...,dq)-trees.

pub mod complex;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod recognition;
pub mod report;
pub mod resolution;
pub mod scan;

pub use complex::{FVector, HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use generators::named;
pub use graph::{Graph, VertexSet};
pub use linalg::{Field, ModP};
pub use resolution::{BettiTable, FieldSpec, HilbertData};

/// Exact rationals, the characteristic-zero scalar.
pub type Rational = num_rational::BigRational;
