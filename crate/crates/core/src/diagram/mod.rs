//! Planar diagram codes and the symmetric-union construction.

pub mod pd;
pub mod union;

pub use pd::{parse_pd, PdCode, Traversal};
pub use union::{partial_knot, symmetric_union_pd, SymUnionSpec};
