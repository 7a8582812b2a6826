//! Kernelization for cograph edge editing.
//!
//! The crate implements four reduction rules for deciding whether a graph can
//! be turned into a cograph (a graph without induced `P4`) by editing at most
//! `k` vertex pairs, together with the three classical rules they replace, the
//! cotree and modular machinery they rely on, a sparse descending-path search
//! used to locate nested t-modules, and exhaustive oracles used to certify
//! every rule on small instances.

pub mod cotree;
pub mod driver;
mod error;
pub mod graph;
pub mod modular;
pub mod rules;
pub mod sparsepath;

pub use cotree::{Cotree, CotreeNode, DescendingPath, NodeId, NodeLabel, RootedForest};
pub use driver::{kernelize, Instance, KernelConfig, KernelResult, R4Mode, Verdict};
pub use error::{Error, Result};
pub use graph::{EditSet, Graph, VertexSet};
pub use modular::{ComoduleKind, ComoduleReport, ModuleReport};
pub use rules::{NestedTModule, RuleApplication, RuleKind};
pub use sparsepath::{PathCover, SparseWitness};
