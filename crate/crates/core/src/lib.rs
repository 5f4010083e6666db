//! Path and tree decompositions of graphs built from binary trees: the shift
//! graphs `S_n`, the graphs `G_n` on V-shaped paths of `T_n`, and the graphs
//! `H_n` that add Y-shaped subtrees. Includes explicit decompositions with
//! bag colourings, exact solvers, and a pattern checker for pairs of V's.

pub mod btree;
pub mod constructions;
pub mod decomp;
mod error;
pub mod graphs;
pub mod patterns;
pub mod solvers;

pub use btree::{embed, Embedding, Node, Side, TreeOrder};
pub use decomp::{
    decomposition_chromatic, decomposition_width, normalize_path, path_as_tree,
    verify_path_decomposition, verify_tree_decomposition, AnyDecomposition, ChromaticOptions,
    Coloring, Decomposition, Interval, PathDecomposition, TreeDecomposition, ValidityReport,
};
pub use error::{Error, Result};
pub use graphs::{
    adjacent, build_g, build_h, build_shift, make_vee, make_wye, AdjList, Adjacency, Graph,
    IntervalVertex, Vee, VertexLabel, Wye,
};
pub use solvers::{chromatic_number, is_k_colorable, pchr_exact, ChromaticSolver, SolveResult};
