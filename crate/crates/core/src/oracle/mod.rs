//! A semantic decision procedure for clause sets, independent of the
//! resolution engine: behaviour graphs, their reduction, and model
//! extraction.

pub mod dot;
pub mod graph;
pub mod model;

pub use dot::to_dot;
pub use graph::{
    build_graph, build_graph_with, is_satisfiable, is_satisfiable_with, reduce_graph,
    reduce_graph_in_order, BehaviourGraph, Node, OracleConfig, DEFAULT_ORACLE_CAP,
};
pub use model::extract_model;
