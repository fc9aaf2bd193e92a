//! Exact search and verification toolkit for long Berge cycles in Sperner
//! hypergraphs of bounded rank.

pub mod berge;
pub mod bigraph;
pub mod bounds;
pub mod canon;
pub mod clique;
pub mod connectivity;
pub mod constructions;
pub mod disintegration;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod lifting;
pub mod matching;
pub mod oracle;
pub mod paths;
pub mod random;
pub mod shrink;
pub mod verify;
pub mod vertex_set;

pub use berge::{BergeWitness, SearchResult, WitnessKind};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{EdgeFamily, Hypergraph, HypergraphData, ValidationReport};
pub use vertex_set::VertexSet;
