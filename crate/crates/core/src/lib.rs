//! Exact closeness centrality on dynamic undirected graphs.
//!
//! [`Engine`] keeps the farness of every vertex current while edges are
//! inserted and deleted. Each update runs a fresh single-source search only
//! from the sources whose farness can actually change, and the set of such
//! sources is narrowed in three independent ways:
//!
//! - a level test on the distances to the edge endpoints ([`level`]),
//! - restriction to the biconnected component holding the edge ([`bcd`]),
//! - one search per class of identical vertices ([`identical`]).
//!
//! Searches can additionally switch between top-down and bottom-up expansion
//! per level ([`graph::sssp`]).
//!
//! ```
//! use dyncc::{DynamicGraph, Engine, EngineConfig};
//!
//! let g = DynamicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let mut engine = Engine::new(g, EngineConfig::blih());
//! assert_eq!(engine.far(), &[6, 4, 4, 6]);
//!
//! engine.insert_edge(0, 3).unwrap();
//! assert_eq!(engine.far(), &[4, 4, 4, 4]);
//! ```

pub mod bcd;
pub mod closeness;
pub mod engine;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod graph;
pub mod identical;
pub mod io;
pub mod level;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod stats;

pub use bcd::{build_representatives, decompose, BcdPartition, RepInfo};
pub use closeness::{closeness_all, closeness_all_with, closeness_single, CentralityState};
pub use engine::{Engine, EngineConfig, UpdateReport};
pub use error::{Error, Result};
pub use graph::sssp::{sssp_distances, SsspMode};
pub use graph::{Adjacency, CsrGraph, DynamicGraph, VertexId, UNREACHABLE};
pub use identical::{build_classes, IdenticalClasses, IdentityKind};
pub use io::{EdgeEvent, EdgeOp};
pub use level::{classify_source, filter_sources, CaseHistogram, LevelCase};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/closeness.md")]
    struct Closeness;
    #[doc = include_str!("../../../book/src/level-filter.md")]
    struct LevelFilter;
    #[doc = include_str!("../../../book/src/biconnected.md")]
    struct Biconnected;
    #[doc = include_str!("../../../book/src/identical.md")]
    struct Identical;
    #[doc = include_str!("../../../book/src/hybrid-search.md")]
    struct HybridSearch;
    #[doc = include_str!("../../../book/src/engine.md")]
    struct EngineChapter;
}
