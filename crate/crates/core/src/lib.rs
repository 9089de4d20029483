//! Stacked pure simplicial complexes, their gallery paths, and the
//! correspondence between scattered vertex partitions and facet partitions.

pub mod complex;
pub mod error;
pub mod generators;
pub mod maps;
pub mod natline;
pub mod oracle;
pub mod partition;
pub mod paths;
pub mod textio;

pub use complex::{find_stacking_order, is_stacked, SimplicialComplex, StackingOrder};
pub use error::{Error, Result};
pub use maps::{
    check_theorem_instance, facet_to_vertex, restriction_compatible, vertex_to_facet,
    Correspondence,
};
pub use natline::{line_graph, refine_iter, refine_once, PrefixPartition};
pub use oracle::{
    bell, census, enumerate_partitions, stirling2, verify_bijection, EnumerationSpec,
};
pub use partition::{GroundKind, Partition};
pub use paths::{reduce_walk, FacePath, FacetPath, Gallery};
