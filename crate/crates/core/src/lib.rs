//! Exact tools for small graphs: induced-subgraph search, colouring and
//! criticality, canonical labelling, isomorph-free generation, and the
//! structure of graphs around an induced 5-cycle.

pub mod canon;
pub mod claims;
pub mod coloring;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod lemmas;
pub mod pattern;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalLabeling};
pub use claims::{check_claim, verify_all, ClaimId, ClaimReport, Hypotheses, Tier, Verdict};
pub use coloring::{chromatic_number, clique_number, is_k_vertex_critical, is_q_colorable};
pub use decomposition::{decompose, C5Cycle, Decomposition, SClass};
pub use enumerate::{generate_class, search_critical, GenerationSpec, SearchResult};
pub use error::{GraphError, ParseError, SpecError};
pub use family::FamilyMember;
pub use format::{
    emit_adjacency_list, emit_graph6, parse_adjacency_list, parse_graph6, read_graphs,
};
pub use graph::{Graph, SetRelation, VertexSet};
pub use lemmas::{find_comparable_pair, find_dominated_pair, DominatedPair};
pub use pattern::{find_induced, is_free, Embedding, Pattern};
