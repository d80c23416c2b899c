//! Isomorph-free generation of hereditary graph classes by canonical
//! augmentation, and the search for vertex-critical members.
//!
//! Graphs are built one vertex at a time. A child `G + v` of a parent `G` is
//! kept only if `v` lies in the automorphism orbit of the canonical deletion
//! vertex of the child (the vertex placed first by [`canonical_labeling`]).
//! Every isomorphism class is then reached from exactly one parent class, and
//! isomorphic children of one parent are merged by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, refine};
use crate::coloring::{is_k_vertex_critical, vertex_critical_verdict, CriticalityReport};
use crate::error::SpecError;
use crate::graph::{Graph, VertexSet};
use crate::lemmas::find_comparable_pair;
use crate::pattern::{contains_through, is_free, p5_chair, Pattern};

pub const MAX_ORDER: usize = 11;
pub const DEFAULT_ORDER: usize = 9;
pub const MAX_PATTERN_ORDER: usize = 9;

#[derive(Clone, Debug)]
pub struct GenerationSpec {
    pub n_max: usize,
    pub forbidden: Vec<Pattern>,
    pub connected_only: bool,
    /// Target chromatic number for [`search_critical`].
    pub k: usize,
}

impl Default for GenerationSpec {
    fn default() -> Self {
        GenerationSpec {
            n_max: DEFAULT_ORDER,
            forbidden: p5_chair(),
            connected_only: false,
            k: 5,
        }
    }
}

impl GenerationSpec {
    pub fn new(n_max: usize, forbidden: Vec<Pattern>) -> Self {
        GenerationSpec {
            n_max,
            forbidden,
            ..GenerationSpec::default()
        }
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        if !(1..=MAX_ORDER).contains(&self.n_max) {
            return Err(SpecError::OrderOutOfRange(self.n_max));
        }
        for p in &self.forbidden {
            if p.graph().order() > MAX_PATTERN_ORDER {
                return Err(SpecError::PatternTooLarge {
                    name: p.name().to_string(),
                    order: p.graph().order(),
                });
            }
        }
        Ok(())
    }
}

/// The vertex removed by the canonical deletion rule.
pub fn canonical_deletion_vertex(g: &Graph) -> usize {
    canonical_labeling(g).order[0]
}

/// Whether the last vertex of `child` passes the canonical deletion test.
pub fn is_canonical_extension(child: &Graph) -> bool {
    let n = child.order();
    let new = n - 1;
    let mut cells = vec![child.vertices().bits()];
    refine(child, &mut cells);
    // the deletion vertex always lies in the first cell of the root partition
    if cells[0] >> new & 1 == 0 {
        return false;
    }
    if cells[0] == 1 << new {
        return true;
    }
    let lab = canonical_labeling(child);
    lab.same_orbit(new, lab.order[0])
}

/// Accepted one-vertex extensions of `parent` avoiding `forbidden`, in
/// canonical labelling, one per isomorphism class, ordered by neighbourhood
/// mask of the new vertex.
pub fn canonical_children(parent: &Graph, forbidden: &[Pattern]) -> Vec<Graph> {
    let n = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let child = parent
            .add_vertex(VertexSet::from_bits(mask))
            .expect("order below 64");
        if forbidden.iter().any(|p| contains_through(&child, p, n)) {
            continue;
        }
        if !is_canonical_extension(&child) {
            continue;
        }
        let canon = canonical_labeling(&child).graph;
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

/// The next level: children of every parent, concatenated in parent order.
pub fn next_level(parents: &[Graph], forbidden: &[Pattern]) -> Vec<Graph> {
    parents
        .par_iter()
        .map(|p| canonical_children(p, forbidden))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// All forbidden-free graphs on one vertex (the single vertex, unless forbidden).
fn first_level(forbidden: &[Pattern]) -> Vec<Graph> {
    let k1 = Graph::empty(1).expect("small");
    if is_free(&k1, forbidden) {
        vec![k1]
    } else {
        Vec::new()
    }
}

/// Graphs of [`generate_class`], one level (vertex count) at a time.
pub struct ClassLevels {
    forbidden: Vec<Pattern>,
    n_max: usize,
    current: Vec<Graph>,
    n: usize,
}

impl Iterator for ClassLevels {
    /// `(n, every class member on n vertices, connected or not)`.
    type Item = (usize, Vec<Graph>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.n >= self.n_max {
            return None;
        }
        let level = if self.n == 0 {
            first_level(&self.forbidden)
        } else {
            next_level(&self.current, &self.forbidden)
        };
        self.n += 1;
        self.current = level;
        Some((self.n, self.current.clone()))
    }
}

/// Level-by-level generation of all graphs, connected or not, on `1..=n_max` vertices.
pub fn class_levels(spec: &GenerationSpec) -> Result<ClassLevels, SpecError> {
    spec.validate()?;
    Ok(ClassLevels {
        forbidden: spec.forbidden.clone(),
        n_max: spec.n_max,
        current: Vec::new(),
        n: 0,
    })
}

/// One representative per isomorphism class of forbidden-free graphs with
/// `1..=n_max` vertices (connected ones only if requested), by increasing
/// order. The output is the same for every thread count.
pub fn generate_class(spec: &GenerationSpec) -> Result<impl Iterator<Item = Graph>, SpecError> {
    let connected_only = spec.connected_only;
    Ok(class_levels(spec)?.flat_map(move |(_, level)| {
        level
            .into_iter()
            .filter(move |g| !connected_only || g.is_connected())
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalGraph {
    pub graph: Graph,
    pub report: CriticalityReport,
    pub canonical: Vec<u8>,
}

/// Vertex-critical class members sorted by `(n, canonical form)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    pub members: Vec<CriticalGraph>,
}

impl SearchResult {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }

    pub fn count_of_order(&self, n: usize) -> usize {
        self.members.iter().filter(|m| m.graph.order() == n).count()
    }
}

/// Whether `g` is `k`-vertex-critical, trying the cheap necessary conditions first.
pub fn passes_critical_filter(g: &Graph, k: usize) -> bool {
    if g.order() < k || (0..g.order()).any(|v| g.degree(v) + 1 < k) {
        return false;
    }
    find_comparable_pair(g).is_none() && vertex_critical_verdict(g, k)
}

/// All `spec.k`-vertex-critical members of the class with at most `spec.n_max` vertices.
pub fn search_critical(spec: &GenerationSpec) -> Result<SearchResult, SpecError> {
    let k = spec.k;
    let mut members = Vec::new();
    for (_, level) in class_levels(spec)? {
        let found: Vec<CriticalGraph> = level
            .par_iter()
            .filter(|g| passes_critical_filter(g, k))
            .map(|g| CriticalGraph {
                graph: g.clone(),
                report: is_k_vertex_critical(g, k),
                canonical: canonical_form(g),
            })
            .collect();
        members.extend(found);
    }
    members.sort_by(|a, b| (a.graph.order(), &a.canonical).cmp(&(b.graph.order(), &b.canonical)));
    Ok(SearchResult { members })
}
