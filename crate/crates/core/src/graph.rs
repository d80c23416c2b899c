//! Immutable simple graphs on at most 64 vertices.
//!
//! Every vertex owns one adjacency word, so neighbourhood unions, intersections
//! and subset tests are single machine instructions. Vertex sets over the same
//! universe use the same representation ([`VertexSet`]).

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, …, 63}` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Complement within the full 64-bit universe; intersect with a host's vertex set.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// How a single vertex relates to a nonempty vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetRelation {
    Complete,
    Anticomplete,
    Mixed,
}

/// A finite simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Graphs are values: two graphs are equal iff they have the same order and
/// the same labelled edge set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbour masks, validating the simple-graph invariants.
    pub fn from_neighborhoods(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if let Some(w) = (*row - all).min() {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            if row.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for w in row.iter() {
                if !rows[w].contains(v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows.into_iter().map(VertexSet::bits).collect(),
        })
    }

    /// Caller guarantees symmetry, irreflexivity and range.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v).bits();
        }
        Ok(g)
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency words, one per vertex.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match (s - self.vertices()).min() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `G[s]`, relabelled `0..|s|` in ascending order of `s`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(u, w))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    /// `G - uv`; removing a non-edge returns an equal graph.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Appends vertex `n` adjacent exactly to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        self.check_set(nbrs)?;
        let v = self.n;
        let mut adj = self.adj.clone();
        for w in nbrs.iter() {
            adj[w] |= 1 << v;
        }
        adj.push(nbrs.bits());
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = self
                .neighbors(u)
                .iter()
                .fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph::from_rows_unchecked(adj)
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// `N(X) = (⋃_{v ∈ X} N(v)) \ X`.
    pub fn open_set_neighborhood(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x.iter() {
            out |= self.neighbors(v);
        }
        out - x
    }

    /// Vertices adjacent to every member of `s` (all vertices when `s` is empty).
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(self.vertices(), |acc, v| acc & self.neighbors(v))
    }

    pub fn relation_of(&self, x: usize, y: VertexSet) -> Result<SetRelation, GraphError> {
        self.check_vertex(x)?;
        self.check_set(y)?;
        if y.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if y.contains(x) {
            return Err(GraphError::VertexInSet(x));
        }
        Ok(self.relation_unchecked(x, y))
    }

    pub(crate) fn relation_unchecked(&self, x: usize, y: VertexSet) -> SetRelation {
        let hit = self.neighbors(x) & y;
        if hit == y {
            SetRelation::Complete
        } else if hit.is_empty() {
            SetRelation::Anticomplete
        } else {
            SetRelation::Mixed
        }
    }

    /// True iff `x` is adjacent to exactly one endpoint of `uv`.
    pub fn distinguishes(&self, x: usize, u: usize, v: usize) -> bool {
        self.has_edge(x, u) != self.has_edge(x, v)
    }

    /// The least vertex of `scope` that is mixed on `h`, if any.
    pub fn find_mixed_vertex(
        &self,
        h: VertexSet,
        scope: VertexSet,
    ) -> Result<Option<usize>, GraphError> {
        self.check_set(h)?;
        self.check_set(scope)?;
        if h.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if let Some(v) = (h & scope).min() {
            return Err(GraphError::Overlap(v));
        }
        Ok(scope
            .iter()
            .find(|&w| self.relation_unchecked(w, h) == SetRelation::Mixed))
    }

    /// `h` is homogeneous with respect to `scope` when no vertex of `scope` is mixed on it.
    pub fn is_homogeneous(&self, h: VertexSet, scope: VertexSet) -> Result<bool, GraphError> {
        Ok(self.find_mixed_vertex(h, scope)?.is_none())
    }

    /// Connected components, each ascending, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of `G[s]`, expressed in host labels.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut left = s;
        let mut out = Vec::new();
        while let Some(root) = left.min() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = self.open_set_neighborhood(frontier) & s;
                frontier = reach - comp;
                comp |= frontier;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// True iff every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter()
            .all(|v| (b.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_anticomplete_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| self.neighbors(v).is_disjoint(b))
    }

    /// Sorted degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}; {})",
            self.n,
            crate::format::emit_adjacency_list(self)
        )
    }
}
