//! Certificates that a graph is not vertex-critical: comparable vertices and
//! dominated subset pairs.
//!
//! A pair found here proves non-criticality. Finding nothing within the size
//! bounds proves nothing.

use crate::coloring::chromatic_number;
use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// The least nonadjacent pair `u < v` with `N(u) ⊆ N(v)` or `N(v) ⊆ N(u)`.
pub fn find_comparable_pair(g: &Graph) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|u| {
        let nu = g.neighbors(u);
        (g.vertices() - nu.with(u))
            .iter()
            .filter(|&v| v > u)
            .find(|&v| {
                let nv = g.neighbors(v);
                nu.is_subset(nv) || nv.is_subset(nu)
            })
            .map(|v| (u, v))
    })
}

/// Disjoint anticomplete `X`, `Y` with `χ(X) ≤ χ(Y)` and `Y` complete to `N(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatedPair {
    pub x: VertexSet,
    pub y: VertexSet,
    pub chi_x: usize,
    pub chi_y: usize,
}

impl DominatedPair {
    /// Re-checks every defining condition from scratch.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let (x, y) = (self.x, self.y);
        !x.is_empty()
            && !y.is_empty()
            && x.is_subset(g.vertices())
            && y.is_subset(g.vertices())
            && x.is_disjoint(y)
            && g.is_anticomplete_to(x, y)
            && self.chi_x == chromatic_number(&g.induced_unchecked(x))
            && self.chi_y == chromatic_number(&g.induced_unchecked(y))
            && self.chi_x <= self.chi_y
            && g.is_complete_to(y, g.open_set_neighborhood(x))
    }
}

/// Searches all `X` with `|X| ≤ max_x` and `Y` with `|Y| ≤ max_y`.
///
/// Candidates are scanned by increasing `(|X|, X, |Y|, Y)` with sets compared
/// as bitmasks, so the result is the least such pair.
pub fn find_dominated_pair(
    g: &Graph,
    max_x: usize,
    max_y: usize,
) -> Result<Option<DominatedPair>, GraphError> {
    for bound in [max_x, max_y] {
        if !(1..=4).contains(&bound) {
            return Err(GraphError::BoundOutOfRange(bound));
        }
    }
    let all = g.vertices();
    for sx in 1..=max_x {
        for x in subsets_of_size(all, sx) {
            let nx = g.open_set_neighborhood(x);
            // Y must avoid X and N(X), and be complete to N(X)
            let pool = (all - x - nx) & g.common_neighbors(nx);
            if pool.is_empty() {
                continue;
            }
            let chi_x = chromatic_number(&g.induced_unchecked(x));
            for sy in 1..=max_y.min(pool.len()) {
                for y in subsets_of_size(pool, sy) {
                    let chi_y = chromatic_number(&g.induced_unchecked(y));
                    if chi_x <= chi_y {
                        return Ok(Some(DominatedPair { x, y, chi_x, chi_y }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// All `k`-subsets of `s`, ordered by their bitmask value.
pub(crate) fn subsets_of_size(s: VertexSet, k: usize) -> Vec<VertexSet> {
    let members = s.to_vec();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(
        members: &[usize],
        start: usize,
        k: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if pick.len() == k {
            out.push(pick.iter().collect());
            return;
        }
        for i in start..members.len() {
            pick.push(members[i]);
            rec(members, i + 1, k, pick, out);
            pick.pop();
        }
    }
    rec(&members, 0, k, &mut pick, &mut out);
    out.sort_by_key(|v| v.bits());
    out
}
