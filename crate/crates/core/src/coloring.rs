//! Exact colouring: q-colourability, chromatic and clique numbers, and the two
//! criticality notions (vertex- and edge-critical).

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};

/// A proper colouring with colours `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The palette size `q` the colouring was requested with.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Independent check: every colour is in range and no edge is monochromatic.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.num_colors)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Returns a proper `q`-colouring of `g`, or `None` if none exists.
pub fn is_q_colorable(g: &Graph, q: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring {
            colors: Vec::new(),
            num_colors: q,
        });
    }
    if q == 0 {
        return None;
    }
    let mut solver = Dsatur {
        rows: g.rows(),
        q,
        classes: vec![0; q],
        colors: vec![usize::MAX; n],
    };
    if !solver.extend(g.vertices().bits(), 0) {
        return None;
    }
    let coloring = Coloring {
        colors: solver.colors,
        num_colors: q,
    };
    debug_assert!(coloring.is_proper_for(g));
    Some(coloring)
}

/// Backtracking over DSATUR order. A new colour is only ever the next unused
/// one, which removes colour-permutation symmetry.
struct Dsatur<'a> {
    rows: &'a [u64],
    q: usize,
    classes: Vec<u64>,
    colors: Vec<usize>,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize, used: usize) -> u64 {
        let mut mask = 0u64;
        for c in 0..used {
            if self.rows[v] & self.classes[c] != 0 {
                mask |= 1 << c;
            }
        }
        mask
    }

    fn extend(&mut self, uncolored: u64, used: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        // pick max saturation, then max degree into the uncoloured part
        let mut pick = usize::MAX;
        let mut pick_forbidden = 0u64;
        let mut best_key = (0u32, 0u32);
        let mut bits = uncolored;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let forbidden = self.forbidden(v, used);
            let sat = forbidden.count_ones();
            if sat as usize >= self.q {
                return false;
            }
            let key = (sat, (self.rows[v] & uncolored).count_ones());
            if pick == usize::MAX || key > best_key {
                pick = v;
                pick_forbidden = forbidden;
                best_key = key;
            }
        }
        let v = pick;
        let rest = uncolored & !(1 << v);
        let limit = (used + 1).min(self.q);
        for c in 0..limit {
            if pick_forbidden >> c & 1 == 1 {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colors[v] = c;
            if self.extend(rest, used.max(c + 1)) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        self.colors[v] = usize::MAX;
        false
    }
}

/// A maximum clique, by branch and bound over a degeneracy ordering.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.order();
    let rows = g.rows();
    let order = degeneracy_order(g);
    let mut later = g.vertices().bits();
    let mut best = 0u64;
    for &v in &order {
        later &= !(1 << v);
        let candidates = rows[v] & later;
        if 1 + candidates.count_ones() > best.count_ones() {
            expand(rows, 1 << v, candidates, &mut best);
        }
    }
    debug_assert!(n == 0 || best != 0);
    VertexSet::from_bits(best)
}

fn expand(rows: &[u64], clique: u64, mut candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    while candidates != 0 {
        if clique.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        expand(rows, clique | 1 << v, candidates & rows[v], best);
    }
}

/// Smallest-last order: repeatedly remove a minimum-degree vertex.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let mut left = g.vertices().bits();
    let mut order = Vec::with_capacity(g.order());
    while left != 0 {
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        let mut bits = left;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (g.rows()[v] & left).count_ones();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        order.push(pick);
        left &= !(1 << pick);
    }
    order
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// χ(G): 0 for the empty graph; searched upward from ω(G).
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let mut q = clique_number(g);
    while is_q_colorable(g, q).is_none() {
        q += 1;
    }
    q
}

/// χ, ω, every χ(G - v), and the k-vertex-critical verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub k: usize,
    pub chi: usize,
    pub omega: usize,
    pub per_vertex: Vec<usize>,
    pub vertex_critical: bool,
}

pub fn is_k_vertex_critical(g: &Graph, k: usize) -> CriticalityReport {
    let chi = chromatic_number(g);
    let omega = clique_number(g);
    let per_vertex: Vec<usize> = (0..g.order())
        .into_par_iter()
        .map(|v| chromatic_number(&g.remove_vertex(v).expect("vertex in range")))
        .collect();
    let vertex_critical = chi == k && per_vertex.iter().all(|&c| c < k);
    CriticalityReport {
        k,
        chi,
        omega,
        per_vertex,
        vertex_critical,
    }
}

/// Same verdict as `is_k_vertex_critical(g, k).vertex_critical`, with early exits.
pub fn vertex_critical_verdict(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    if g.order() == 0 || is_q_colorable(g, k - 1).is_some() || is_q_colorable(g, k).is_none() {
        return false;
    }
    (0..g.order()).all(|v| is_q_colorable(&g.remove_vertex(v).expect("in range"), k - 1).is_some())
}

/// χ(G) = k and removing any single edge lowers χ.
pub fn is_k_edge_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g) != k {
        return false;
    }
    g.edges()
        .collect::<Vec<_>>()
        .par_iter()
        .all(|&(u, v)| chromatic_number(&g.remove_edge(u, v).expect("in range")) < k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn odd_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_q_colorable(&c5, 2).is_none());
        let col = is_q_colorable(&c5, 3).unwrap();
        assert!(col.is_proper_for(&c5));
        assert_eq!(chromatic_number(&c5), 3);
        assert_eq!(clique_number(&c5), 2);
    }

    #[test]
    fn degenerate_orders() {
        let empty = Graph::empty(0).unwrap();
        assert_eq!(chromatic_number(&empty), 0);
        assert!(is_q_colorable(&empty, 0).is_some());
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()), 1);
        assert!(is_q_colorable(&Graph::empty(1).unwrap(), 0).is_none());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(chromatic_number(&k(5)), 5);
        assert_eq!(clique_number(&k(5)), 5);
        let r = is_k_vertex_critical(&k(5), 5);
        assert!(r.vertex_critical);
        assert_eq!(r.per_vertex, vec![4; 5]);
        assert!(is_k_edge_critical(&k(5), 5));
    }

    #[test]
    fn isolated_vertex_breaks_criticality() {
        let g = k(5).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let r = is_k_vertex_critical(&g, 5);
        assert_eq!(r.chi, 5);
        assert_eq!(r.per_vertex[5], 5);
        assert!(!r.vertex_critical);
        assert!(!vertex_critical_verdict(&g, 5));
    }

    #[test]
    fn pendant_edge_is_not_edge_critical() {
        let g = k(4).add_vertex(VertexSet::singleton(0)).unwrap();
        assert_eq!(chromatic_number(&g), 4);
        assert!(!is_k_edge_critical(&g, 4));
    }
}
