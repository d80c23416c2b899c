//! Canonical labelling by equitable partition refinement with individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first non-singleton cell, and branch on each of its
//! vertices. Leaves are compared by their permuted adjacency matrix; the
//! smallest matrix (rows read as bit strings, position 0 most significant)
//! defines the canonical form. Two pruning rules keep symmetric graphs cheap:
//! a leaf equal to the first leaf yields an automorphism and abandons the
//! subtree back to where the paths diverge, and children in the same orbit of
//! the discovered automorphisms fixing the current path are skipped.

use crate::format::emit_graph6;
use crate::graph::{Graph, VertexSet};

/// Result of a canonical-labelling search.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[p]` is the vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// The input relabelled so vertex `order[p]` becomes `p`.
    pub graph: Graph,
    /// Automorphisms found during the search; they generate the full group.
    pub generators: Vec<Vec<usize>>,
    orbit_rep: Vec<usize>,
}

impl CanonicalLabeling {
    /// Smallest vertex in the automorphism orbit of `v`.
    pub fn orbit_representative(&self, v: usize) -> usize {
        self.orbit_rep[v]
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_rep[u] == self.orbit_rep[v]
    }

    /// Orbits of the automorphism group, ordered by minimum vertex.
    pub fn orbits(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        for v in 0..self.orbit_rep.len() {
            if self.orbit_rep[v] == v {
                out.push(
                    (0..self.orbit_rep.len())
                        .filter(|&w| self.orbit_rep[w] == v)
                        .collect(),
                );
            }
        }
        out
    }
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    canonical_labeling_with(g, &[g.vertices()])
}

/// Canonical labelling relative to an ordered initial colouring of the vertices.
///
/// `cells` must partition the vertex set; only colour-preserving relabellings
/// are considered, and the colour classes keep their order.
pub fn canonical_labeling_with(g: &Graph, cells: &[VertexSet]) -> CanonicalLabeling {
    let n = g.order();
    debug_assert_eq!(
        cells.iter().fold(VertexSet::EMPTY, |a, &c| a | c),
        g.vertices(),
        "initial cells must cover the vertex set"
    );
    let mut start: Vec<u64> = cells
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| c.bits())
        .collect();
    if n == 0 {
        return CanonicalLabeling {
            order: Vec::new(),
            graph: g.clone(),
            generators: Vec::new(),
            orbit_rep: Vec::new(),
        };
    }
    refine(g, &mut start);

    let mut search = Search {
        g,
        first: None,
        first_path: Vec::new(),
        best: None,
        generators: Vec::new(),
    };
    search.visit(start, &mut Vec::new());

    let best = search.best.expect("search visits at least one leaf");
    let mut position = vec![0; n];
    for (p, &v) in best.order.iter().enumerate() {
        position[v] = p;
    }
    let graph = g.permuted(&position);
    let orbit_rep = orbit_representatives(n, search.generators.iter());
    CanonicalLabeling {
        order: best.order,
        graph,
        generators: search.generators,
        orbit_rep,
    }
}

/// A byte string equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    emit_graph6(&canonical_labeling(g).graph).into_bytes()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_labeling(g).graph == canonical_labeling(h).graph
}

/// Refines an ordered partition (cells as bit masks) to the coarsest equitable
/// refinement, splitting cells by neighbour counts in ascending order.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    let rows = g.rows();
    let mut keyed: Vec<(u32, u32)> = Vec::with_capacity(n);
    let mut next: Vec<u64> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cells.len() {
            if cells.len() == n {
                return;
            }
            let splitter = cells[i];
            next.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    next.push(cell);
                    continue;
                }
                keyed.clear();
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    keyed.push(((rows[v as usize] & splitter).count_ones(), v));
                }
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                changed = true;
                let mut current = 0u64;
                let mut key = keyed[0].0;
                for &(k, v) in &keyed {
                    if k != key {
                        next.push(current);
                        current = 0;
                        key = k;
                    }
                    current |= 1 << v;
                }
                next.push(current);
            }
            std::mem::swap(cells, &mut next);
            i += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when an automorphism to the first leaf was found and
    /// the search should unwind to the node at `level` on the first path.
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.g.order() {
            return self.leaf(&cells, path);
        }
        let t = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[t];
        let level = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        let mut reps_for = usize::MAX;

        for v in VertexSet::from_bits(target).iter() {
            if !explored.is_empty() {
                if reps_for != self.generators.len() {
                    let fixing = self
                        .generators
                        .iter()
                        .filter(|gamma| path.iter().all(|&p| gamma[p] == p));
                    reps = orbit_representatives(self.g.order(), fixing);
                    reps_for = self.generators.len();
                }
                if explored.iter().any(|&u| reps[u] == reps[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);

            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.g, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                code: code.clone(),
                order: order.clone(),
            });
            self.first_path = path.to_vec();
            self.best = Some(Leaf { code, order });
            return None;
        };
        if code == first.code {
            let gamma = mapping(&order, &first.order);
            self.generators.push(gamma);
            let diverge = path
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(diverge);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match code.cmp(&best.code) {
            std::cmp::Ordering::Less => self.best = Some(Leaf { code, order }),
            std::cmp::Ordering::Equal => {
                let gamma = mapping(&order, &best.order);
                self.generators.push(gamma);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }
}

/// Permutation sending `from[p]` to `to[p]` for every position `p`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn leaf_code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut position = [0usize; 64];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, w| acc | 1u64 << (63 - position[w]))
        })
        .collect()
}

fn orbit_representatives<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for gamma in gens {
        for (v, &w) in gamma.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
