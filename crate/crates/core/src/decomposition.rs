//! Classification of the vertices outside an induced 5-cycle by their exact
//! neighbourhood on the cycle.
//!
//! Cycle positions and class indices are 0-based and taken mod 5. For the
//! cycle `(v0, …, v4)` a vertex `x` outside it falls into exactly one class:
//!
//! | class     | `N(x) ∩ C`                        |
//! |-----------|-----------------------------------|
//! | `S0`      | ∅                                 |
//! | `S1(i)`   | `{v_i}`                           |
//! | `S21(i)`  | `{v_i, v_{i+1}}`                  |
//! | `S22(i)`  | `{v_i, v_{i+2}}`                  |
//! | `S31(i)`  | `{v_{i-1}, v_i, v_{i+1}}`         |
//! | `S32(i)`  | `{v_{i-2}, v_i, v_{i+2}}`         |
//! | `S4(i)`   | `C \ {v_i}`                       |
//! | `S5`      | `C`                               |

use std::fmt;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// `(i + delta) mod 5` for cycle indices.
pub fn shift(i: usize, delta: isize) -> usize {
    (i as isize + delta).rem_euclid(5) as usize
}

/// An induced 5-cycle `v0 v1 v2 v3 v4` listed in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct C5Cycle([usize; 5]);

impl C5Cycle {
    /// Validates that consecutive entries are adjacent and all other pairs are not.
    pub fn new(g: &Graph, vertices: [usize; 5]) -> Result<Self, GraphError> {
        let c = C5Cycle(vertices);
        let fail = |why: String| Err(GraphError::NotInducedCycle(c.to_string(), why));
        for &v in &vertices {
            if v >= g.order() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: g.order(),
                });
            }
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                let (a, b) = (vertices[i], vertices[j]);
                if a == b {
                    return fail(format!("vertex {a} repeated"));
                }
                let consecutive = j == i + 1 || (i == 0 && j == 4);
                match (consecutive, g.has_edge(a, b)) {
                    (true, false) => return fail(format!("missing edge {a}-{b}")),
                    (false, true) => return fail(format!("chord {a}-{b}")),
                    _ => {}
                }
            }
        }
        Ok(c)
    }

    pub(crate) fn new_unchecked(vertices: [usize; 5]) -> Self {
        C5Cycle(vertices)
    }

    pub fn vertices(&self) -> [usize; 5] {
        self.0
    }

    /// `v_{i mod 5}`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i % 5]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// The same cycle started `by` positions later: entry `j` becomes `v_{j+by}`.
    pub fn rotated(&self, by: usize) -> Self {
        C5Cycle(std::array::from_fn(|j| self.0[(j + by) % 5]))
    }

    /// The same cycle traversed backwards from `v0`: entry `j` becomes `v_{-j}`.
    pub fn reflected(&self) -> Self {
        C5Cycle(std::array::from_fn(|j| self.0[shift(0, -(j as isize))]))
    }

    /// The least of the ten orderings describing the same cycle.
    pub fn canonical(&self) -> Self {
        (0..5)
            .flat_map(|r| [self.rotated(r), self.rotated(r).reflected()])
            .min()
            .expect("ten orderings")
    }
}

impl fmt::Display for C5Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "{a},{b},{c},{d},{e}")
    }
}

/// One of the 32 classes; indices are cycle positions `0..5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SClass {
    S0,
    S1(usize),
    S21(usize),
    S22(usize),
    S31(usize),
    S32(usize),
    S4(usize),
    S5,
}

impl SClass {
    /// All 32 classes, grouped by kind, indices ascending.
    pub fn all() -> Vec<SClass> {
        let mut out = vec![SClass::S0];
        for make in [
            SClass::S1,
            SClass::S21,
            SClass::S22,
            SClass::S31,
            SClass::S32,
            SClass::S4,
        ] {
            out.extend((0..5).map(make));
        }
        out.push(SClass::S5);
        out
    }

    /// The cycle positions a member is adjacent to, as a 5-bit mask.
    pub fn positions(self) -> u8 {
        let bit = |i: usize, d: isize| 1u8 << shift(i, d);
        match self {
            SClass::S0 => 0,
            SClass::S1(i) => bit(i, 0),
            SClass::S21(i) => bit(i, 0) | bit(i, 1),
            SClass::S22(i) => bit(i, 0) | bit(i, 2),
            SClass::S31(i) => bit(i, -1) | bit(i, 0) | bit(i, 1),
            SClass::S32(i) => bit(i, -2) | bit(i, 0) | bit(i, 2),
            SClass::S4(i) => 0b11111 & !bit(i, 0),
            SClass::S5 => 0b11111,
        }
    }

    /// Inverse of [`SClass::positions`]; `mask` must be below 32.
    pub fn from_positions(mask: u8) -> SClass {
        debug_assert!(mask < 32);
        let kinds: &[fn(usize) -> SClass] = match mask.count_ones() {
            0 => return SClass::S0,
            5 => return SClass::S5,
            1 => &[SClass::S1],
            2 => &[SClass::S21, SClass::S22],
            3 => &[SClass::S31, SClass::S32],
            _ => &[SClass::S4],
        };
        kinds
            .iter()
            .flat_map(|make| (0..5).map(make))
            .find(|c| c.positions() == mask)
            .expect("every 5-bit mask names a class")
    }

    pub fn index(self) -> Option<usize> {
        match self {
            SClass::S0 | SClass::S5 => None,
            SClass::S1(i)
            | SClass::S21(i)
            | SClass::S22(i)
            | SClass::S31(i)
            | SClass::S32(i)
            | SClass::S4(i) => Some(i),
        }
    }
}

/// Printed with 1-based indices (`S4(1)` is the 0-based `S4(0)`).
impl fmt::Display for SClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, i) = match *self {
            SClass::S0 => return f.write_str("S0"),
            SClass::S5 => return f.write_str("S5"),
            SClass::S1(i) => ("S1", i),
            SClass::S21(i) => ("S2^1", i),
            SClass::S22(i) => ("S2^2", i),
            SClass::S31(i) => ("S3^1", i),
            SClass::S32(i) => ("S3^2", i),
            SClass::S4(i) => ("S4", i),
        };
        write!(f, "{kind}({})", i + 1)
    }
}

/// The labelling of `V \ C` relative to one anchor cycle.
#[derive(Clone, Debug)]
pub struct Decomposition {
    host: Graph,
    cycle: C5Cycle,
    labels: Vec<Option<SClass>>,
    by_mask: [VertexSet; 32],
}

/// Classifies every vertex off `cycle`; fails if `cycle` is not an induced C5 of `g`.
pub fn decompose(g: &Graph, cycle: C5Cycle) -> Result<Decomposition, GraphError> {
    let cycle = C5Cycle::new(g, cycle.vertices())?;
    Ok(Decomposition::build(g, cycle))
}

impl Decomposition {
    pub(crate) fn build(g: &Graph, cycle: C5Cycle) -> Self {
        let on_cycle = cycle.vertex_set();
        let mut labels = vec![None; g.order()];
        let mut by_mask = [VertexSet::EMPTY; 32];
        for v in (g.vertices() - on_cycle).iter() {
            let mask = (0..5)
                .filter(|&i| g.has_edge(v, cycle.at(i)))
                .fold(0u8, |m, i| m | 1 << i);
            labels[v] = Some(SClass::from_positions(mask));
            by_mask[mask as usize].insert(v);
        }
        Decomposition {
            host: g.clone(),
            cycle,
            labels,
            by_mask,
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cycle(&self) -> C5Cycle {
        self.cycle
    }

    /// `None` for cycle vertices.
    pub fn label(&self, v: usize) -> Option<SClass> {
        self.labels[v]
    }

    pub fn class(&self, c: SClass) -> VertexSet {
        self.by_mask[c.positions() as usize]
    }

    pub fn s0(&self) -> VertexSet {
        self.class(SClass::S0)
    }

    pub fn s1(&self, i: usize) -> VertexSet {
        self.class(SClass::S1(i % 5))
    }

    pub fn s21(&self, i: usize) -> VertexSet {
        self.class(SClass::S21(i % 5))
    }

    pub fn s22(&self, i: usize) -> VertexSet {
        self.class(SClass::S22(i % 5))
    }

    pub fn s31(&self, i: usize) -> VertexSet {
        self.class(SClass::S31(i % 5))
    }

    pub fn s32(&self, i: usize) -> VertexSet {
        self.class(SClass::S32(i % 5))
    }

    pub fn s4(&self, i: usize) -> VertexSet {
        self.class(SClass::S4(i % 5))
    }

    pub fn s5(&self) -> VertexSet {
        self.class(SClass::S5)
    }

    /// `S4(i+2) ∪ S4(i-2)`.
    pub fn s4_far(&self, i: usize) -> VertexSet {
        self.s4(shift(i, 2)) | self.s4(shift(i, -2))
    }

    /// `T_i = S31(i±2) ∪ S32(i±1) ∪ S32(i±2)`.
    pub fn t_set(&self, i: usize) -> VertexSet {
        [2, -2]
            .iter()
            .fold(VertexSet::EMPTY, |acc, &d| acc | self.s31(shift(i, d)))
            | [1, -1, 2, -2]
                .iter()
                .fold(VertexSet::EMPTY, |acc, &d| acc | self.s32(shift(i, d)))
    }

    /// `R_i = S31(i±1) ∪ S32(i) ∪ S4(i±1) ∪ S5`.
    pub fn r_set(&self, i: usize) -> VertexSet {
        self.s31(shift(i, 1))
            | self.s31(shift(i, -1))
            | self.s32(i)
            | self.s4(shift(i, 1))
            | self.s4(shift(i, -1))
            | self.s5()
    }

    /// Nonempty classes in [`SClass::all`] order.
    pub fn nonempty_classes(&self) -> Vec<(SClass, VertexSet)> {
        SClass::all()
            .into_iter()
            .map(|c| (c, self.class(c)))
            .filter(|(_, s)| !s.is_empty())
            .collect()
    }
}
