//! Random members of the connected (P5, chair)-free class that contain a C5.

#![allow(dead_code)]

use rand::Rng;
use vcrit_core::pattern::{contains_through, p5_chair};
use vcrit_core::{Graph, VertexSet};

/// Grows a 5-cycle one vertex at a time, drawing each new neighbourhood
/// uniformly from the nonempty ones and rejecting those that create a
/// forbidden induced subgraph. Restarts if a step keeps failing.
pub fn sample_class_member(rng: &mut impl Rng, n: usize) -> Graph {
    let forbidden = p5_chair();
    'restart: loop {
        let mut g = Graph::cycle(5).expect("small");
        while g.order() < n {
            let m = g.order();
            let mut accepted = None;
            for _ in 0..20_000 {
                let mask = rng.gen_range(1..1u64 << m);
                let child = g.add_vertex(VertexSet::from_bits(mask)).expect("small");
                if !forbidden.iter().any(|p| contains_through(&child, p, m)) {
                    accepted = Some(child);
                    break;
                }
            }
            match accepted {
                Some(child) => g = child,
                None => continue 'restart,
            }
        }
        return g;
    }
}
