//! Induced-subgraph search and H-freeness.

use std::fmt;

use crate::decomposition::C5Cycle;
use crate::family::FamilyMember;
use crate::graph::Graph;

/// A named small graph to search for as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
    /// Pattern vertices in search order: descending degree, ties by index.
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        let mut order: Vec<usize> = (0..graph.order()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
        Pattern {
            name: name.into(),
            graph,
            order,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The path on `t` vertices.
    pub fn path(t: usize) -> Self {
        Pattern::new(format!("P{t}"), Graph::path(t).expect("small"))
    }

    pub fn cycle(t: usize) -> Self {
        Pattern::new(format!("C{t}"), Graph::cycle(t).expect("small"))
    }

    pub fn complete(t: usize) -> Self {
        Pattern::new(format!("K{t}"), Graph::complete(t).expect("small"))
    }

    /// The path 2-0-1-4 plus a leaf 3 on the middle vertex 0. The degree-3
    /// vertex gets label 0 so the search starts there.
    pub fn chair() -> Self {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).expect("small");
        Pattern::new("chair", g)
    }

    pub fn two_p2() -> Self {
        Pattern::new(
            "2P2",
            Graph::from_edges(4, &[(0, 1), (2, 3)]).expect("small"),
        )
    }

    pub fn p1_plus_k3() -> Self {
        Pattern::new(
            "P1+K3",
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).expect("small"),
        )
    }

    pub fn family(member: FamilyMember) -> Self {
        Pattern::new(member.name(), member.graph())
    }

    /// Built-in patterns by case-insensitive name: `p2`…`p5`, `c4`, `c5`,
    /// `k3`…`k5`, `chair`, `2p2`, `p1+k3`, `w`, `p`, `q1`, `q2`, `q3`.
    pub fn by_name(name: &str) -> Option<Self> {
        let lower = name.trim().to_ascii_lowercase();
        let pat = match lower.as_str() {
            "p2" | "p3" | "p4" | "p5" => Pattern::path(lower[1..].parse().ok()?),
            "c4" | "c5" => Pattern::cycle(lower[1..].parse().ok()?),
            "k3" | "k4" | "k5" => Pattern::complete(lower[1..].parse().ok()?),
            "chair" => Pattern::chair(),
            "2p2" => Pattern::two_p2(),
            "p1+k3" => Pattern::p1_plus_k3(),
            "w" => Pattern::family(FamilyMember::W),
            "p" => Pattern::family(FamilyMember::P),
            "q1" => Pattern::family(FamilyMember::Q1),
            "q2" => Pattern::family(FamilyMember::Q2),
            "q3" => Pattern::family(FamilyMember::Q3),
            _ => return None,
        };
        Some(pat)
    }

    /// Parses a comma-separated list such as `p5,chair`; `none` or an empty string is the empty list.
    pub fn parse_list(list: &str) -> Result<Vec<Pattern>, String> {
        let list = list.trim();
        if list.is_empty() || list.eq_ignore_ascii_case("none") {
            return Ok(Vec::new());
        }
        list.split(',')
            .map(|s| Pattern::by_name(s).ok_or_else(|| format!("unknown pattern '{}'", s.trim())))
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `map[p]` is the host vertex playing pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Independent check that the map is injective and preserves both edges and non-edges.
    pub fn is_induced(&self, host: &Graph, pat: &Graph) -> bool {
        let k = pat.order();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        for a in 0..k {
            for b in (a + 1)..k {
                if self.map[a] == self.map[b]
                    || pat.has_edge(a, b) != host.has_edge(self.map[a], self.map[b])
                {
                    return false;
                }
            }
        }
        true
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pat: &'a Pattern,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
}

impl Matcher<'_> {
    fn new<'a>(host: &'a Graph, pat: &'a Pattern) -> Matcher<'a> {
        let order = pat.order.clone();
        Matcher {
            host,
            pat,
            order,
            map: vec![usize::MAX; pat.graph.order()],
            used: 0,
        }
    }

    /// Search with pattern vertex `p` fixed to host vertex `v`, `p` placed first.
    fn pinned<'a>(host: &'a Graph, pat: &'a Pattern, p: usize, v: usize) -> Matcher<'a> {
        let mut order = Vec::with_capacity(pat.order.len());
        order.push(p);
        order.extend(pat.order.iter().copied().filter(|&q| q != p));
        let mut map = vec![usize::MAX; pat.graph.order()];
        map[p] = v;
        Matcher {
            host,
            pat,
            order,
            map,
            used: 1 << v,
        }
    }

    fn candidates(&self, depth: usize) -> u64 {
        let p = self.order[depth];
        let rows = self.host.rows();
        let mut cand = self.host.vertices().bits() & !self.used;
        for &q in &self.order[..depth] {
            let image = self.map[q];
            if self.pat.graph.has_edge(p, q) {
                cand &= rows[image];
            } else {
                cand &= !rows[image];
            }
        }
        let need = self.pat.graph.degree(p) as u32;
        let mut out = 0u64;
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if rows[v].count_ones() >= need {
                out |= 1 << v;
            }
        }
        out
    }

    /// Extends the partial map at `depth` in search order; host candidates ascending.
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        if self.map[p] != usize::MAX {
            return self.pinned_consistent(depth) && self.search(depth + 1);
        }
        let mut cand = self.candidates(depth);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.map[p] = v;
            self.used |= 1 << v;
            if self.search(depth + 1) {
                return true;
            }
            self.used &= !(1 << v);
            self.map[p] = usize::MAX;
        }
        false
    }

    fn pinned_consistent(&self, depth: usize) -> bool {
        let p = self.order[depth];
        let image = self.map[p];
        self.host.degree(image) >= self.pat.graph.degree(p)
            && self.order[..depth]
                .iter()
                .all(|&q| self.pat.graph.has_edge(p, q) == self.host.has_edge(image, self.map[q]))
    }
}

/// The lexicographically least induced embedding of `pat` in `host`, where
/// embeddings are compared as tuples listed in the pattern's search order.
pub fn find_induced(host: &Graph, pat: &Pattern) -> Option<Embedding> {
    let k = pat.graph.order();
    if k > host.order() {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let mut m = Matcher::new(host, pat);
    if m.search(0) {
        Some(Embedding { map: m.map })
    } else {
        None
    }
}

/// Whether some induced copy of `pat` in `host` uses vertex `v`.
pub fn contains_through(host: &Graph, pat: &Pattern, v: usize) -> bool {
    let k = pat.graph.order();
    if k > host.order() || v >= host.order() {
        return false;
    }
    (0..k).any(|p| {
        if pat.graph.degree(p) > host.degree(v) {
            return false;
        }
        Matcher::pinned(host, pat, p, v).search(0)
    })
}

/// A forbidden pattern found in a host graph.
#[derive(Clone, Debug)]
pub struct Violation<'p> {
    pub pattern: &'p Pattern,
    pub embedding: Embedding,
}

/// The first listed pattern contained in `host`, with its embedding.
pub fn find_violation<'p>(host: &Graph, pats: &'p [Pattern]) -> Option<Violation<'p>> {
    pats.iter().find_map(|pattern| {
        find_induced(host, pattern).map(|embedding| Violation { pattern, embedding })
    })
}

pub fn is_free(host: &Graph, pats: &[Pattern]) -> bool {
    find_violation(host, pats).is_none()
}

/// Every induced 5-cycle, once per dihedral class, as the least of its ten
/// cyclic orderings: `v1` is the minimum vertex and `v2 < v5`.
pub fn all_induced_c5(host: &Graph) -> Vec<C5Cycle> {
    let n = host.order();
    let mut out = Vec::new();
    for v1 in 0..n {
        let above = !((2u64 << v1).wrapping_sub(1)) & host.vertices().bits();
        let n1 = host.neighbors(v1).bits();
        let mut n1_above = n1 & above;
        while n1_above != 0 {
            let v2 = n1_above.trailing_zeros() as usize;
            n1_above &= n1_above - 1;
            let n2 = host.neighbors(v2).bits();
            let mut fifth = n1_above & !n2;
            while fifth != 0 {
                let v5 = fifth.trailing_zeros() as usize;
                fifth &= fifth - 1;
                let n5 = host.neighbors(v5).bits();
                let mut third = n2 & above & !n1 & !n5 & !(1 << v1);
                while third != 0 {
                    let v3 = third.trailing_zeros() as usize;
                    third &= third - 1;
                    let n3 = host.neighbors(v3).bits();
                    let mut fourth = n3 & n5 & above & !n1 & !n2;
                    while fourth != 0 {
                        let v4 = fourth.trailing_zeros() as usize;
                        fourth &= fourth - 1;
                        out.push(C5Cycle::new_unchecked([v1, v2, v3, v4, v5]));
                    }
                }
            }
        }
    }
    out
}

/// The first family member (in the order K5, W, P, Q1, Q2, Q3) that `g` contains.
pub fn classify_family(g: &Graph) -> Option<FamilyMember> {
    FamilyMember::ALL
        .into_iter()
        .find(|&m| find_induced(g, &Pattern::family(m)).is_some())
}

/// The patterns every graph of the studied class avoids.
pub fn p5_chair() -> Vec<Pattern> {
    vec![Pattern::path(5), Pattern::chair()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chair_shape() {
        let c = Pattern::chair();
        assert_eq!(c.graph().edge_count(), 4);
        assert_eq!(c.graph().degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert!(c.graph().is_connected());
    }

    #[test]
    fn chair_embeds_into_itself_identically() {
        let c = Pattern::chair();
        let e = find_induced(c.graph(), &c).unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn path_has_no_chair() {
        let p5 = Graph::path(5).unwrap();
        assert!(find_induced(&p5, &Pattern::chair()).is_none());
        let pats = p5_chair();
        let v = find_violation(&p5, &pats).unwrap();
        assert_eq!(v.pattern.name(), "P5");
        assert!(v.embedding.is_induced(&p5, v.pattern.graph()));
    }

    #[test]
    fn c5_is_p5_chair_free() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_free(&c5, &p5_chair()));
        assert!(find_induced(&c5, &Pattern::path(4)).is_some());
    }

    #[test]
    fn induced_means_non_edges_too() {
        // K4 contains P3 as a subgraph but not as an induced subgraph
        let k4 = Graph::complete(4).unwrap();
        assert!(find_induced(&k4, &Pattern::path(3)).is_none());
        assert!(find_induced(&k4, &Pattern::complete(3)).is_some());
    }

    #[test]
    fn pinned_search() {
        // P4 0-1-2-3 plus isolated 4: P3 through 3 exists, through 4 does not
        let g = Graph::path(4)
            .unwrap()
            .add_vertex(Default::default())
            .unwrap();
        let p3 = Pattern::path(3);
        assert!(contains_through(&g, &p3, 3));
        assert!(!contains_through(&g, &p3, 4));
        assert!(contains_through(&g, &Pattern::complete(1), 4));
    }

    #[test]
    fn c5_enumeration() {
        assert_eq!(all_induced_c5(&Graph::cycle(5).unwrap()).len(), 1);
        assert!(all_induced_c5(&Graph::complete(5).unwrap()).is_empty());
        let p = FamilyMember::P.graph();
        let cycles = all_induced_c5(&p);
        assert!(cycles.iter().any(|c| c.vertices() == [0, 1, 2, 3, 4]));
    }

    #[test]
    fn family_classification() {
        assert_eq!(
            classify_family(&Graph::complete(6).unwrap()),
            Some(FamilyMember::K5)
        );
        assert_eq!(classify_family(&Graph::cycle(5).unwrap()), None);
        assert_eq!(
            classify_family(&FamilyMember::Q2.graph()),
            Some(FamilyMember::Q2)
        );
    }

    #[test]
    fn pattern_names() {
        for name in [
            "P2", "p5", "C4", "c5", "k3", "K5", "chair", "2P2", "P1+K3", "w", "Q3",
        ] {
            assert!(Pattern::by_name(name).is_some(), "{name}");
        }
        assert!(Pattern::by_name("p6").is_none());
        assert_eq!(Pattern::parse_list("p5, chair").unwrap().len(), 2);
        assert!(Pattern::parse_list("none").unwrap().is_empty());
        assert!(Pattern::parse_list("p5,bogus").is_err());
    }
}
