//! Brute-force reference implementations used to cross-check the library.
//!
//! Nothing here calls into the library's search, colouring or labelling code.
//! Graphs are plain adjacency rows (`rows[v]` has bit `w` set iff `vw` is an edge).

#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Rows = Vec<u64>;

pub fn order(rows: &[u64]) -> usize {
    rows.len()
}

pub fn adjacent(rows: &[u64], u: usize, v: usize) -> bool {
    rows[u] >> v & 1 == 1
}

/// The graph whose edge `{i, j}` (i < j, pairs in lexicographic order) is bit `k` of `mask`.
pub fn from_edge_mask(n: usize, mask: u64) -> Rows {
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Rows> {
    (0..1u64 << pair_count(n)).map(move |m| from_edge_mask(n, m))
}

fn edge_mask_under(rows: &[u64], perm: &[usize]) -> u64 {
    let n = rows.len();
    let mut mask = 0u64;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(rows, perm[i], perm[j]) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The least edge mask over all relabellings: equal iff isomorphic.
pub fn certificate(rows: &[u64]) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(rows.len(), |p| best = best.min(edge_mask_under(rows, p)));
    best
}

pub fn isomorphic(a: &[u64], b: &[u64]) -> bool {
    a.len() == b.len() && certificate(a) == certificate(b)
}

pub fn add_vertex(rows: &[u64], mask: u64) -> Rows {
    let n = rows.len();
    let mut out: Rows = rows
        .iter()
        .enumerate()
        .map(|(v, &r)| r | (mask >> v & 1) << n)
        .collect();
    out.push(mask);
    out
}

pub fn delete_vertex(rows: &[u64], v: usize) -> Rows {
    let low = (1u64 << v) - 1;
    rows.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &r)| (r & low) | (r >> 1 & !low))
        .collect()
}

/// One representative per isomorphism class on `n` vertices, keyed by certificate.
///
/// Every graph on `n` vertices is some graph on `n - 1` vertices plus a vertex,
/// so extending each smaller class in every way and merging by certificate is complete.
pub fn classes(n: usize) -> BTreeMap<u64, Rows> {
    let mut level: BTreeMap<u64, Rows> = BTreeMap::new();
    level.insert(0, Vec::new());
    for m in 1..=n {
        let mut next = BTreeMap::new();
        for rows in level.values() {
            for mask in 0..1u64 << (m - 1) {
                let child = add_vertex(rows, mask);
                next.entry(certificate(&child)).or_insert(child);
            }
        }
        level = next;
    }
    level
}

pub fn is_proper(rows: &[u64], colours: &[usize]) -> bool {
    (0..rows.len())
        .all(|u| (u + 1..rows.len()).all(|v| !adjacent(rows, u, v) || colours[u] != colours[v]))
}

/// Exhaustive search over colour assignments in vertex order; colours are
/// introduced in increasing order so each partition is visited once.
pub fn colourable(rows: &[u64], q: usize) -> bool {
    fn go(rows: &[u64], q: usize, v: usize, used: usize, colours: &mut Vec<usize>) -> bool {
        if v == rows.len() {
            return true;
        }
        for c in 0..q.min(used + 1) {
            if (0..v).all(|u| !adjacent(rows, u, v) || colours[u] != c) {
                colours.push(c);
                if go(rows, q, v + 1, used.max(c + 1), colours) {
                    return true;
                }
                colours.pop();
            }
        }
        false
    }
    go(rows, q, 0, 0, &mut Vec::with_capacity(rows.len()))
}

pub fn chromatic(rows: &[u64]) -> usize {
    (0..=rows.len())
        .find(|&q| colourable(rows, q))
        .expect("n colours always suffice")
}

pub fn clique_number(rows: &[u64]) -> usize {
    let n = rows.len();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || s & !(1 << v) & !rows[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn vertex_critical(rows: &[u64], k: usize) -> bool {
    chromatic(rows) == k && (0..rows.len()).all(|v| chromatic(&delete_vertex(rows, v)) == k - 1)
}

/// Whether some injective map of `pat` into `host` preserves adjacency and non-adjacency.
pub fn contains_induced(host: &[u64], pat: &[u64]) -> bool {
    contains_induced_where(host, pat, |_| true)
}

/// As [`contains_induced`], with `v` in the image.
pub fn contains_induced_through(host: &[u64], pat: &[u64], v: usize) -> bool {
    contains_induced_where(host, pat, |map| map.contains(&v))
}

fn contains_induced_where(host: &[u64], pat: &[u64], accept: impl Fn(&[usize]) -> bool) -> bool {
    fn go(
        host: &[u64],
        pat: &[u64],
        map: &mut Vec<usize>,
        accept: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        let i = map.len();
        if i == pat.len() {
            return accept(map);
        }
        for h in 0..host.len() {
            if map.contains(&h) {
                continue;
            }
            if (0..i).all(|j| adjacent(pat, i, j) == adjacent(host, h, map[j])) {
                map.push(h);
                if go(host, pat, map, accept) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(host, pat, &mut Vec::new(), &accept)
}

pub fn edges_to_rows(n: usize, edges: &[(usize, usize)]) -> Rows {
    let mut rows = vec![0u64; n];
    for &(u, v) in edges {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

pub fn p5() -> Rows {
    edges_to_rows(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])
}

pub fn chair() -> Rows {
    edges_to_rows(5, &[(0, 1), (1, 2), (2, 3), (1, 4)])
}

pub fn c5() -> Rows {
    edges_to_rows(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

pub fn p5_chair_free(rows: &[u64]) -> bool {
    !contains_induced(rows, &p5()) && !contains_induced(rows, &chair())
}

pub fn connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = rows[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

/// `k`-vertex-critical (P5, chair)-free graphs on exactly `n` vertices,
/// one per class, found by extending every class on `n - 1` vertices.
pub fn critical_p5_chair_free(n: usize, k: usize) -> Vec<Rows> {
    let mut found: BTreeMap<u64, Rows> = BTreeMap::new();
    for rows in classes(n - 1).values() {
        for mask in 0..1u64 << (n - 1) {
            let g = add_vertex(rows, mask);
            if g.iter().any(|r| (r.count_ones() as usize) + 1 < k) {
                continue;
            }
            if p5_chair_free(&g) && vertex_critical(&g, k) {
                found.entry(certificate(&g)).or_insert(g);
            }
        }
    }
    found.into_values().collect()
}
