mod oracle;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcrit_core::enumerate::search_critical;
use vcrit_core::pattern::p5_chair;
use vcrit_core::{
    canonical_form, chromatic_number, clique_number, find_comparable_pair, find_dominated_pair,
    find_induced, generate_class, is_k_vertex_critical, GenerationSpec, Graph, Pattern, VertexSet,
};

fn graph(rows: &[u64]) -> Graph {
    Graph::from_neighborhoods(rows.iter().map(|&r| VertexSet::from_bits(r)).collect()).unwrap()
}

fn random_rows(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<u64> {
    let mut mask = 0u64;
    for k in 0..oracle::pair_count(n) {
        if rng.gen_bool(p) {
            mask |= 1 << k;
        }
    }
    oracle::from_edge_mask(n, mask)
}

fn certificates(graphs: impl Iterator<Item = Graph>) -> Vec<u64> {
    let mut out: Vec<u64> = graphs.map(|g| oracle::certificate(g.rows())).collect();
    out.sort_unstable();
    out
}

#[test]
fn generation_matches_extension_oracle() {
    for n in 1..=6 {
        let spec = GenerationSpec::new(n, Vec::new());
        let got = certificates(generate_class(&spec).unwrap().filter(|g| g.order() == n));
        let want: Vec<u64> = oracle::classes(n).into_keys().collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn pruned_generation_matches_filtered_oracle() {
    for connected in [false, true] {
        for n in 1..=6 {
            let spec = GenerationSpec {
                connected_only: connected,
                ..GenerationSpec::new(n, p5_chair())
            };
            let got = certificates(generate_class(&spec).unwrap().filter(|g| g.order() == n));
            let want: Vec<u64> = oracle::classes(n)
                .into_iter()
                .filter(|(_, r)| oracle::p5_chair_free(r) && (!connected || oracle::connected(r)))
                .map(|(c, _)| c)
                .collect();
            assert_eq!(got, want, "n = {n}, connected = {connected}");
        }
    }
}

#[test]
fn labelled_isomorphism_partition_n5() {
    let labelled: Vec<Vec<u64>> = oracle::all_labelled(5).collect();
    let mut by_pair = BTreeSet::new();
    for rows in &labelled {
        by_pair.insert((canonical_form(&graph(rows)), oracle::certificate(rows)));
    }
    let forms: BTreeSet<_> = by_pair.iter().map(|(f, _)| f.clone()).collect();
    let certs: BTreeSet<_> = by_pair.iter().map(|(_, c)| *c).collect();
    assert_eq!(forms.len(), 34);
    assert_eq!(certs.len(), 34);
    assert_eq!(by_pair.len(), 34);
}

#[test]
fn colouring_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases: Vec<Vec<u64>> = (1..=6)
        .flat_map(|n| oracle::classes(n).into_values())
        .collect();
    for _ in 0..300 {
        let n = rng.gen_range(6..=9);
        let p = rng.gen_range(0.2..0.9);
        cases.push(random_rows(&mut rng, n, p));
    }
    for rows in cases {
        let g = graph(&rows);
        assert_eq!(chromatic_number(&g), oracle::chromatic(&rows), "{rows:?}");
        assert_eq!(clique_number(&g), oracle::clique_number(&rows), "{rows:?}");
    }
}

#[test]
fn criticality_matches_brute_force() {
    for n in 1..=6 {
        for rows in oracle::classes(n).into_values() {
            let g = graph(&rows);
            let chi = oracle::chromatic(&rows);
            for k in [chi, chi + 1] {
                let report = is_k_vertex_critical(&g, k);
                assert_eq!(
                    report.vertex_critical,
                    oracle::vertex_critical(&rows, k),
                    "{rows:?} k={k}"
                );
                assert_eq!(report.chi, chi);
            }
        }
    }
}

#[test]
fn critical_search_matches_oracle_up_to_seven() {
    let found = search_critical(&GenerationSpec::new(7, p5_chair())).unwrap();
    for n in 5..=7 {
        let got = certificates(found.graphs().filter(|g| g.order() == n).cloned());
        let mut want: Vec<u64> = oracle::critical_p5_chair_free(n, 5)
            .iter()
            .map(|r| oracle::certificate(r))
            .collect();
        want.sort_unstable();
        assert_eq!(got, want, "n = {n}");
    }
    assert_eq!(found.members.len(), 2);
}

#[test]
fn pattern_search_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let patterns =
        ["p5", "chair", "c5", "c4", "k4", "2p2", "p1+k3"].map(|p| Pattern::by_name(p).unwrap());
    for _ in 0..400 {
        let n = rng.gen_range(4..=9);
        let p = rng.gen_range(0.2..0.8);
        let rows = random_rows(&mut rng, n, p);
        let g = graph(&rows);
        for p in &patterns {
            let want = oracle::contains_induced(&rows, p.graph().rows());
            let got = find_induced(&g, p);
            assert_eq!(got.is_some(), want, "{} in {rows:?}", p.name());
            if let Some(e) = got {
                assert!(e.is_induced(&g, p.graph()));
            }
        }
    }
}

#[test]
fn comparable_pairs_match_brute_force() {
    for n in 2..=6 {
        for rows in oracle::classes(n).into_values() {
            let want = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .find(|&(u, v)| {
                    !oracle::adjacent(&rows, u, v)
                        && (rows[u] & !rows[v] == 0 || rows[v] & !rows[u] == 0)
                });
            assert_eq!(find_comparable_pair(&graph(&rows)), want, "{rows:?}");
        }
    }
}

/// All anticomplete disjoint pairs with `χ(X) ≤ χ(Y)` and `Y` complete to `N(X)`.
fn brute_dominated(rows: &[u64], max_x: usize, max_y: usize) -> Option<(u64, u64)> {
    let n = rows.len();
    let sub = |s: u64| -> Vec<u64> {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        vs.iter()
            .map(|&v| {
                vs.iter()
                    .enumerate()
                    .fold(0, |acc, (j, &w)| acc | ((rows[v] >> w & 1) << j))
            })
            .collect()
    };
    let mut best: Option<(usize, u64, usize, u64)> = None;
    for x in 1u64..1 << n {
        let sx = x.count_ones() as usize;
        if sx > max_x {
            continue;
        }
        let nx = (0..n)
            .filter(|&v| x >> v & 1 == 1)
            .fold(0, |acc, v| acc | rows[v])
            & !x;
        for y in 1u64..1 << n {
            let sy = y.count_ones() as usize;
            if sy > max_y || x & y != 0 {
                continue;
            }
            let anticomplete = (0..n).all(|v| y >> v & 1 == 0 || rows[v] & x == 0);
            let complete = (0..n).all(|v| y >> v & 1 == 0 || nx & !rows[v] == 0);
            if anticomplete
                && complete
                && oracle::chromatic(&sub(x)) <= oracle::chromatic(&sub(y))
                && best.is_none_or(|b| (sx, x, sy, y) < b)
            {
                best = Some((sx, x, sy, y));
            }
        }
    }
    best.map(|(_, x, _, y)| (x, y))
}

#[test]
fn dominated_pairs_match_brute_force() {
    for n in 2..=5 {
        for rows in oracle::classes(n).into_values() {
            let g = graph(&rows);
            for (bx, by) in [(1, 1), (2, 2), (2, 1)] {
                let got = find_dominated_pair(&g, bx, by).unwrap();
                if let Some(d) = &got {
                    assert!(d.is_valid_for(&g));
                }
                let got = got.map(|d| (d.x.bits(), d.y.bits()));
                assert_eq!(got, brute_dominated(&rows, bx, by), "{rows:?} ({bx},{by})");
            }
        }
    }
}
