//! The structural claims about an anchored C5 decomposition, each as an
//! executable predicate that either holds or produces a violating witness.
//!
//! Tier A claims only need the host to be connected, P5-free and chair-free.
//! Tier B claims also need the host to be 5-vertex-critical and free of the
//! six known critical graphs (B2 needs criticality only).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coloring::{is_q_colorable, vertex_critical_verdict};
use crate::decomposition::{C5Cycle, Decomposition};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{all_induced_c5, classify_family, is_free, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    A1,
    B2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    B11,
    B12,
    B13,
    B14,
    B15,
    B16,
    B17,
    B18,
    B19,
    B20,
    B21,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tier {
    A,
    B,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::A => "A",
            Tier::B => "B",
        })
    }
}

impl ClaimId {
    pub const ALL: [ClaimId; 21] = [
        ClaimId::A1,
        ClaimId::B2,
        ClaimId::A3,
        ClaimId::A4,
        ClaimId::A5,
        ClaimId::A6,
        ClaimId::A7,
        ClaimId::A8,
        ClaimId::A9,
        ClaimId::A10,
        ClaimId::B11,
        ClaimId::B12,
        ClaimId::B13,
        ClaimId::B14,
        ClaimId::B15,
        ClaimId::B16,
        ClaimId::B17,
        ClaimId::B18,
        ClaimId::B19,
        ClaimId::B20,
        ClaimId::B21,
    ];

    /// A1, A3 through A10.
    pub const TIER_A: [ClaimId; 9] = [
        ClaimId::A1,
        ClaimId::A3,
        ClaimId::A4,
        ClaimId::A5,
        ClaimId::A6,
        ClaimId::A7,
        ClaimId::A8,
        ClaimId::A9,
        ClaimId::A10,
    ];

    pub fn tier(self) -> Tier {
        match self {
            ClaimId::A1
            | ClaimId::A3
            | ClaimId::A4
            | ClaimId::A5
            | ClaimId::A6
            | ClaimId::A7
            | ClaimId::A8
            | ClaimId::A9
            | ClaimId::A10 => Tier::A,
            _ => Tier::B,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ClaimId::A1 => "A1",
            ClaimId::B2 => "B2",
            ClaimId::A3 => "A3",
            ClaimId::A4 => "A4",
            ClaimId::A5 => "A5",
            ClaimId::A6 => "A6",
            ClaimId::A7 => "A7",
            ClaimId::A8 => "A8",
            ClaimId::A9 => "A9",
            ClaimId::A10 => "A10",
            ClaimId::B11 => "B11",
            ClaimId::B12 => "B12",
            ClaimId::B13 => "B13",
            ClaimId::B14 => "B14",
            ClaimId::B15 => "B15",
            ClaimId::B16 => "B16",
            ClaimId::B17 => "B17",
            ClaimId::B18 => "B18",
            ClaimId::B19 => "B19",
            ClaimId::B20 => "B20",
            ClaimId::B21 => "B21",
        }
    }

    /// One-line statement of the predicate, with 1-based indices.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::A1 => "S1(i), S2^1(i) and S2^2(i) are empty",
            ClaimId::B2 => "S0 is empty",
            ClaimId::A3 => "S3^1(i) is a clique",
            ClaimId::A4 => "no vertex of S4(i) or S5 is mixed on a component of S3^2(i)",
            ClaimId::A5 => "no vertex outside S3^2(i), S4(i), S5 is mixed on S3^2(i)",
            ClaimId::A6 => "every component of S3^2(i) is homogeneous",
            ClaimId::A7 => "S4(i) is complete to T(i)",
            ClaimId::A8 => "no vertex of S3^1(i) or S4(i+-2) is mixed on a non-edge of S4(i)",
            ClaimId::A9 => "every vertex of R(i) sees a vertex of each non-edge of S4(i)",
            ClaimId::A10 => "S4(i+-2) is complete to each non-edge of S4(i)",
            ClaimId::B11 => "|S3^1(i)| <= 2",
            ClaimId::B12 => "S3^2(i), S4(i) and S5 together induce a bipartite graph",
            ClaimId::B13 => "S5 is independent",
            ClaimId::B14 => "every homogeneous component of S3^2(i) or S4(i) is K1 or K2",
            ClaimId::B15 => "|S3^2(i)| <= 3",
            ClaimId::B16 => "S4(i) is a star or complete to S4(i+2) and S4(i-2)",
            ClaimId::B17 => "if S4(i) is a star then |S4(i)| <= 2",
            ClaimId::B18 => {
                "if S4(i) is complete to S4(i+-2) and R(i) is nonempty then |S4(i)| <= 6"
            }
            ClaimId::B19 => "if S4(i) is complete to S4(i+-2) and R(i) is empty then |S4(i)| <= 2",
            ClaimId::B20 => "|S4(i)| <= 6",
            ClaimId::B21 => {
                "S5 vertices have distinct neighbourhoods in the S3 and S4 classes \
                 (so |S5| <= 2^55 holds trivially)"
            }
        }
    }

    fn needs_family_free(self) -> bool {
        self.tier() == Tier::B && self != ClaimId::B2
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Hypothesis flags; `None` means not evaluated because an earlier one failed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Hypotheses {
    pub connected: Option<bool>,
    pub p5_free: Option<bool>,
    pub chair_free: Option<bool>,
    pub contains_cycle: Option<bool>,
    pub vertex_critical: Option<bool>,
    pub family_free: Option<bool>,
}

impl Hypotheses {
    /// Cheapest first, stopping at the first failure.
    pub fn evaluate(g: &Graph) -> Self {
        Self::compute(g, false)
    }

    /// Every flag, regardless of earlier failures.
    pub fn evaluate_all(g: &Graph) -> Self {
        Self::compute(g, true)
    }

    fn compute(g: &Graph, all: bool) -> Self {
        let mut h = Hypotheses::default();
        let mut go = true;
        let mut step = |slot: &mut Option<bool>, f: &dyn Fn() -> bool| {
            if go || all {
                let value = f();
                *slot = Some(value);
                go &= value;
            }
        };
        step(&mut h.connected, &|| g.is_connected());
        step(&mut h.p5_free, &|| is_free(g, &[Pattern::path(5)]));
        step(&mut h.chair_free, &|| is_free(g, &[Pattern::chair()]));
        step(&mut h.contains_cycle, &|| !all_induced_c5(g).is_empty());
        step(&mut h.vertex_critical, &|| vertex_critical_verdict(g, 5));
        step(&mut h.family_free, &|| classify_family(g).is_none());
        h
    }

    pub fn met_for(&self, claim: ClaimId) -> bool {
        let yes = |flag: Option<bool>| flag == Some(true);
        let base = yes(self.connected)
            && yes(self.p5_free)
            && yes(self.chair_free)
            && yes(self.contains_cycle);
        match claim.tier() {
            Tier::A => base,
            Tier::B => {
                base && yes(self.vertex_critical)
                    && (!claim.needs_family_free() || yes(self.family_free))
            }
        }
    }

    /// Named flags in evaluation order.
    pub fn flags(&self) -> [(&'static str, Option<bool>); 6] {
        [
            ("connected", self.connected),
            ("p5-free", self.p5_free),
            ("chair-free", self.chair_free),
            ("contains-c5", self.contains_cycle),
            ("5-vertex-critical", self.vertex_critical),
            ("family-free", self.family_free),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub tier: Tier,
    pub hypotheses: Hypotheses,
    pub verdict: Verdict,
    /// The failing 0-based index for claims quantified over i.
    pub index: Option<usize>,
    pub witness: Vec<usize>,
}

/// Evaluates hypotheses on the host, then the claim if they are met.
pub fn check_claim(d: &Decomposition, claim: ClaimId) -> ClaimReport {
    check_claim_with(d, claim, &Hypotheses::evaluate(d.host()), false)
}

/// With `bypass` the predicate is evaluated even when hypotheses are unmet.
pub fn check_claim_with(
    d: &Decomposition,
    claim: ClaimId,
    hypotheses: &Hypotheses,
    bypass: bool,
) -> ClaimReport {
    let mut report = ClaimReport {
        claim,
        tier: claim.tier(),
        hypotheses: *hypotheses,
        verdict: Verdict::Skipped,
        index: None,
        witness: Vec::new(),
    };
    if !bypass && !hypotheses.met_for(claim) {
        return report;
    }
    match violation(d, claim) {
        None => report.verdict = Verdict::Holds,
        Some((index, witness)) => {
            report.verdict = Verdict::Fails;
            report.index = index;
            report.witness = witness;
        }
    }
    report
}

type Failure = (Option<usize>, Vec<usize>);

fn per_index(f: impl Fn(usize) -> Option<Vec<usize>>) -> Option<Failure> {
    (0..5).find_map(|i| f(i).map(|w| (Some(i), w)))
}

/// First nonadjacent pair `u < v` inside `s`.
fn non_edges(g: &Graph, s: VertexSet) -> impl Iterator<Item = (usize, usize)> + '_ {
    s.iter().flat_map(move |u| {
        (s - g.neighbors(u))
            .iter()
            .filter(move |&v| v > u)
            .map(move |v| (u, v))
    })
}

/// `[s, a, b]` with `s ~ a`, `s !~ b` when `s` is mixed on `{u, v}`.
fn mixed_on(g: &Graph, s: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    match (g.has_edge(s, u), g.has_edge(s, v)) {
        (true, false) => Some(vec![s, u, v]),
        (false, true) => Some(vec![s, v, u]),
        _ => None,
    }
}

/// `[s, u, v]` with `s ~ u`, `s !~ v`, both in `k`, taking the least such `u`, `v`.
fn mixed_on_set(g: &Graph, s: usize, k: VertexSet) -> Option<Vec<usize>> {
    let seen = g.neighbors(s) & k;
    let unseen = k - g.neighbors(s);
    Some(vec![s, seen.min()?, unseen.min()?])
}

/// An edge `uv` of `k` with `s ~ u`, `s !~ v`.
fn mixed_on_edge(g: &Graph, s: usize, k: VertexSet) -> Option<Vec<usize>> {
    (g.neighbors(s) & k).iter().find_map(|u| {
        ((g.neighbors(u) & k) - g.neighbors(s))
            .min()
            .map(|v| vec![s, u, v])
    })
}

/// A nonempty star: connected, with a vertex adjacent to all others.
pub fn is_star(g: &Graph, s: VertexSet) -> bool {
    let n = s.len();
    n >= 1
        && g.components_within(s).len() == 1
        && s.iter().map(|v| (g.neighbors(v) & s).len()).sum::<usize>() == 2 * (n - 1)
        && s.iter().any(|v| (g.neighbors(v) & s).len() == n - 1)
}

fn first(s: VertexSet, k: usize) -> Vec<usize> {
    s.iter().take(k).collect()
}

fn violation(d: &Decomposition, claim: ClaimId) -> Option<Failure> {
    let g = d.host();
    match claim {
        ClaimId::A1 => per_index(|i| (d.s1(i) | d.s21(i) | d.s22(i)).min().map(|v| vec![v])),
        ClaimId::B2 => d.s0().min().map(|v| (None, vec![v])),
        ClaimId::A3 => per_index(|i| non_edges(g, d.s31(i)).next().map(|(u, v)| vec![u, v])),
        ClaimId::A4 => per_index(|i| {
            let comps = g.components_within(d.s32(i));
            (d.s4(i) | d.s5())
                .iter()
                .find_map(|s| comps.iter().find_map(|&k| mixed_on_edge(g, s, k)))
        }),
        ClaimId::A5 => per_index(|i| {
            let s32 = d.s32(i);
            let outside = g.vertices() - (s32 | d.s4(i) | d.s5());
            outside.iter().find_map(|s| mixed_on_set(g, s, s32))
        }),
        ClaimId::A6 => per_index(|i| {
            g.components_within(d.s32(i)).into_iter().find_map(|k| {
                (g.vertices() - k)
                    .iter()
                    .find_map(|w| mixed_on_set(g, w, k))
            })
        }),
        ClaimId::A7 => per_index(|i| {
            let t = d.t_set(i);
            d.s4(i)
                .iter()
                .find_map(|x| (t - g.neighbors(x)).min().map(|y| vec![x, y]))
        }),
        ClaimId::A8 => per_index(|i| {
            let s4 = d.s4(i);
            (d.s31(i) | d.s4_far(i))
                .iter()
                .find_map(|s| non_edges(g, s4).find_map(|(u, v)| mixed_on(g, s, u, v)))
        }),
        ClaimId::A9 => per_index(|i| {
            let s4 = d.s4(i);
            d.r_set(i).iter().find_map(|s| {
                non_edges(g, s4)
                    .find(|&(u, v)| !g.has_edge(s, u) && !g.has_edge(s, v))
                    .map(|(u, v)| vec![s, u, v])
            })
        }),
        ClaimId::A10 => per_index(|i| {
            let s4 = d.s4(i);
            d.s4_far(i).iter().find_map(|w| {
                non_edges(g, s4).find_map(|(x, y)| {
                    if !g.has_edge(w, x) {
                        Some(vec![w, x, y])
                    } else if !g.has_edge(w, y) {
                        Some(vec![w, y, x])
                    } else {
                        None
                    }
                })
            })
        }),
        ClaimId::B11 => per_index(|i| (d.s31(i).len() > 2).then(|| first(d.s31(i), 3))),
        ClaimId::B12 => per_index(|i| {
            let u = d.s32(i) | d.s4(i) | d.s5();
            is_q_colorable(&g.induced_unchecked(u), 2)
                .is_none()
                .then(|| u.to_vec())
        }),
        ClaimId::B13 => {
            let s5 = d.s5();
            s5.iter()
                .find_map(|u| {
                    (g.neighbors(u) & s5)
                        .iter()
                        .find(|&v| v > u)
                        .map(|v| vec![u, v])
                })
                .map(|w| (None, w))
        }
        ClaimId::B14 => per_index(|i| {
            [d.s32(i), d.s4(i)].into_iter().find_map(|s| {
                g.components_within(s).into_iter().find_map(|k| {
                    let homogeneous = (g.vertices() - k)
                        .iter()
                        .all(|w| mixed_on_set(g, w, k).is_none());
                    (homogeneous && k.len() > 2).then(|| k.to_vec())
                })
            })
        }),
        ClaimId::B15 => per_index(|i| (d.s32(i).len() > 3).then(|| first(d.s32(i), 4))),
        ClaimId::B16 => per_index(|i| {
            let s4 = d.s4(i);
            if is_star(g, s4) {
                return None;
            }
            let far = d.s4_far(i);
            s4.iter()
                .find_map(|x| (far - g.neighbors(x)).min().map(|w| vec![x, w]))
        }),
        ClaimId::B17 => per_index(|i| {
            let s4 = d.s4(i);
            (is_star(g, s4) && s4.len() > 2).then(|| s4.to_vec())
        }),
        ClaimId::B18 => per_index(|i| {
            let s4 = d.s4(i);
            let complete = g.is_complete_to(s4, d.s4_far(i));
            (complete && !d.r_set(i).is_empty() && s4.len() > 6).then(|| s4.to_vec())
        }),
        ClaimId::B19 => per_index(|i| {
            let s4 = d.s4(i);
            let complete = g.is_complete_to(s4, d.s4_far(i));
            (complete && d.r_set(i).is_empty() && s4.len() > 2).then(|| s4.to_vec())
        }),
        ClaimId::B20 => per_index(|i| (d.s4(i).len() > 6).then(|| d.s4(i).to_vec())),
        ClaimId::B21 => {
            let scope = (0..5).fold(VertexSet::EMPTY, |acc, i| {
                acc | d.s31(i) | d.s32(i) | d.s4(i)
            });
            let s5 = d.s5();
            s5.iter()
                .find_map(|u| {
                    s5.iter()
                        .filter(|&v| v > u)
                        .find(|&v| g.neighbors(u) & scope == g.neighbors(v) & scope)
                        .map(|v| vec![u, v])
                })
                .map(|w| (None, w))
        }
    }
}

/// All claim reports for one anchor cycle, in [`ClaimId::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorReport {
    pub cycle: C5Cycle,
    pub reports: Vec<ClaimReport>,
}

impl AnchorReport {
    pub fn passes(&self) -> bool {
        self.reports.iter().all(|r| r.verdict != Verdict::Fails)
    }
}

/// Every claim on every induced C5 of `g`; empty if there is none.
pub fn verify_all(g: &Graph, bypass: bool) -> Vec<AnchorReport> {
    let cycles = all_induced_c5(g);
    if cycles.is_empty() {
        return Vec::new();
    }
    let hypotheses = if bypass {
        Hypotheses::evaluate_all(g)
    } else {
        Hypotheses::evaluate(g)
    };
    cycles
        .par_iter()
        .map(|&cycle| {
            let d = Decomposition::build(g, cycle);
            let reports = ClaimId::ALL
                .iter()
                .map(|&c| check_claim_with(&d, c, &hypotheses, bypass))
                .collect();
            AnchorReport { cycle, reports }
        })
        .collect()
}

/// True iff no evaluated claim fails on any anchor.
pub fn all_hold(reports: &[AnchorReport]) -> bool {
    reports.iter().all(AnchorReport::passes)
}

/// Only the listed claims, on every anchor, with hypotheses ignored.
pub fn first_violation(g: &Graph, claims: &[ClaimId]) -> Option<(C5Cycle, ClaimId, Vec<usize>)> {
    all_induced_c5(g).into_iter().find_map(|cycle| {
        let d = Decomposition::build(g, cycle);
        claims
            .iter()
            .find_map(|&c| violation(&d, c).map(|(_, w)| (cycle, c, w)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::family::FamilyMember;

    const C: [usize; 5] = [0, 1, 2, 3, 4];

    fn anchored(m: FamilyMember) -> Decomposition {
        decompose(&m.graph(), C5Cycle::new_unchecked(C)).unwrap()
    }

    #[test]
    fn w_s5_edge_is_gated() {
        let d = anchored(FamilyMember::W);
        let r = check_claim(&d, ClaimId::B13);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.hypotheses.family_free, Some(false));
        let h = Hypotheses::evaluate_all(d.host());
        let r = check_claim_with(&d, ClaimId::B13, &h, true);
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.witness, vec![5, 6]);
    }

    #[test]
    fn q1_s31_claims() {
        // the printed Q1 has an induced P5, so everything is gated off unless bypassed
        let d = anchored(FamilyMember::Q1);
        let r = check_claim(&d, ClaimId::A3);
        assert_eq!(
            (r.verdict, r.hypotheses.p5_free),
            (Verdict::Skipped, Some(false))
        );
        let h = Hypotheses::evaluate_all(d.host());
        assert_eq!(
            check_claim_with(&d, ClaimId::A3, &h, true).verdict,
            Verdict::Holds
        );
        assert_eq!(
            check_claim_with(&d, ClaimId::B11, &h, true).verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn p_s32_size() {
        let d = anchored(FamilyMember::P);
        let h = Hypotheses::evaluate_all(d.host());
        assert_eq!(
            check_claim_with(&d, ClaimId::B15, &h, true).verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn k5_has_no_anchor() {
        assert!(verify_all(&Graph::complete(5).unwrap(), false).is_empty());
    }

    #[test]
    fn family_passes_tier_a() {
        for m in FamilyMember::ALL
            .into_iter()
            .filter(|&m| m != FamilyMember::Q1)
        {
            for anchor in verify_all(&m.graph(), false) {
                for r in &anchor.reports {
                    match r.tier {
                        Tier::A => assert_eq!(
                            r.verdict,
                            Verdict::Holds,
                            "{m} {} {}",
                            anchor.cycle,
                            r.claim
                        ),
                        Tier::B if r.claim == ClaimId::B2 => assert_eq!(r.verdict, Verdict::Holds),
                        Tier::B => assert_eq!(r.verdict, Verdict::Skipped),
                    }
                }
            }
        }
    }

    #[test]
    fn a1_witness() {
        // C5 plus a pendant vertex on v0: S1(0) = {5}
        let g = Graph::cycle(5)
            .unwrap()
            .add_vertex(VertexSet::singleton(0))
            .unwrap();
        let d = decompose(&g, C5Cycle::new_unchecked(C)).unwrap();
        let r = check_claim_with(&d, ClaimId::A1, &Hypotheses::evaluate_all(&g), true);
        assert_eq!(
            (r.verdict, r.index, r.witness),
            (Verdict::Fails, Some(0), vec![5])
        );
        // unbypassed it is skipped because the graph has an induced P5
        assert_eq!(check_claim(&d, ClaimId::A1).verdict, Verdict::Skipped);
    }

    #[test]
    fn stars() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (3, 4)]).unwrap();
        assert!(is_star(&g, [0, 1, 2].iter().collect()));
        assert!(is_star(&g, VertexSet::singleton(3)));
        assert!(is_star(&g, [3, 4].iter().collect()));
        assert!(!is_star(&g, VertexSet::EMPTY));
        assert!(!is_star(&g, [0, 1, 3].iter().collect()));
    }

    #[test]
    fn claim_names_parse() {
        for c in ClaimId::ALL {
            assert_eq!(c.label().parse::<ClaimId>(), Ok(c));
        }
        assert!("B22".parse::<ClaimId>().is_err());
    }
}
