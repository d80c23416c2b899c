mod sampling;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcrit_core::claims::first_violation;
use vcrit_core::pattern::p5_chair;
use vcrit_core::{is_free, verify_all, ClaimId, Tier, Verdict};

#[test]
fn sampled_class_members_satisfy_tier_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tier_a: Vec<ClaimId> = ClaimId::ALL
        .into_iter()
        .filter(|c| c.tier() == Tier::A)
        .collect();
    for _ in 0..300 {
        let n = rng.gen_range(9..=12);
        let g = sampling::sample_class_member(&mut rng, n);
        assert!(g.is_connected() && is_free(&g, &p5_chair()));
        assert_eq!(
            first_violation(&g, &tier_a),
            None,
            "{}",
            vcrit_core::emit_graph6(&g)
        );
        for anchor in verify_all(&g, false) {
            for r in anchor.reports.iter().filter(|r| r.tier == Tier::A) {
                assert_eq!(r.verdict, Verdict::Holds);
            }
        }
    }
}
