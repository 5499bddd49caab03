//! Blow-up invariance: chart bases, the twist profile of the comparison
//! map, and the direct-image certificate over the chart cover.
//!
//! Run with `cargo run --example blowup_invariance`.

use modulus_hodge::blowup::{comparison_profile, verify_blowup_invariance, BlowupSetup};

fn main() {
    // Blow up the origin of A^2 with modulus x1.
    let setup = BlowupSetup::new(2, &[0, 1], &[1, 0]).unwrap();
    println!("chart basis at x1 (ambient coordinates):");
    for g in setup.chart_basis(0).unwrap() {
        println!("  {g}");
    }
    println!(
        "chart modulus at x1: {:?}",
        setup.chart_pair(0).unwrap().modulus().entries()
    );

    // Twist bookkeeping of the comparison in degree one: one plain
    // summand and one twisted by the exceptional divisor.
    let profile = comparison_profile(&setup, 1).unwrap();
    println!(
        "divisorial centre count i = {}, twist multiplicities {:?}",
        profile.i, profile.twists
    );
    for (k, pieces) in &profile.filtration {
        println!("  twist k = {k}: filtration pieces on the exceptional space {pieces:?}");
    }

    // The certificate: profile bounds, per-twist vanishing on the
    // exceptional projective space, and the windowed Cech computation of
    // the direct images.
    let report = verify_blowup_invariance(&setup, 1, 3).unwrap();
    println!("{report}");
    assert!(report.passed());

    // A three-variable case: blow up the x2 = x3 = 0 plane inside the
    // divisor x2.
    let bigger = BlowupSetup::new(3, &[1, 2], &[0, 2, 0]).unwrap();
    for q in 0..=2 {
        let report = verify_blowup_invariance(&bigger, q, 2).unwrap();
        println!("{report}");
        assert!(report.passed());
    }
}
