//! Exact Cech cohomology of twisted line bundles on projective space and
//! the pushforward of exceptional twists from the origin blow-up.
//!
//! Run with `cargo run --example projective_cohomology`.

use modulus_hodge::cech::{blowup_line_pushforward, cohomology_dims};

fn main() {
    // Dimension tables for P^2 across twists.
    println!("cohomology of O(d) on P^2:");
    for d in -5..=3i64 {
        let t = cohomology_dims(2, d);
        println!("  d = {d:>2}: {t}   (Euler characteristic {})", t.euler_characteristic());
    }

    // The single class of O(-3) on P^2 is represented by 1/(t0 t1 t2).
    let t = cohomology_dims(2, -3);
    assert_eq!(t.get(2), 1);

    // Top-bottom duality d <-> -d - n - 1 on the nose.
    for d in -6..=6i64 {
        assert_eq!(cohomology_dims(3, d).get(3), cohomology_dims(3, -d - 4).get(0));
    }
    println!("duality h^n(d) = h^0(-d-n-1) verified for n = 3, |d| <= 6");

    // Blowing up the origin of A^2: twists above the bound -n-1 push
    // forward with no higher direct images, the bound itself is sharp.
    println!("pushforward from the blow-up of A^2 at the origin:");
    for i in -3..=1i64 {
        let table = blowup_line_pushforward(1, i, 5);
        println!(
            "  O({i:>2}): higher images {} ideal-power sections: {}",
            table.higher,
            if table.ideal_power_ok { "yes" } else { "NO" }
        );
    }
    assert!(blowup_line_pushforward(1, -1, 5).higher.is_zero());
    assert_eq!(blowup_line_pushforward(1, -2, 5).higher.get(1), 1);
}
