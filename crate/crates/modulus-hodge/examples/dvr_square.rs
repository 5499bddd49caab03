//! The Kummer cover of dvrs: valuation images of the modulus rings, the
//! Cartesian square, and its form-level refinement.
//!
//! Run with `cargo run --example dvr_square`.

use modulus_hodge::dvr::{cartesian_check, kummer_form_cartesian, mo_valuation_images, DvrModel};

fn main() {
    // Ramification e = 2 over a modulus of valuation en = 6 upstairs.
    let model = DvrModel::new(2, 3, 1, 2).unwrap();
    let (base, cover) = mo_valuation_images(&model);
    println!(
        "valuation image downstairs: {{{} + {}k}},  upstairs: {{{} + k}}",
        base.start, base.step, cover.start
    );

    // The square of modulus rings is Cartesian because the images are:
    // multiples of e in the cover image are exactly the base image.
    let report = cartesian_check(&model, 18);
    println!("{report}");
    assert!(report.passed());

    // At the level of forms, pulling back divides the log covector by the
    // ramification index, and the twisted module downstairs is exactly
    // the divisible part of the twisted module upstairs.
    let report = kummer_form_cartesian(&model, 18).unwrap();
    println!("{report}");
    assert!(report.passed());

    // The unramified case collapses to equalities.
    let trivial = DvrModel::new(1, 2, 1, 1).unwrap();
    assert!(kummer_form_cartesian(&trivial, 6).unwrap().passed());
    println!("unramified cover: both squares degenerate to equalities");

    // Sweeping the small grid.
    for e in 1..=4i64 {
        for n in 1..=3i64 {
            let m = DvrModel::new(e, n, 0, 1).unwrap();
            assert!(cartesian_check(&m, 3 * e * n).passed());
        }
    }
    println!("valuation squares Cartesian for e <= 4, n <= 3");
}
