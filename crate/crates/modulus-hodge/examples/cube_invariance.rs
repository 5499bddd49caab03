//! Appending the cube coordinate: chart decompositions, the split short
//! exact sequence, and the explicit splitting section.
//!
//! Run with `cargo run --example cube_invariance`.

use modulus_hodge::cube::{
    decompose, difference_map, recompose, splitting_section, verify_cube_sequence, CubeChart,
    CubeRing,
};
use modulus_hodge::forms::{dlog, FormKind};
use modulus_hodge::laurent::{rat, Exponents, LaurentPoly};
use modulus_hodge::modulus::ModulusPair;

fn main() {
    let base = ModulusPair::from_slice(&[1]).unwrap();
    // The cube coordinate is appended as the last variable, so with one
    // base variable it prints as x2 (t on the polynomial and overlap
    // charts, u = 1/t at infinity).

    // Every form over a cube chart splits uniquely as alpha + beta ^ tau.
    let overlap = CubeRing::new(&base, CubeChart::Laurent);
    let w = dlog(
        &LaurentPoly::monomial(2, Exponents::from(&[1, 2][..]), rat(1)),
        &overlap.pair(),
    )
    .unwrap();
    let (alpha, beta) = decompose(&overlap, &w, FormKind::POmega).unwrap();
    println!("dlog(x1 t^2) over the overlap:");
    println!("  alpha = {alpha}");
    println!("  beta  = {beta}");
    assert_eq!(recompose(&overlap, &alpha, &beta), w);

    // On the chart at infinity the cube covector is dlog(1/t).
    let infinity = CubeRing::new(&base, CubeChart::InvPoly);
    println!("cube covector at infinity: {}", infinity.cube_covector());

    // t^-1 dt is hit from the chart at infinity alone.
    let poly = CubeRing::new(&base, CubeChart::Poly);
    let target = modulus_hodge::forms::LogForm::term(
        &overlap.pair(),
        modulus_hodge::forms::Wedge(0b10),
        LaurentPoly::monomial(2, Exponents::from(&[0, -1][..]), rat(1)),
    );
    let image = difference_map(
        &base,
        &modulus_hodge::forms::LogForm::zero(&poly.pair(), 1),
        &infinity.cube_covector().neg(),
    );
    assert_eq!(image, target);
    println!("t^-1 dt = image of (0, -dlog(1/t))");

    // The canonical section undoes the comparison map.
    let (w_poly, w_inv) = splitting_section(&base, &target);
    assert_eq!(difference_map(&base, &w_poly, &w_inv), target);
    println!("section of t^-1 dt: poly part {w_poly}, infinity part {w_inv}");

    // The whole split sequence, certified per graded slot.
    for q in 0..=2 {
        for kind in [FormKind::POmega, FormKind::MOmega] {
            let report = verify_cube_sequence(&base, q, 4, kind);
            println!("{report}");
            assert!(report.passed());
        }
    }
}
