//! Free bases of the log and twisted form modules, the dlog map, the
//! exterior derivative, and the exterior-power isomorphism.
//!
//! Run with `cargo run --example log_bases`.

use modulus_hodge::forms::{
    dlog, exterior_derivative, exterior_power_iso, FormKind, FormModule,
};
use modulus_hodge::laurent::{rat, Exponents, LaurentPoly};
use modulus_hodge::modulus::ModulusPair;

fn main() {
    // (A^3, x1^2 x2): covectors are dlog(x1), dlog(x2), d(x3).
    let pair = ModulusPair::from_slice(&[2, 1, 0]).unwrap();

    for q in 0..=3 {
        let log_basis = FormModule::new(FormKind::POmega, &pair, q).basis();
        let twisted_basis = FormModule::new(FormKind::MOmega, &pair, q).basis();
        println!("degree {q}:");
        for (p, m) in log_basis.iter().zip(&twisted_basis) {
            println!("  log {p:<28} twisted {m}");
        }
    }

    // dlog is additive on monomials: poles appear only off the support.
    let mono = LaurentPoly::monomial(3, Exponents::from(&[2, -1, 3][..]), rat(5));
    println!("dlog({mono}) = {}", dlog(&mono, &pair).unwrap());

    // The exterior derivative of a scalar in the log basis.
    let scalar = LaurentPoly::monomial(3, Exponents::from(&[1, 1, 1][..]), rat(1));
    let dw = exterior_derivative(&modulus_hodge::forms::LogForm::scalar(&pair, scalar));
    println!("d(x1 x2 x3) = {dw}");

    // Wedges of degree-one generators reproduce the higher bases on the
    // nose.
    for q in 0..=3 {
        let report = exterior_power_iso(&pair, q);
        println!("{report}");
    }

    // Membership distinguishes the two modules.
    let twisted = FormModule::new(FormKind::MOmega, &pair, 1);
    let log = FormModule::new(FormKind::POmega, &pair, 1);
    let w = twisted.basis().remove(0);
    println!(
        "{w}: twisted member {}, log member {}",
        twisted.member(&w).unwrap(),
        log.member(&w).unwrap()
    );
}
