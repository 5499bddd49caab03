//! The Kunneth bijection: twisted generators of a tensor product of pairs
//! are exactly the products of the factors' generators.
//!
//! Run with `cargo run --example kunneth`.

use modulus_hodge::forms::{FormKind, FormModule};
use modulus_hodge::kunneth::{kunneth_check, kunneth_product};
use modulus_hodge::modulus::ModulusPair;

fn main() {
    let a = ModulusPair::from_slice(&[2]).unwrap();
    let b = ModulusPair::from_slice(&[3]).unwrap();

    // Degree-one generators multiply into the tensor pair with the twists
    // multiplying.
    let basis_a0 = FormModule::new(FormKind::MOmega, &a, 0).basis();
    let basis_a1 = FormModule::new(FormKind::MOmega, &a, 1).basis();
    let basis_b0 = FormModule::new(FormKind::MOmega, &b, 0).basis();
    let basis_b1 = FormModule::new(FormKind::MOmega, &b, 1).basis();
    println!("products landing in degree one of the tensor pair:");
    println!(
        "  {}",
        kunneth_product(&a, &b, &basis_a1[0], &basis_b0[0]).unwrap()
    );
    println!(
        "  {}",
        kunneth_product(&a, &b, &basis_a0[0], &basis_b1[0]).unwrap()
    );

    // They are exactly the target basis.
    let ab = a.tensor(&b);
    for g in FormModule::new(FormKind::MOmega, &ab, 1).basis() {
        println!("  target generator {g}");
    }

    // The full certificate including the Vandermonde rank identity.
    let report = kunneth_check(&a, &b, 2);
    println!("{report}");
    assert!(report.passed());

    // Bigger factors.
    let big_a = ModulusPair::from_slice(&[1, 0]).unwrap();
    let big_b = ModulusPair::from_slice(&[4]).unwrap();
    let report = kunneth_check(&big_a, &big_b, 3);
    println!("{report}");
    assert!(report.passed());
}
