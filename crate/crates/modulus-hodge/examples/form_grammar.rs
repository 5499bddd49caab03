//! The text grammar for polynomials and forms: parsing, canonical log
//! bases, and printing.
//!
//! Run with `cargo run --example form_grammar`.

use modulus_hodge::forms::{FormKind, FormModule};
use modulus_hodge::modulus::ModulusPair;
use modulus_hodge::parse::{parse_form, parse_poly};

fn main() {
    // Polynomials: exact rationals, negative exponents, sums.
    let p = parse_poly("3/2 * x1^2 * x2^-1 + x3 - 1/6", 3).unwrap();
    println!("parsed polynomial: {p}");

    // Forms over (A^3, x1^2 x3): the input may use either d or dlog on
    // any variable; storage is canonical in the support's log basis.
    let pair = ModulusPair::from_slice(&[2, 0, 1]).unwrap();
    for src in [
        "d(x1)",
        "dlog(x2)",
        "(x1 + x2) * dlog(x1) ^ d(x2)",
        "dlog(x3) ^ dlog(x1)",
    ] {
        let w = parse_form(src, &pair).unwrap();
        println!("{src:<32} -> {w}");
    }

    // Round trip: printing a member of the twisted module and reading it
    // back is the identity.
    let m = FormModule::new(FormKind::MOmega, &pair, 2);
    for g in m.basis() {
        let text = g.to_string();
        let back = parse_form(&text, &pair).unwrap();
        assert_eq!(back, g);
        println!("round trip ok: {text}");
    }

    // Errors carry byte offsets.
    let err = parse_poly("x1 + $", 3).unwrap_err();
    println!("error example: {err}");
}
