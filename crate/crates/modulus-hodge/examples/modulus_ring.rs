//! The modulus structure ring of an affine pair: generator, membership,
//! and the exhaustive filtration in the modulus multiple.
//!
//! Run with `cargo run --example modulus_ring`.

use modulus_hodge::laurent::{rat, Exponents, LaurentPoly};
use modulus_hodge::modulus::{mo_exhaustion_level, mo_member, mo_ring, ModulusPair};

fn main() {
    // The pair (A^2, x1^2 x2^3): sections are fractions a / x1^2 x2^3
    // with a in the radical of the divisor ideal.
    let pair = ModulusPair::from_slice(&[2, 3]).unwrap();
    let ring = mo_ring(&pair);
    println!(
        "modulus ring of (A^2, x1^2 x2^3) is generated by x^{:?}",
        ring.generator_exponent().entries()
    );

    for exps in [[-1, -2], [-2, -2], [0, 0], [-1, 0]] {
        let p = LaurentPoly::monomial(2, Exponents::from(&exps[..]), rat(1));
        println!("  {p:<12} member: {}", mo_member(&p, &pair));
    }

    // Polynomials with arbitrary poles along the divisor eventually enter
    // the filtration: find the smallest multiple of the modulus that
    // absorbs x1^-7 * x2^-1.
    let deep = LaurentPoly::monomial(2, Exponents::from(&[-7, -1][..]), rat(1));
    let m = mo_exhaustion_level(&deep, &pair).unwrap();
    println!("{deep} first appears at modulus multiple m = {m}");
    assert!(mo_member(&deep, &pair.scaled(m)));
    assert!(!mo_member(&deep, &pair.scaled(m - 1)));

    // Tensoring pairs concatenates variable blocks and multiplies the
    // divisors.
    let other = ModulusPair::from_slice(&[4]).unwrap();
    let product = pair.tensor(&other);
    println!(
        "tensor with (A^1, y^4): modulus exponents {:?}, generator x^{:?}",
        product.modulus().entries(),
        mo_ring(&product).generator_exponent().entries()
    );
}
