//! The divisor-reduction short exact sequences: dropping one unit of a
//! divisor component either leaves the log module unchanged or produces a
//! residue sequence onto the divisor.
//!
//! Run with `cargo run --example divisor_reduction`.

use modulus_hodge::forms::{FormKind, FormModule, LogForm, Wedge};
use modulus_hodge::laurent::LaurentPoly;
use modulus_hodge::modulus::ModulusPair;
use modulus_hodge::ses::divisor_reduction;

fn main() {
    // Multiplicity two at x1: the log module does not move, the twisted
    // one changes by a divisor-supported piece.
    let stable = ModulusPair::from_slice(&[2, 1]).unwrap();
    println!("{}", divisor_reduction(&stable, 0, 1, 4).unwrap());

    // Multiplicity one at x1: the residue sequence appears.
    let residue_case = ModulusPair::from_slice(&[1, 0]).unwrap();
    println!("{}", divisor_reduction(&residue_case, 0, 1, 4).unwrap());

    // The residue of dlog(x1) generates the cokernel on the divisor.
    let dlog_x1 = LogForm::term(&residue_case, Wedge(1), LaurentPoly::one(2));
    let res = dlog_x1.residue(0).unwrap();
    println!("residue of dlog(x1) along x1 = 0: {res}");

    // Forms coming from the reduced pair have vanishing residue: d(x1) is
    // x1 dlog(x1) in the log basis.
    let included = LogForm::term(&residue_case, Wedge(1), LaurentPoly::var(2, 0));
    println!(
        "residue of x1 dlog(x1): {}",
        included.residue(0).unwrap()
    );

    // In degree zero with multiplicity one nothing is lost at all.
    let tiny = ModulusPair::from_slice(&[1]).unwrap();
    println!("{}", divisor_reduction(&tiny, 0, 0, 4).unwrap());

    // The four sequences across a small grid.
    let mut all_pass = true;
    for r in [vec![2i64, 1], vec![3, 2, 1], vec![1, 1, 0]] {
        let pair = ModulusPair::from_slice(&r).unwrap();
        for (j0, &mult) in r.iter().enumerate() {
            if mult == 0 {
                continue;
            }
            for q in 0..=2 {
                all_pass &= divisor_reduction(&pair, j0, q, 3).unwrap().passed();
            }
        }
    }
    println!("grid of reductions: all pass = {all_pass}");
    assert!(all_pass);

    // The degree-one twisted module of the residue pair is free of rank
    // two; its dlog(x1)-generator maps onto the divisor generator.
    let full = FormModule::new(FormKind::MOmega, &residue_case, 1);
    println!("twisted module rank over the residue pair: {}", full.basis().len());
}
