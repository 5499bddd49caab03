//! Exact symbolic kernels for Hodge-type cohomology with a modulus.
//!
//! The crate computes, at desk scale and with exact rational arithmetic,
//! the commutative-algebra objects attached to an affine modulus pair
//! `(A^n, x^r)`: the modulus structure ring, log differential forms and
//! their modulus twists with explicit free bases, divisor-reduction exact
//! sequences, the split sequence behind cube invariance, Cech cohomology
//! of twisted line bundles on projective space, blow-up comparison and
//! pushforward-vanishing certificates, the dvr Cartesian square, and the
//! Kunneth basis bijection. Every statement-level check returns a
//! [`report::VerificationReport`], and [`suites`] batches them over
//! parameter grids (the `mhodge` binary is a thin front-end).
//!
//! Everything is immutable after construction and safe to share across
//! threads; the suites fan parameter points out to a rayon pool.

pub mod blowup;
pub mod cech;
pub mod cube;
pub mod dvr;
pub mod error;
pub mod forms;
pub mod kunneth;
pub mod laurent;
pub mod linalg;
pub mod modulus;
pub mod parse;
pub mod report;
pub mod ses;
pub mod suites;

pub use error::{Error, Result};
pub use laurent::{radical_of_monomial, Exponents, LaurentPoly, MonomialIdeal, Rational};
pub use modulus::{mo_exhaustion_level, mo_member, mo_ring, ModulusPair, ModulusRing};
pub use report::{Status, VerificationReport};

pub use blowup::{comparison_profile, verify_blowup_invariance, BlowupSetup, CokernelTwistProfile};
pub use cech::{blowup_line_pushforward, cohomology_dims, GradedDimTable, PushforwardTable};
pub use cube::{decompose, recompose, verify_cube_sequence, CubeChart, CubeRing};
pub use dvr::{cartesian_check, kummer_form_cartesian, mo_valuation_images, DvrModel};
pub use forms::{
    d_scalar, dlog, exterior_derivative, exterior_power_iso, form_exhaustion_level, FormKind,
    FormModule, LogForm, Wedge,
};
pub use kunneth::{kunneth_check, kunneth_product};
pub use parse::{parse_form, parse_poly};
pub use ses::divisor_reduction;
pub use suites::{run, Grid, Suite, SuiteConfig};
