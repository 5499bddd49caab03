//! The dvr-local model of a Kummer cover and its Cartesian squares.
//!
//! Downstairs lives the field of one variable `x` with modulus `x^n`;
//! upstairs a uniformiser `pi` with `pi^e = x`, so the modulus pulls back
//! to `pi^{en}`. Unramified spectator directions can be appended to model
//! a surrounding chart; they only multiply ranks. Everything is graded by
//! the `pi`-valuation, and the two squares checked here (the valuation
//! image of the modulus rings, and the modulus form modules inside the
//! forms of the cover) are certified slice by slice on a window. The form
//! translation divides by the ramification index (`dlog x = e dlog pi`),
//! which is where characteristic zero enters.

use num::One;

use crate::error::{Error, Result};
use crate::forms::{FormKind, FormModule, LogForm, Wedge};
use crate::laurent::{ratio, Exponents, LaurentPoly, Rational};
use crate::modulus::ModulusPair;
use crate::report::VerificationReport;

/// A Kummer cover of dvrs: ramification index `e`, modulus valuation
/// `e * n` upstairs, form degree `q`, and the variable count of the
/// surrounding chart (the dvr direction plus unramified spectators).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DvrModel {
    pub e: i64,
    pub n: i64,
    pub q: usize,
    pub ambient_rank: usize,
}

impl DvrModel {
    pub fn new(e: i64, n: i64, q: usize, ambient_rank: usize) -> Result<Self> {
        if e < 1 {
            return Err(Error::Domain(format!("ramification index {e} must be >= 1")));
        }
        if n < 1 {
            return Err(Error::Domain(format!("modulus multiplicity {n} must be >= 1")));
        }
        if ambient_rank < 1 {
            return Err(Error::Domain("ambient rank must be >= 1".into()));
        }
        Ok(DvrModel {
            e,
            n,
            q,
            ambient_rank,
        })
    }

    /// The pair downstairs: `x` with modulus `x^n`, plus spectators.
    pub fn base_pair(&self) -> ModulusPair {
        let mut r = vec![0i64; self.ambient_rank];
        r[0] = self.n;
        ModulusPair::from_slice(&r).expect("nonnegative")
    }

    /// The pair upstairs: `pi` with modulus `pi^{en}`, plus spectators.
    pub fn cover_pair(&self) -> ModulusPair {
        let mut r = vec![0i64; self.ambient_rank];
        r[0] = self.e * self.n;
        ModulusPair::from_slice(&r).expect("nonnegative")
    }

    /// Pull a form downstairs back along `x = pi^e`: exponents in the dvr
    /// direction multiply by `e` and `dlog x` becomes `e dlog pi`.
    pub fn pullback(&self, w: &LogForm) -> LogForm {
        let vars = self.ambient_rank;
        let mut images: Vec<Exponents> = (0..vars).map(|j| Exponents::delta(vars, j)).collect();
        images[0] = images[0].scaled(self.e);
        let cover = self.cover_pair();
        let mut out = LogForm::zero(&cover, w.degree());
        for (t, c) in w.terms() {
            let mut coeff = c.subst_monomials(vars, &images);
            if t.contains(0) {
                coeff = coeff.scale(&Rational::from_integer(self.e.into()));
            }
            out.add_term(*t, coeff);
        }
        out
    }

    /// Rewrite a cover form on the covectors pulled back from downstairs:
    /// `dlog pi = (1/e) dlog x`, so coefficients on wedges through the dvr
    /// direction divide by `e`. The exponents stay in `pi`.
    pub fn to_base_covectors(&self, w: &LogForm) -> LogForm {
        let mut out = LogForm::zero(w.pair(), w.degree());
        for (t, c) in w.terms() {
            let coeff = if t.contains(0) {
                c.scale(&ratio(1, self.e))
            } else {
                c.clone()
            };
            out.add_term(*t, coeff);
        }
        out
    }
}

/// An arithmetic progression `{start + k * step : k >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArithProgression {
    pub start: i64,
    pub step: i64,
}

impl ArithProgression {
    pub fn contains(&self, v: i64) -> bool {
        v >= self.start && (v - self.start) % self.step == 0
    }
}

/// Valuation images of the modulus rings: the cover ring hits every
/// valuation from `1 - en` on, the base ring every multiple of `e` from
/// `e - en` on.
pub fn mo_valuation_images(m: &DvrModel) -> (ArithProgression, ArithProgression) {
    let en = m.e * m.n;
    let base = ArithProgression {
        start: m.e - en,
        step: m.e,
    };
    let cover = ArithProgression {
        start: 1 - en,
        step: 1,
    };
    (base, cover)
}

/// Certify that the valuation square is Cartesian: on a window containing
/// `[-en, en]`, the cover image meets the multiples of `e` exactly in the
/// base image.
pub fn cartesian_check(m: &DvrModel, window: i64) -> VerificationReport {
    let en = m.e * m.n;
    let w = window.max(en);
    let mut report = VerificationReport::new("dvr-cartesian-square")
        .param("e", m.e)
        .param("n", m.n)
        .window(w);
    let (base, cover) = mo_valuation_images(m);
    for v in -w..=w {
        let lhs = cover.contains(v) && v % m.e == 0;
        let rhs = base.contains(v);
        report.check(lhs == rhs, || {
            format!("valuation {v}: cover-and-divisible {lhs}, base {rhs}")
        });
    }
    report
}

/// Certify the form-level statements of the cover on a degree window:
/// the twisted forms upstairs embed into `pi^{1-e}` times the span of the
/// downstairs log covectors with cover-ring coefficients, and the twisted
/// module downstairs is exactly the part of the twisted module upstairs
/// with coefficients from downstairs.
pub fn kummer_form_cartesian(m: &DvrModel, degree_window: i64) -> Result<VerificationReport> {
    if m.e < 1 {
        return Err(Error::Domain("ramification index must be positive".into()));
    }
    let en = m.e * m.n;
    let w = degree_window.max(3 * en);
    let mut report = VerificationReport::new("dvr-kummer-forms")
        .param("e", m.e)
        .param("n", m.n)
        .param("q", m.q)
        .param("ambient_rank", m.ambient_rank)
        .window(w);

    let vars = m.ambient_rank;
    let base = m.base_pair();
    let cover = m.cover_pair();
    let base_module = FormModule::new(FormKind::MOmega, &base, m.q);
    let cover_module = FormModule::new(FormKind::MOmega, &cover, m.q);

    // Inclusion bound: coefficients of cover members, written on the
    // downstairs covectors, live in pi^{(1-e) + (1-en)} O_L.
    let inclusion_bound = 2 - m.e - en;

    for t in Wedge::all(vars, m.q) {
        for a in -w..=w {
            let mut exp = vec![0i64; vars];
            exp[0] = a;
            let cover_form = LogForm::term(
                &cover,
                t,
                LaurentPoly::monomial(vars, Exponents::new(exp.clone()), Rational::one()),
            );
            let in_cover = cover_module.member(&cover_form)?;

            // (i) The Claim's inclusion, on every cover member.
            if in_cover {
                let rewritten = m.to_base_covectors(&cover_form);
                for (_, c) in rewritten.terms() {
                    report.check(c.min_exponent(0).unwrap_or(0) >= inclusion_bound, || {
                        format!(
                            "cover member {cover_form} escapes pi^{inclusion_bound} times the base covector span"
                        )
                    });
                }
            }

            // (ii) The Cartesian square: downstairs membership is cover
            // membership plus divisibility of the pi-valuation.
            let divisible = a % m.e == 0;
            let in_base = if divisible {
                let mut b = exp.clone();
                b[0] = a / m.e;
                let base_form = LogForm::term(
                    &base,
                    t,
                    LaurentPoly::monomial(vars, Exponents::new(b), Rational::one()),
                );
                let member = base_module.member(&base_form)?;
                if member {
                    // The pullback really is the cover slice, up to the
                    // unit e on wedges through the dvr direction.
                    let pulled = m.pullback(&base_form);
                    let expected = if t.contains(0) {
                        cover_form.scale(&Rational::from_integer(m.e.into()))
                    } else {
                        cover_form.clone()
                    };
                    report.check(pulled == expected, || {
                        format!("pullback of {base_form} is {pulled}, expected {expected}")
                    });
                }
                member
            } else {
                false
            };
            report.check(in_base == (in_cover && divisible), || {
                format!(
                    "pi-degree {a}, wedge {:?}: base {in_base}, cover {in_cover}, divisible {divisible}",
                    t.indices()
                )
            });
        }
    }
    Ok(report)
}
