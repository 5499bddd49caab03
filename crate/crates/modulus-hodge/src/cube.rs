//! The split sequence behind cube invariance.
//!
//! Adjoining the cube coordinate `t` to a pair gives three charts: the
//! polynomial chart `A[t]` with the same modulus, the chart at infinity
//! `A[1/t]` whose modulus gains the divisor at infinity, and the overlap
//! `A[t, 1/t]`. The chart at infinity is handled with `u = 1/t` as an
//! honest polynomial variable, so its log structure contains `dlog(u) =
//! dlog(1/t)`; translation to the overlap is the substitution `u = t^{-1}`
//! together with `dlog(u) = -t^{-1} dt`.
//!
//! Every module in sight is spanned by monomial forms and every map
//! preserves the monomial multigrading in `x` and `t`, so the short exact
//! sequence is certified slot by slot over a degree window, together with
//! an explicit splitting whose projector is checked to be idempotent.

use crate::error::{Error, Result};
use crate::forms::{FormKind, FormModule, LogForm, Wedge};
use crate::laurent::{exponent_window, Exponents, LaurentPoly, Rational};
use crate::modulus::{mo_ring, ModulusPair};
use crate::report::VerificationReport;

use num::One;

/// Which of the three rings over the base a form lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeChart {
    /// `A[t]`, modulus unchanged.
    Poly,
    /// `A[1/t]` as the polynomial ring in `u = 1/t`, modulus times `u`.
    InvPoly,
    /// `A[t, 1/t]`, modulus unchanged and `t` invertible.
    Laurent,
}

/// A base pair with the cube coordinate appended as the last variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeRing {
    base: ModulusPair,
    chart: CubeChart,
}

impl CubeRing {
    pub fn new(base: &ModulusPair, chart: CubeChart) -> Self {
        CubeRing {
            base: base.clone(),
            chart,
        }
    }

    pub fn base(&self) -> &ModulusPair {
        &self.base
    }

    pub fn chart(&self) -> CubeChart {
        self.chart
    }

    /// Index of the cube coordinate (`t`, or `u` on the chart at infinity).
    pub fn t_index(&self) -> usize {
        self.base.vars()
    }

    pub fn vars(&self) -> usize {
        self.base.vars() + 1
    }

    /// The modulus pair seen by the chart's log basis.
    pub fn pair(&self) -> ModulusPair {
        let extra = match self.chart {
            CubeChart::Poly | CubeChart::Laurent => 0,
            CubeChart::InvPoly => 1,
        };
        let r = self
            .base
            .modulus()
            .concat(&Exponents::new(vec![extra]));
        ModulusPair::new(self.vars(), r).expect("modulus stays nonnegative")
    }

    /// Membership in the log or twisted module over this chart. On the
    /// overlap the cube coordinate is invertible, so poles in `t` are part
    /// of the coefficient ring rather than the log structure.
    pub fn member(&self, w: &LogForm, kind: FormKind) -> Result<bool> {
        let pair = self.pair();
        if w.pair() != &pair {
            return Err(Error::Incompatible(
                "form does not live over this cube chart".into(),
            ));
        }
        match self.chart {
            CubeChart::Poly | CubeChart::InvPoly => {
                FormModule::new(kind, &pair, w.degree()).member(w)
            }
            CubeChart::Laurent => {
                let t = self.t_index();
                for (tw, c) in w.terms() {
                    for j in 0..self.vars() {
                        if j != t && !pair.in_support(j) && c.min_exponent(j).unwrap_or(0) < 0 {
                            return Err(Error::PoleOffSupport {
                                var: j + 1,
                                wedge: format!("{:?}", tw.indices()),
                            });
                        }
                    }
                }
                let gen = match kind {
                    FormKind::POmega | FormKind::Ambient => Exponents::zero(self.vars()),
                    FormKind::MOmega => mo_ring(&pair).generator_exponent().clone(),
                };
                if kind == FormKind::Ambient {
                    return Ok(true);
                }
                Ok(w.terms().all(|(_, c)| {
                    c.terms()
                        .all(|(e, _)| (0..self.vars()).all(|j| j == t || e.get(j) >= gen.get(j)))
                }))
            }
        }
    }

    /// The covector dual to the cube direction: `dt` on the polynomial and
    /// overlap charts, `dlog(1/t)` on the chart at infinity.
    pub fn cube_covector(&self) -> LogForm {
        LogForm::term(
            &self.pair(),
            Wedge::from_indices(&[self.t_index()]),
            LaurentPoly::one(self.vars()),
        )
    }
}

/// Split a form over a cube chart as `alpha + beta ^ tau`, where `tau` is
/// the chart's cube covector, `alpha` has no cube factor and `beta` has
/// degree one less. Errors if the form is not a member of the claimed
/// module.
pub fn decompose(ring: &CubeRing, w: &LogForm, kind: FormKind) -> Result<(LogForm, LogForm)> {
    if !ring.member(w, kind)? {
        return Err(Error::NotAMember {
            module: format!("{kind:?} over {:?} chart", ring.chart()),
            witness: w.to_string(),
        });
    }
    let pair = ring.pair();
    let t = ring.t_index();
    let q = w.degree();
    let mut alpha = LogForm::zero(&pair, q);
    let mut beta = LogForm::zero(&pair, q.saturating_sub(1));
    for (tw, c) in w.terms() {
        match tw.extract(t) {
            // The cube index is the last one, so the extraction sign is
            // determined by the remaining covectors; `w = alpha + beta^tau`
            // needs the coefficient of `e_T ^ tau` which carries sign +1.
            None => alpha.add_term(*tw, c.clone()),
            Some((rest, _)) => beta.add_term(rest, c.clone()),
        }
    }
    Ok((alpha, beta))
}

/// Reassemble `alpha + beta ^ tau`.
pub fn recompose(ring: &CubeRing, alpha: &LogForm, beta: &LogForm) -> LogForm {
    let tau = ring.cube_covector();
    let beta_tau = beta.wedge(&tau).expect("same pair");
    alpha.add(&beta_tau).expect("same degree")
}

/// Inclusion of the polynomial chart into the overlap: the identity on
/// symbols.
pub fn include_poly(base: &ModulusPair, w: &LogForm) -> LogForm {
    let laurent = CubeRing::new(base, CubeChart::Laurent);
    let mut out = LogForm::zero(&laurent.pair(), w.degree());
    for (tw, c) in w.terms() {
        out.add_term(*tw, c.clone());
    }
    out
}

/// Inclusion of the chart at infinity into the overlap: substitute
/// `u = t^{-1}` in coefficients and `dlog(u) = -t^{-1} dt` on covectors.
pub fn include_inv(base: &ModulusPair, w: &LogForm) -> LogForm {
    let n = base.vars();
    let t = n;
    let laurent = CubeRing::new(base, CubeChart::Laurent);
    let vars = n + 1;
    // x_j -> x_j, u -> t^{-1}.
    let mut images: Vec<Exponents> = (0..n).map(|j| Exponents::delta(vars, j)).collect();
    images.push(Exponents::delta(vars, t).neg());
    let mut out = LogForm::zero(&laurent.pair(), w.degree());
    for (tw, c) in w.terms() {
        let mut coeff = c.subst_monomials(vars, &images);
        if tw.contains(t) {
            coeff = coeff
                .mul_monomial(&Exponents::delta(vars, t).neg())
                .scale(&-Rational::one());
        }
        out.add_term(*tw, coeff);
    }
    out
}

/// The comparison map out of the middle of the sequence: second chart
/// minus first on the overlap, oriented so that `t^{-1} dt` is the image
/// of `(0, -dlog(1/t))`.
pub fn difference_map(base: &ModulusPair, w_poly: &LogForm, w_inv: &LogForm) -> LogForm {
    include_inv(base, w_inv)
        .sub(&include_poly(base, w_poly))
        .expect("same chart")
}

/// The canonical section of the comparison map: nonnegative `t`-powers are
/// sent back to the polynomial chart and negative ones to the chart at
/// infinity.
pub fn splitting_section(base: &ModulusPair, v: &LogForm) -> (LogForm, LogForm) {
    let n = base.vars();
    let t = n;
    let vars = n + 1;
    let poly = CubeRing::new(base, CubeChart::Poly);
    let inv = CubeRing::new(base, CubeChart::InvPoly);
    let mut w_poly = LogForm::zero(&poly.pair(), v.degree());
    let mut w_inv = LogForm::zero(&inv.pair(), v.degree());
    for (tw, c) in v.terms() {
        for (e, a) in c.terms() {
            let m = e.get(t);
            if m >= 0 {
                w_poly.add_term(*tw, LaurentPoly::monomial(vars, e.clone(), -a.clone()));
            } else {
                // Send t^m to u^{-m}, undoing the covector sign if the
                // term carries the cube direction.
                let p = if tw.contains(t) { -m - 1 } else { -m };
                let mut img = e.entries().to_vec();
                img[t] = p;
                let coeff = if tw.contains(t) { -a.clone() } else { a.clone() };
                w_inv.add_term(*tw, LaurentPoly::monomial(vars, Exponents::new(img), coeff));
            }
        }
    }
    (w_poly, w_inv)
}

fn monomial_form(pair: &ModulusPair, t: Wedge, e: Exponents) -> LogForm {
    LogForm::term(
        pair,
        t,
        LaurentPoly::monomial(pair.vars(), e, Rational::one()),
    )
}

/// Certify exactness and splitting of the chart sequence for the given
/// module kind and degree over the window `[-window, window]` in every
/// exponent (cube exponent included).
pub fn verify_cube_sequence(
    base: &ModulusPair,
    q: usize,
    window: i64,
    kind: FormKind,
) -> VerificationReport {
    let n = base.vars();
    let t = n;
    let mut report = VerificationReport::new("cube-split-exact")
        .param("n", n)
        .param("r", base.modulus().entries())
        .param("q", q)
        .param(
            "kind",
            match kind {
                FormKind::POmega => "p-omega",
                FormKind::MOmega => "m-omega",
                FormKind::Ambient => "ambient",
            },
        )
        .window(window);

    let poly = CubeRing::new(base, CubeChart::Poly);
    let inv = CubeRing::new(base, CubeChart::InvPoly);
    let laurent = CubeRing::new(base, CubeChart::Laurent);
    let base_module = FormModule::new(kind, base, q);

    let ambient_ok =
        |a: &Exponents| (0..n).all(|j| base.in_support(j) || a.get(j) >= 0);

    // (i) The base injects diagonally: both chart images of a base member
    // are members, and they agree on the overlap.
    for tw in Wedge::all(n, q) {
        for a in exponent_window(n, -window, window) {
            if !ambient_ok(&a) {
                continue;
            }
            let w = monomial_form(base, tw, a.clone());
            if !base_module.member(&w).unwrap_or(false) {
                continue;
            }
            let mut ext = a.entries().to_vec();
            ext.push(0);
            let wt = monomial_form(&poly.pair(), tw, Exponents::new(ext.clone()));
            let wu = monomial_form(&inv.pair(), tw, Exponents::new(ext));
            report.check(poly.member(&wt, kind).unwrap_or(false), || {
                format!("base member {w} fails membership on the polynomial chart")
            });
            report.check(inv.member(&wu, kind).unwrap_or(false), || {
                format!("base member {w} fails membership on the chart at infinity")
            });
            report.check(difference_map(base, &wt, &wu).is_zero(), || {
                format!("base member {w} does not map diagonally")
            });
        }
    }

    // Slotwise exactness in the middle plus surjectivity onto the overlap,
    // and the chart decompositions that drive them.
    for tw in Wedge::all(n + 1, q) {
        let has_t = tw.contains(t);
        let x_part = Wedge(tw.0 & !(1 << t));
        for a in exponent_window(n, -window, window) {
            if !ambient_ok(&a) {
                continue;
            }
            // Base membership of the x-part of the slot, in the degree
            // matching the chart decompositions.
            let base_part = if has_t {
                FormModule::new(kind, base, q - 1)
                    .member(&monomial_form(base, x_part, a.clone()))
                    .unwrap_or(false)
            } else {
                base_module
                    .member(&monomial_form(base, x_part, a.clone()))
                    .unwrap_or(false)
            };
            for m in -window..=window {
                let mut ext = a.entries().to_vec();
                ext.push(m);
                let e = Exponents::new(ext);

                let in_poly = poly
                    .member(&monomial_form(&poly.pair(), tw, e.clone()), kind)
                    .unwrap_or(false);
                let in_inv = inv
                    .member(&monomial_form(&inv.pair(), tw, e.clone()), kind)
                    .unwrap_or(false);
                let in_laurent = laurent
                    .member(&monomial_form(&laurent.pair(), tw, e.clone()), kind)
                    .unwrap_or(false);

                // Chart decompositions: membership is the base condition
                // on the x-part and the chart condition on the cube power.
                report.check(in_poly == (base_part && m >= 0), || {
                    format!("polynomial chart decomposition fails at {e:?}, wedge {:?}", tw.indices())
                });
                report.check(in_inv == (base_part && m >= 0), || {
                    format!("infinity chart decomposition fails at {e:?}, wedge {:?}", tw.indices())
                });
                report.check(in_laurent == base_part, || {
                    format!("overlap decomposition fails at {e:?}, wedge {:?}", tw.indices())
                });

                // The chart inclusions are well-defined module maps.
                if in_poly {
                    let img = include_poly(base, &monomial_form(&poly.pair(), tw, e.clone()));
                    report.check(laurent.member(&img, kind).unwrap_or(false), || {
                        format!("polynomial chart member escapes the overlap at {e:?}")
                    });
                }
                if in_inv {
                    let img = include_inv(base, &monomial_form(&inv.pair(), tw, e.clone()));
                    report.check(laurent.member(&img, kind).unwrap_or(false), || {
                        format!("infinity chart member escapes the overlap at {e:?}")
                    });
                }

                if !in_laurent {
                    continue;
                }
                let v = monomial_form(&laurent.pair(), tw, e.clone());

                // (ii) Exactness in the middle: the kernel slots of the
                // comparison map are exactly the diagonal ones.
                let poly_pres = m >= 0 && in_poly;
                let p_inv = if has_t { -m - 1 } else { -m };
                let inv_pres = p_inv >= 0 && {
                    let mut iu = e.entries().to_vec();
                    iu[t] = p_inv;
                    inv.member(&monomial_form(&inv.pair(), tw, Exponents::new(iu)), kind)
                        .unwrap_or(false)
                };
                let kernel_slot = poly_pres && inv_pres;
                let diagonal_slot = !has_t && m == 0;
                report.check(kernel_slot == diagonal_slot, || {
                    format!(
                        "middle exactness fails at {e:?}, wedge {:?}: kernel {kernel_slot}, diagonal {diagonal_slot}",
                        tw.indices()
                    )
                });

                // (iii) Surjectivity, constructively via the section.
                let (w_poly, w_inv) = splitting_section(base, &v);
                report.check(
                    poly.member(&w_poly, kind).unwrap_or(false)
                        && inv.member(&w_inv, kind).unwrap_or(false),
                    || format!("section of {v} leaves the middle modules"),
                );
                let back = difference_map(base, &w_poly, &w_inv);
                report.check(back == v, || {
                    format!("section does not split at {v}: got {back}")
                });

                // (v) The induced projector is idempotent on this slot.
                let image = difference_map(base, &w_poly, &w_inv);
                let (p2, u2) = splitting_section(base, &image);
                report.check(p2 == w_poly && u2 == w_inv, || {
                    format!("splitting projector is not idempotent at {v}")
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::dlog;
    use crate::laurent::rat;
    use crate::modulus::mo_member;

    fn pair(r: &[i64]) -> ModulusPair {
        ModulusPair::from_slice(r).unwrap()
    }

    #[test]
    fn dlog_decomposition_over_the_overlap() {
        // dlog(x t^2) over the overlap of base (n=1, r=(1)):
        // alpha = dlog x, beta ^ dt = 2 t^-1 dt.
        let base = pair(&[1]);
        let ring = CubeRing::new(&base, CubeChart::Laurent);
        let w = dlog(
            &LaurentPoly::monomial(2, Exponents::from(&[1, 2][..]), rat(1)),
            &ring.pair(),
        )
        .unwrap();
        let (alpha, beta) = decompose(&ring, &w, FormKind::POmega).unwrap();
        assert_eq!(alpha.coeff(Wedge(1)), LaurentPoly::constant(2, rat(1)));
        assert_eq!(
            beta.coeff(Wedge::EMPTY),
            LaurentPoly::monomial(2, Exponents::from(&[0, -1][..]), rat(2))
        );
        assert_eq!(recompose(&ring, &alpha, &beta), w);
        // Both components are themselves members of the chart module.
        assert!(ring.member(&alpha, FormKind::POmega).unwrap());
        assert!(ring.member(&beta, FormKind::POmega).unwrap());
    }

    #[test]
    fn dt_is_purely_a_cube_factor() {
        let base = pair(&[1]);
        let ring = CubeRing::new(&base, CubeChart::Poly);
        let dt = ring.cube_covector();
        let (alpha, beta) = decompose(&ring, &dt, FormKind::POmega).unwrap();
        assert!(alpha.is_zero());
        assert_eq!(beta.coeff(Wedge::EMPTY), LaurentPoly::one(2));
    }

    #[test]
    fn dlog_inverse_t_on_the_chart_at_infinity() {
        let base = pair(&[1]);
        let ring = CubeRing::new(&base, CubeChart::InvPoly);
        // dlog(u) with u = 1/t is the chart's own cube covector.
        let w = ring.cube_covector();
        let (alpha, beta) = decompose(&ring, &w, FormKind::POmega).unwrap();
        assert!(alpha.is_zero());
        assert_eq!(beta.coeff(Wedge::EMPTY), LaurentPoly::one(2));
    }

    #[test]
    fn non_members_are_rejected_by_decompose() {
        let base = pair(&[2]);
        let ring = CubeRing::new(&base, CubeChart::Poly);
        // x^-1 dt is a twisted section but not a log one.
        let w = LogForm::term(
            &ring.pair(),
            Wedge(0b10),
            LaurentPoly::monomial(2, Exponents::from(&[-1, 0][..]), rat(1)),
        );
        assert!(matches!(
            decompose(&ring, &w, FormKind::POmega),
            Err(Error::NotAMember { .. })
        ));
        assert!(decompose(&ring, &w, FormKind::MOmega).is_ok());
        // t^-1 dt does not even live on the polynomial chart.
        let v = LogForm::term(
            &ring.pair(),
            Wedge(0b10),
            LaurentPoly::monomial(2, Exponents::from(&[0, -1][..]), rat(1)),
        );
        assert!(matches!(
            decompose(&ring, &v, FormKind::POmega),
            Err(Error::PoleOffSupport { .. })
        ));
    }

    #[test]
    fn surjectivity_witness_has_the_documented_sign() {
        // t^-1 dt over the overlap is hit by (0, -dlog(1/t)).
        let base = pair(&[1]);
        let inv = CubeRing::new(&base, CubeChart::InvPoly);
        let v = LogForm::term(
            &CubeRing::new(&base, CubeChart::Laurent).pair(),
            Wedge(0b10),
            LaurentPoly::monomial(2, Exponents::from(&[0, -1][..]), rat(1)),
        );
        let w_inv = inv.cube_covector().neg();
        let image = difference_map(&base, &LogForm::zero(&CubeRing::new(&base, CubeChart::Poly).pair(), 1), &w_inv);
        assert_eq!(image, v);
    }

    #[test]
    fn degree_zero_sequence_passes() {
        for r in [vec![0], vec![1], vec![2, 3]] {
            let rep = verify_cube_sequence(&pair(&r), 0, 3, FormKind::POmega);
            assert!(rep.passed(), "{rep}");
            let rep = verify_cube_sequence(&pair(&r), 0, 3, FormKind::MOmega);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn degree_one_sequence_passes_on_the_window() {
        let rep = verify_cube_sequence(&pair(&[1]), 1, 4, FormKind::POmega);
        assert!(rep.passed(), "{rep}");
        let rep = verify_cube_sequence(&pair(&[1]), 1, 4, FormKind::MOmega);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn modulus_ring_ignores_a_cube_factor_in_the_divisor() {
        // Over A[t], the modulus rings for f and f*t agree: adjoining the
        // reduced factor t shifts neither the radical nor the twist.
        let with_t = pair(&[2, 1]);
        let without = pair(&[2, 0]);
        for a in exponent_window(2, -4, 4) {
            let p = LaurentPoly::monomial(2, a.clone(), rat(1));
            let lhs = mo_member(&p, &without) && a.get(1) >= 0;
            let rhs = mo_member(&p, &with_t) && a.get(1) >= 0;
            assert_eq!(lhs, rhs, "at {a:?}");
        }
    }
}
