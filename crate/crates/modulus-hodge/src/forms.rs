//! Differential forms in the log basis of a modulus pair.
//!
//! Over the pair `(A^n, x^r)` with support `S`, a degree-`q` form is stored
//! on the basis `e_T = e_{t_1} ^ ... ^ e_{t_q}` (indices ascending) where
//! `e_j = dlog(xj)` for `j` in `S` and `e_j = d(xj)` otherwise. In this
//! basis both the log-differential module and its modulus twist are free,
//! and membership reduces to a coefficient-ideal test per basis wedge:
//! polynomial coefficients for the log module, coefficients in the modulus
//! fractional ideal `x^{1_S - r} A` for the twisted module.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat, Exponents, LaurentPoly, MonomialIdeal, Rational};
use crate::modulus::{mo_ring, ModulusPair};
use crate::report::VerificationReport;

/// An ascending set of covector indices, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wedge(pub u64);

impl Wedge {
    pub const EMPTY: Wedge = Wedge(0);

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut m = 0u64;
        for &i in indices {
            assert!(i < 64);
            assert!(m & (1 << i) == 0, "repeated covector index");
            m |= 1 << i;
        }
        Wedge(m)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 & (1 << j) != 0
    }

    /// Indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&j| self.contains(j)).collect()
    }

    /// Sign of `e_self ^ e_other` relative to the ascending basis element
    /// on the union; `None` when an index repeats.
    pub fn merge(self, other: Wedge) -> Option<(Wedge, i64)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for j in other.indices() {
            inversions += (self.0 >> (j + 1)).count_ones();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((Wedge(self.0 | other.0), sign))
    }

    /// Position-based sign for extracting index `j`: moving `e_j` to the
    /// front of `e_self` passes the indices below `j`.
    pub fn extract(self, j: usize) -> Option<(Wedge, i64)> {
        if !self.contains(j) {
            return None;
        }
        let below = (self.0 & ((1u64 << j) - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
        Some((Wedge(self.0 & !(1 << j)), sign))
    }

    /// All `q`-element subsets of `{0, .., n-1}` in ascending mask order.
    pub fn all(n: usize, q: usize) -> Vec<Wedge> {
        assert!(n < 22, "wedge enumeration is for small variable counts");
        (0u64..(1 << n))
            .filter(|m| m.count_ones() as usize == q)
            .map(Wedge)
            .collect()
    }
}

/// A differential form of fixed degree in the log basis of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogForm {
    pair: ModulusPair,
    degree: usize,
    coeffs: BTreeMap<Wedge, LaurentPoly>,
}

impl LogForm {
    pub fn zero(pair: &ModulusPair, degree: usize) -> Self {
        LogForm {
            pair: pair.clone(),
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single term `c * e_T`.
    pub fn term(pair: &ModulusPair, wedge: Wedge, coeff: LaurentPoly) -> Self {
        let mut w = Self::zero(pair, wedge.len());
        w.add_term(wedge, coeff);
        w
    }

    /// A degree-0 form from a scalar.
    pub fn scalar(pair: &ModulusPair, p: LaurentPoly) -> Self {
        Self::term(pair, Wedge::EMPTY, p)
    }

    pub fn pair(&self) -> &ModulusPair {
        &self.pair
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, wedge: Wedge) -> LaurentPoly {
        self.coeffs
            .get(&wedge)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.pair.vars()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Wedge, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, wedge: Wedge, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(wedge.len(), self.degree, "wedge length must match degree");
        match self.coeffs.entry(wedge) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.pair != other.pair {
            return Err(Error::Incompatible(
                "forms live over different modulus pairs".into(),
            ));
        }
        if self.degree != other.degree {
            return Err(Error::Incompatible(format!(
                "form degrees differ: {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(*w, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.pair, self.degree);
        }
        LogForm {
            pair: self.pair.clone(),
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, p)| (*w, p.scale(c)))
                .collect(),
        }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.pair, self.degree);
        for (w, c) in self.terms() {
            out.add_term(*w, c * p);
        }
        out
    }

    /// Graded-commutative exterior product. Degrees add; the result is the
    /// zero form when every wedge collides.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.pair != other.pair {
            return Err(Error::Incompatible(
                "forms live over different modulus pairs".into(),
            ));
        }
        let mut out = Self::zero(&self.pair, self.degree + other.degree);
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                if let Some((w, sign)) = wa.merge(*wb) {
                    out.add_term(w, (ca * cb).scale(&rat(sign)));
                }
            }
        }
        Ok(out)
    }

    /// Rewrite into the log basis of another pair over the same variables.
    /// Covectors convert by `d(xj) = xj * dlog(xj)`, so coefficients pick
    /// up monomial factors; the result is an identical ambient form.
    pub fn convert_to(&self, target: &ModulusPair) -> Result<Self> {
        if target.vars() != self.pair.vars() {
            return Err(Error::VarMismatch {
                left: self.pair.vars(),
                right: target.vars(),
            });
        }
        let mut out = Self::zero(target, self.degree);
        for (w, c) in self.terms() {
            let mut shift = Exponents::zero(self.pair.vars());
            for j in w.indices() {
                let from_log = self.pair.in_support(j);
                let to_log = target.in_support(j);
                if from_log && !to_log {
                    // dlog(xj) = xj^-1 d(xj)
                    shift = shift.sub(&Exponents::delta(self.pair.vars(), j));
                } else if !from_log && to_log {
                    // d(xj) = xj dlog(xj)
                    shift = shift.add(&Exponents::delta(self.pair.vars(), j));
                }
            }
            out.add_term(*w, c.mul_monomial(&shift));
        }
        Ok(out)
    }

    /// The residue along `x_{j0} = 0`: extract the `e_{j0}` factor with the
    /// front-position sign, set `x_{j0} = 0` in what remains, and land in
    /// degree `q - 1` forms over the divisor pair (variable `j0` deleted,
    /// modulus restricted). Terms without `e_{j0}` die; a pole of a
    /// surviving coefficient along the divisor is an error.
    pub fn residue(&self, j0: usize) -> Result<LogForm> {
        let dpair = divisor_pair(&self.pair, j0);
        if self.degree == 0 {
            return Ok(LogForm::zero(&dpair, 0));
        }
        let mut out = LogForm::zero(&dpair, self.degree - 1);
        for (w, c) in self.terms() {
            if let Some((rest, sign)) = w.extract(j0) {
                let restricted = restrict_poly(c, j0)?;
                let reindexed = Wedge::from_indices(
                    &rest
                        .indices()
                        .iter()
                        .map(|&i| if i > j0 { i - 1 } else { i })
                        .collect::<Vec<_>>(),
                );
                out.add_term(reindexed, restricted.scale(&rat(sign)));
            }
        }
        Ok(out)
    }
}

/// The pair induced on the coordinate divisor `x_{j0} = 0`: one variable
/// fewer, modulus exponents restricted.
pub fn divisor_pair(pair: &ModulusPair, j0: usize) -> ModulusPair {
    let r: Vec<i64> = pair
        .modulus()
        .entries()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != j0)
        .map(|(_, &v)| v)
        .collect();
    ModulusPair::from_slice(&r).expect("restricted modulus stays nonnegative")
}

/// Set `x_{j0} = 0` and delete the variable. Errors if a term has a pole
/// along the divisor.
fn restrict_poly(p: &LaurentPoly, j0: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(p.vars() - 1);
    for (e, c) in p.terms() {
        let a = e.get(j0);
        if a < 0 {
            return Err(Error::Domain(format!(
                "cannot restrict a pole of order {} in x{} to the divisor",
                -a,
                j0 + 1
            )));
        }
        if a == 0 {
            let rest: Vec<i64> = e
                .entries()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != j0)
                .map(|(_, &v)| v)
                .collect();
            out.add_term(Exponents::new(rest), c.clone());
        }
    }
    Ok(out)
}

/// The form `dlog(c * x^a)`: additivity over exponents, zero on constants.
pub fn dlog(p: &LaurentPoly, pair: &ModulusPair) -> Result<LogForm> {
    let (_, a) = p.as_monomial()?;
    let mut out = LogForm::zero(pair, 1);
    let n = pair.vars();
    for j in 0..n {
        let aj = a.get(j);
        if aj == 0 {
            continue;
        }
        let coeff = if pair.in_support(j) {
            LaurentPoly::constant(n, rat(aj))
        } else {
            // dlog(xj) = xj^-1 d(xj) off the support.
            LaurentPoly::monomial(n, Exponents::delta(n, j).neg(), rat(aj))
        };
        out.add_term(Wedge::from_indices(&[j]), coeff);
    }
    Ok(out)
}

/// The differential of a scalar, expanded in the log basis: the `e_j`
/// coefficient is `xj * d/dxj` of the scalar on the support and the plain
/// partial derivative elsewhere.
pub fn d_scalar(p: &LaurentPoly, pair: &ModulusPair) -> LogForm {
    let mut out = LogForm::zero(pair, 1);
    for j in 0..pair.vars() {
        let coeff = if pair.in_support(j) {
            p.log_deriv(j)
        } else {
            p.deriv(j)
        };
        out.add_term(Wedge::from_indices(&[j]), coeff);
    }
    out
}

/// Exterior derivative: basis covectors are closed, so `d` acts on the
/// coefficients via [`d_scalar`] and wedges on the left.
pub fn exterior_derivative(w: &LogForm) -> LogForm {
    let pair = w.pair().clone();
    let mut out = LogForm::zero(&pair, w.degree() + 1);
    for (t, c) in w.terms() {
        let dc = d_scalar(c, &pair);
        let et = LogForm::term(&pair, *t, LaurentPoly::one(pair.vars()));
        let piece = dc.wedge(&et).expect("same pair");
        out = out.add(&piece).expect("same degree");
    }
    out
}

/// Which of the free form modules over a pair a membership test targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// Log forms with polynomial coefficients.
    POmega,
    /// Log forms twisted by the modulus fractional ideal.
    MOmega,
    /// All forms on the interior: poles only along the divisor support.
    Ambient,
}

/// A form module `(kind, pair, degree)`; the kind fixes the coefficient
/// ideal per basis wedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormModule {
    pub kind: FormKind,
    pub pair: ModulusPair,
    pub degree: usize,
}

impl FormModule {
    pub fn new(kind: FormKind, pair: &ModulusPair, degree: usize) -> Self {
        FormModule {
            kind,
            pair: pair.clone(),
            degree,
        }
    }

    /// The coefficient ideal shared by every basis wedge; `None` for the
    /// ambient module, whose condition is pole containment instead.
    pub fn coefficient_ideal(&self) -> Option<MonomialIdeal> {
        match self.kind {
            FormKind::POmega => Some(MonomialIdeal::unit(self.pair.vars())),
            FormKind::MOmega => Some(mo_ring(&self.pair).ideal().clone()),
            FormKind::Ambient => None,
        }
    }

    /// Free generators: `e_T` for the log module, `x^{1_S - r} e_T` for the
    /// twisted module, over all ascending `q`-subsets. Empty when `q > n`.
    pub fn basis(&self) -> Vec<LogForm> {
        let n = self.pair.vars();
        if self.degree > n {
            return Vec::new();
        }
        let coeff = match self.kind {
            FormKind::POmega => LaurentPoly::one(n),
            FormKind::MOmega => {
                let gen = mo_ring(&self.pair).generator_exponent().clone();
                LaurentPoly::monomial(n, gen, Rational::one())
            }
            FormKind::Ambient => LaurentPoly::one(n),
        };
        Wedge::all(n, self.degree)
            .into_iter()
            .map(|t| LogForm::term(&self.pair, t, coeff.clone()))
            .collect()
    }

    /// Membership test. A coefficient pole off the divisor support means
    /// the form does not even live on the interior and is an error,
    /// distinct from a clean `false`.
    pub fn member(&self, w: &LogForm) -> Result<bool> {
        if w.pair() != &self.pair {
            return Err(Error::Incompatible(
                "form pair differs from module pair".into(),
            ));
        }
        if w.degree() != self.degree {
            return Err(Error::Incompatible(format!(
                "form degree {} differs from module degree {}",
                w.degree(),
                self.degree
            )));
        }
        for (t, c) in w.terms() {
            for j in 0..self.pair.vars() {
                if !self.pair.in_support(j) && c.min_exponent(j).unwrap_or(0) < 0 {
                    return Err(Error::PoleOffSupport {
                        var: j + 1,
                        wedge: format!("{:?}", t.indices()),
                    });
                }
            }
        }
        match self.coefficient_ideal() {
            None => Ok(true),
            Some(ideal) => Ok(w.terms().all(|(_, c)| ideal.contains(c))),
        }
    }
}

/// Smallest `m >= 1` such that the form lies in the twisted module of the
/// `m`-fold modulus, or `None` when a coefficient has a pole off the
/// support. Membership is coefficient-wise, so the level is the largest
/// coefficient level.
pub fn form_exhaustion_level(w: &LogForm) -> Option<i64> {
    let mut m = 1i64;
    for (_, c) in w.terms() {
        m = m.max(crate::modulus::mo_exhaustion_level(c, w.pair())?);
    }
    Some(m)
}

/// Certify that ascending wedges of the rank-one log basis reproduce the
/// degree-`q` basis exactly, i.e. the exterior-power comparison map is an
/// isomorphism of free modules.
pub fn exterior_power_iso(pair: &ModulusPair, q: usize) -> VerificationReport {
    let mut report = VerificationReport::new("exterior-power-iso")
        .param("n", pair.vars())
        .param("r", pair.modulus().entries())
        .param("q", q);
    let one_basis = FormModule::new(FormKind::POmega, pair, 1).basis();
    let q_basis = FormModule::new(FormKind::POmega, pair, q).basis();
    let mut wedges = Vec::new();
    for t in Wedge::all(pair.vars(), q) {
        let mut w = LogForm::scalar(pair, LaurentPoly::one(pair.vars()));
        for j in t.indices() {
            w = w.wedge(&one_basis[j]).expect("same pair");
        }
        wedges.push(w);
    }
    report.check(wedges.len() == q_basis.len(), || {
        format!(
            "wedge count {} differs from basis count {}",
            wedges.len(),
            q_basis.len()
        )
    });
    for (w, b) in wedges.iter().zip(&q_basis) {
        report.check(w == b, || format!("wedge {w} does not match generator {b}"));
    }
    report
}

impl fmt::Display for LogForm {
    /// Grammar: `coeff * dlog(xj) ^ d(xk) + ...`; coefficients with more
    /// than one term are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let covectors: Vec<String> = t
                .indices()
                .iter()
                .map(|&j| {
                    if self.pair.in_support(j) {
                        format!("dlog(x{})", j + 1)
                    } else {
                        format!("d(x{})", j + 1)
                    }
                })
                .collect();
            let coeff = if c.num_terms() > 1 {
                format!("({c})")
            } else {
                format!("{c}")
            };
            if covectors.is_empty() {
                write!(f, "{coeff}")?;
            } else if c.num_terms() == 1 && c.coeff(&Exponents::zero(self.pair.vars())).is_one() {
                write!(f, "{}", covectors.join(" ^ "))?;
            } else {
                write!(f, "{} * {}", coeff, covectors.join(" ^ "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ratio;

    fn pair(r: &[i64]) -> ModulusPair {
        ModulusPair::from_slice(r).unwrap()
    }

    fn mono(vars: usize, e: &[i64]) -> LaurentPoly {
        LaurentPoly::monomial(vars, Exponents::from(e), rat(1))
    }

    #[test]
    fn p_basis_matches_the_free_description() {
        // P basis of (n=2, r=(2,0)) is {dlog x1, d x2}.
        let p = pair(&[2, 0]);
        let basis = FormModule::new(FormKind::POmega, &p, 1).basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].to_string(), "dlog(x1)");
        assert_eq!(basis[1].to_string(), "d(x2)");
    }

    #[test]
    fn m_basis_carries_the_modulus_twist() {
        // M basis of (n=2, r=(2,0)) is {x1^-1 dlog x1, x1^-1 d x2}.
        let p = pair(&[2, 0]);
        let basis = FormModule::new(FormKind::MOmega, &p, 1).basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].coeff(Wedge(1)), mono(2, &[-1, 0]));
        assert_eq!(basis[1].coeff(Wedge(2)), mono(2, &[-1, 0]));
    }

    #[test]
    fn basis_count_is_binomial() {
        let p = pair(&[1, 1, 0]);
        assert_eq!(FormModule::new(FormKind::POmega, &p, 2).basis().len(), 3);
        assert_eq!(FormModule::new(FormKind::MOmega, &p, 3).basis().len(), 1);
        assert_eq!(FormModule::new(FormKind::POmega, &p, 4).basis().len(), 0);
    }

    #[test]
    fn membership_examples() {
        let p = pair(&[2, 0]);
        let pmod = FormModule::new(FormKind::POmega, &p, 1);
        let mmod = FormModule::new(FormKind::MOmega, &p, 1);
        let dlog_x1 = LogForm::term(&p, Wedge(1), LaurentPoly::one(2));
        assert!(pmod.member(&dlog_x1).unwrap());
        let w = LogForm::term(&p, Wedge(2), mono(2, &[-1, 0]));
        assert!(!pmod.member(&w).unwrap());
        assert!(mmod.member(&w).unwrap());
    }

    #[test]
    fn pole_off_support_is_an_error_not_false() {
        let p = pair(&[2, 0]);
        let pmod = FormModule::new(FormKind::POmega, &p, 1);
        let w = LogForm::term(&p, Wedge(1), mono(2, &[0, -1]));
        assert!(matches!(
            pmod.member(&w),
            Err(Error::PoleOffSupport { var: 2, .. })
        ));
    }

    #[test]
    fn dlog_is_additive_on_monomials() {
        // dlog(x1^2 x2) with S = {1}: 2 dlog x1 + x2^-1 d x2.
        let p = pair(&[1, 0]);
        let w = dlog(&mono(2, &[2, 1]), &p).unwrap();
        assert_eq!(w.coeff(Wedge(1)), LaurentPoly::constant(2, rat(2)));
        assert_eq!(w.coeff(Wedge(2)), mono(2, &[0, -1]));

        // Constants are closed, inverses negate.
        assert!(dlog(&LaurentPoly::constant(2, rat(5)), &p).unwrap().is_zero());
        let winv = dlog(&mono(2, &[-1, 0]), &p).unwrap();
        assert_eq!(winv.coeff(Wedge(1)), LaurentPoly::constant(2, rat(-1)));
    }

    #[test]
    fn dlog_rejects_sums() {
        let p = pair(&[1]);
        let s = &LaurentPoly::one(1) + &LaurentPoly::var(1, 0);
        assert!(matches!(dlog(&s, &p), Err(Error::NotMonomial(2))));
    }

    #[test]
    fn wedge_is_alternating_and_graded_commutative() {
        let p = pair(&[2, 0]);
        let a = LogForm::term(&p, Wedge(1), LaurentPoly::one(2));
        let b = LogForm::term(&p, Wedge(2), LaurentPoly::one(2));
        assert!(a.wedge(&a).unwrap().is_zero());
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        assert_eq!(ba, ab.neg());
        // Bilinearity over scalar coefficients.
        let x2a = a.scale_poly(&LaurentPoly::var(2, 1));
        assert_eq!(
            x2a.wedge(&b).unwrap(),
            ab.scale_poly(&LaurentPoly::var(2, 1))
        );
    }

    #[test]
    fn exterior_derivative_examples() {
        let p = pair(&[1, 0]);
        // d(x1) = x1 dlog x1 in the log basis.
        let dx1 = d_scalar(&mono(2, &[1, 0]), &p);
        assert_eq!(dx1.coeff(Wedge(1)), mono(2, &[1, 0]));
        // d(dlog x1) = 0.
        let dlog_x1 = LogForm::term(&p, Wedge(1), LaurentPoly::one(2));
        assert!(exterior_derivative(&dlog_x1).is_zero());
        // Leibniz with a closed covector: d(x2 dlog x1) = d x2 ^ dlog x1.
        let w = LogForm::term(&p, Wedge(1), mono(2, &[0, 1]));
        let dw = exterior_derivative(&w);
        let expected = d_scalar(&mono(2, &[0, 1]), &p)
            .wedge(&dlog_x1)
            .unwrap();
        assert_eq!(dw, expected);
    }

    #[test]
    fn d_squared_is_zero_and_leibniz_holds() {
        let p = pair(&[2, 0, 1]);
        let mut c = LaurentPoly::zero(3);
        c.add_term(Exponents::from(&[2, 1, 0][..]), ratio(3, 2));
        c.add_term(Exponents::from(&[1, 0, -2][..]), rat(-1));
        c.add_term(Exponents::from(&[0, 3, 1][..]), rat(7));
        let w = LogForm::term(&p, Wedge::from_indices(&[1, 2]), c.clone());
        assert!(exterior_derivative(&exterior_derivative(&w)).is_zero());

        let mut s = LaurentPoly::zero(3);
        s.add_term(Exponents::from(&[1, 1, 1][..]), rat(2));
        s.add_term(Exponents::from(&[-1, 0, 0][..]), ratio(1, 3));
        let left = exterior_derivative(&w.scale_poly(&s));
        let right = d_scalar(&s, &p)
            .wedge(&w)
            .unwrap()
            .add(&exterior_derivative(&w).scale_poly(&s))
            .unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn exterior_power_iso_examples() {
        assert!(exterior_power_iso(&pair(&[2, 0]), 2).passed());
        assert!(exterior_power_iso(&pair(&[2, 0]), 0).passed());
        let r = exterior_power_iso(&pair(&[1, 1, 0]), 2);
        assert!(r.passed());
    }

    #[test]
    fn convert_to_rewrites_between_supports() {
        let with_log = pair(&[1, 0]);
        let without = pair(&[0, 0]);
        // dlog x1 written over the empty modulus picks up x1^-1.
        let w = LogForm::term(&with_log, Wedge(1), LaurentPoly::one(2));
        let converted = w.convert_to(&without).unwrap();
        assert_eq!(converted.coeff(Wedge(1)), mono(2, &[-1, 0]));
        // And back.
        assert_eq!(converted.convert_to(&with_log).unwrap(), w);
    }

    #[test]
    fn residue_extracts_the_log_coefficient_with_sign() {
        let p = pair(&[1, 1]);
        // residue_{x2}(dlog x1 ^ dlog x2) = -dlog x1 (one transposition).
        let w = LogForm::term(&p, Wedge::from_indices(&[0, 1]), LaurentPoly::one(2));
        let r = w.residue(1).unwrap();
        assert_eq!(r.degree(), 1);
        assert_eq!(r.coeff(Wedge(1)), LaurentPoly::constant(1, rat(-1)));
        // Terms without the covector vanish and x2 is set to zero.
        let mut c = LaurentPoly::zero(2);
        c.add_term(Exponents::from(&[3, 0][..]), rat(2));
        c.add_term(Exponents::from(&[0, 1][..]), rat(5));
        let w2 = LogForm::term(&p, Wedge::from_indices(&[1]), c);
        let r2 = w2.residue(1).unwrap();
        assert_eq!(r2.coeff(Wedge::EMPTY), mono(1, &[3]).scale(&rat(2)));
        assert!(w2.residue(0).unwrap().is_zero());
    }

    #[test]
    fn height_one_pole_inspection_matches_membership() {
        // Membership in the log module is equivalent to having no pole in
        // any single variable after inverting all the others.
        let p = pair(&[2, 1, 0]);
        let candidates = [
            LogForm::term(&p, Wedge(1), mono(3, &[0, -1, 2])),
            LogForm::term(&p, Wedge(2), mono(3, &[4, 0, 1])),
            LogForm::term(&p, Wedge(1), &mono(3, &[1, 0, 0]) + &mono(3, &[0, 2, 5])),
            LogForm::term(&p, Wedge::from_indices(&[0, 2]), mono(3, &[1, -2, 0])),
            LogForm::term(&p, Wedge::from_indices(&[0, 1]), mono(3, &[2, 3, 1])),
        ];
        for w in &candidates {
            let module = FormModule::new(FormKind::POmega, &p, w.degree());
            let per_variable = w.terms().all(|(_, c)| {
                (0..3).all(|j| c.min_exponent(j).unwrap_or(0) >= 0)
            });
            assert_eq!(module.member(w).unwrap(), per_variable, "{w}");
        }
    }

    #[test]
    fn localization_rewrites_basis_on_generators() {
        // Inverting the monomial x2 over (n=3, r=(2,0,0)) turns d(x2) into
        // x2 dlog(x2) and leaves the other generators alone.
        let base = pair(&[2, 0, 0]);
        let localized = pair(&[2, 1, 0]);
        let basis = FormModule::new(FormKind::POmega, &base, 1).basis();
        let rewritten: Vec<LogForm> = basis
            .iter()
            .map(|w| w.convert_to(&localized).unwrap())
            .collect();
        assert_eq!(rewritten[0].to_string(), "dlog(x1)");
        assert_eq!(rewritten[1].to_string(), "x2 * dlog(x2)");
        assert_eq!(rewritten[2].to_string(), "d(x3)");
        // Each rewritten generator still generates: dividing by the unit
        // x2 recovers a basis element of the localized module.
        let loc_basis = FormModule::new(FormKind::POmega, &localized, 1).basis();
        assert_eq!(
            rewritten[1].scale_poly(&mono(3, &[0, -1, 0])),
            loc_basis[1]
        );
        // Degree two: wedges pick up exactly the x2 factors of their
        // rewritten covectors.
        let basis2 = FormModule::new(FormKind::POmega, &base, 2).basis();
        let loc_basis2 = FormModule::new(FormKind::POmega, &localized, 2).basis();
        for (w, l) in basis2.iter().zip(&loc_basis2) {
            let conv = w.convert_to(&localized).unwrap();
            let (t, _) = l.terms().next().unwrap();
            let factor = if t.contains(1) {
                mono(3, &[0, 1, 0])
            } else {
                LaurentPoly::one(3)
            };
            assert_eq!(conv, l.scale_poly(&factor));
        }
    }
}
