//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! [`LaurentPoly`] stores terms in a `BTreeMap` keyed by [`Exponents`], so
//! iteration order is lexicographic and canonical. Invariants: no zero
//! coefficient is ever stored, and every exponent vector has the ambient
//! variable count. Variables are 1-indexed in text form (`x1`, `x2`, ...)
//! and 0-indexed in the API.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A fixed-length vector of integer exponents.
///
/// Ordering is lexicographic; vectors are only comparable within a ring,
/// where all lengths agree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents(Vec<i64>);

impl Exponents {
    pub fn new(entries: Vec<i64>) -> Self {
        Exponents(entries)
    }

    pub fn zero(len: usize) -> Self {
        Exponents(vec![0; len])
    }

    /// The standard basis vector `delta_j`.
    pub fn delta(len: usize, j: usize) -> Self {
        let mut e = vec![0; len];
        e[j] = 1;
        Exponents(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> i64 {
        self.0[j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Exponents(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, m: i64) -> Self {
        Exponents(self.0.iter().map(|a| a * m).collect())
    }

    /// Componentwise `self >= other`.
    pub fn ge(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Indices with a strictly positive entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.0[j] > 0).collect()
    }

    /// Sum of all entries.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Concatenation of two exponent blocks.
    pub fn concat(&self, other: &Self) -> Self {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Exponents(e)
    }
}

impl From<Vec<i64>> for Exponents {
    fn from(v: Vec<i64>) -> Self {
        Exponents(v)
    }
}

impl From<&[i64]> for Exponents {
    fn from(v: &[i64]) -> Self {
        Exponents(v.to_vec())
    }
}

/// All exponent vectors of length `vars` with every entry in `[lo, hi]`,
/// in lexicographic order.
pub fn exponent_window(vars: usize, lo: i64, hi: i64) -> Vec<Exponents> {
    assert!(lo <= hi);
    let mut out = Vec::new();
    let mut cur = vec![lo; vars];
    loop {
        out.push(Exponents::new(cur.clone()));
        let mut j = vars;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < hi {
                cur[j] += 1;
                for v in cur.iter_mut().skip(j + 1) {
                    *v = lo;
                }
                break;
            }
        }
    }
}

/// Radical of the monomial ideal `(x^r)`: the componentwise sign vector,
/// since the radical of a monomial power ideal is the ideal of the support
/// monomial.
pub fn radical_of_monomial(r: &Exponents) -> Result<Exponents> {
    for (j, &v) in r.entries().iter().enumerate() {
        if v < 0 {
            return Err(Error::NegativeExponent { index: j, value: v });
        }
    }
    Ok(Exponents(
        r.entries().iter().map(|&v| i64::from(v > 0)).collect(),
    ))
}

/// A sparse Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Exponents::zero(vars), c);
        p
    }

    /// The variable `x_j` (0-indexed).
    pub fn var(vars: usize, j: usize) -> Self {
        Self::monomial(vars, Exponents::delta(vars, j), Rational::one())
    }

    pub fn monomial(vars: usize, exp: Exponents, c: Rational) -> Self {
        assert_eq!(exp.len(), vars, "exponent length must match variable count");
        let mut p = Self::zero(vars);
        p.add_term(exp, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponents) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add `c * x^exp`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, exp: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exp.len(), self.vars);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.vars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `x^exp`.
    pub fn mul_monomial(&self, exp: &Exponents) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.add(exp), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Interpret as `c * x^a`; errors unless there is exactly one term.
    pub fn as_monomial(&self) -> Result<(Rational, Exponents)> {
        if self.terms.len() != 1 {
            return Err(Error::NotMonomial(self.terms.len()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok((c.clone(), e.clone()))
    }

    /// Smallest exponent of `x_j` over all terms, or `None` for the zero
    /// polynomial.
    pub fn min_exponent(&self, j: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(j)).min()
    }

    /// Partial derivative with respect to `x_j`.
    pub fn deriv(&self, j: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let a = e.get(j);
            if a != 0 {
                let mut ex = e.clone();
                ex.0[j] -= 1;
                out.add_term(ex, c * rat(a));
            }
        }
        out
    }

    /// The logarithmic derivative coefficient `x_j * d/dx_j`, which maps
    /// `x^a` to `a_j x^a` and so never introduces poles.
    pub fn log_deriv(&self, j: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let a = e.get(j);
            if a != 0 {
                out.add_term(e.clone(), c * rat(a));
            }
        }
        out
    }

    /// Substitute each variable by a monomial in a target ring:
    /// `x_j -> y^images[j]`.
    pub fn subst_monomials(&self, target_vars: usize, images: &[Exponents]) -> Self {
        assert_eq!(images.len(), self.vars);
        let mut out = Self::zero(target_vars);
        for (e, c) in self.terms() {
            let mut img = Exponents::zero(target_vars);
            for (j, m) in images.iter().enumerate() {
                img = img.add(&m.scaled(e.get(j)));
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Embed into a ring with more variables, shifting indices by `offset`.
    pub fn embed(&self, target_vars: usize, offset: usize) -> Self {
        assert!(self.vars + offset <= target_vars);
        let mut out = Self::zero(target_vars);
        for (e, c) in self.terms() {
            let mut img = vec![0; target_vars];
            img[offset..offset + self.vars].copy_from_slice(e.entries());
            out.add_term(Exponents::new(img), c.clone());
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for LaurentPoly {
    /// Grammar: terms joined by ` + `, each `c * x1^e1 * ... * xn^en` with
    /// zero-exponent factors omitted and rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for j in 0..self.vars {
                let a = e.get(j);
                if a == 1 {
                    factors.push(format!("x{}", j + 1));
                } else if a != 0 {
                    factors.push(format!("x{}^{}", j + 1, a));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", factors.join(" * "))?;
            } else {
                write!(f, "{} * {}", c, factors.join(" * "))?;
            }
        }
        Ok(())
    }
}

/// The monomial fractional ideal `x^g * A` inside the Laurent ring, where
/// `A` is the polynomial ring on the nonnegative orthant. The generator
/// exponent may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gen: Exponents,
}

impl MonomialIdeal {
    pub fn new(gen: Exponents) -> Self {
        MonomialIdeal { gen }
    }

    /// The unit ideal `A` itself.
    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            gen: Exponents::zero(vars),
        }
    }

    pub fn generator(&self) -> &Exponents {
        &self.gen
    }

    pub fn vars(&self) -> usize {
        self.gen.len()
    }

    /// Membership of a single monomial exponent.
    pub fn contains_exp(&self, exp: &Exponents) -> bool {
        exp.ge(&self.gen)
    }

    /// Membership of a polynomial: every term must satisfy `a - g >= 0`
    /// componentwise. The zero polynomial belongs to every ideal.
    pub fn contains(&self, p: &LaurentPoly) -> bool {
        p.terms().all(|(e, _)| self.contains_exp(e))
    }

    /// The shifted ideal `x^by * self`.
    pub fn shift(&self, by: &Exponents) -> Self {
        MonomialIdeal {
            gen: self.gen.add(by),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(v: &[i64]) -> Exponents {
        Exponents::from(v)
    }

    /// Brute-force oracle: `x^a` is in the radical of `(x^r)` iff some power
    /// `x^{m a}` lies in `(x^r)`, i.e. `m*a >= r` componentwise for some
    /// `m >= 1`. Scans `m` up to a bound that is exhaustive for small inputs.
    fn in_radical_brute(a: &Exponents, r: &Exponents) -> bool {
        (1..=16).any(|m| a.scaled(m).ge(r))
    }

    #[test]
    fn product_difference_of_squares() {
        let x = LaurentPoly::var(1, 0);
        let one = LaurentPoly::one(1);
        let p = &(&x + &one) * &(&x - &one);
        let expected = &(&x * &x) - &one;
        assert_eq!(p, expected);
    }

    #[test]
    fn product_with_zero_is_zero() {
        let x = LaurentPoly::var(2, 0);
        let p = &(&x + &LaurentPoly::one(2)) * &LaurentPoly::zero(2);
        assert!(p.is_zero());
    }

    #[test]
    fn laurent_inverse_cancels() {
        let xinv = LaurentPoly::monomial(1, xp(&[-1]), rat(1));
        let x = LaurentPoly::var(1, 0);
        assert_eq!(&xinv * &x, LaurentPoly::one(1));
    }

    #[test]
    fn var_mismatch_is_an_error() {
        let p = LaurentPoly::one(1);
        let q = LaurentPoly::one(2);
        assert!(matches!(
            p.checked_add(&q),
            Err(Error::VarMismatch { left: 1, right: 2 })
        ));
        assert!(p.checked_mul(&q).is_err());
    }

    #[test]
    fn radical_of_monomial_matches_brute_force() {
        // Derived value: (3,0,2) -> (1,0,1).
        let r = xp(&[3, 0, 2]);
        let rad = radical_of_monomial(&r).unwrap();
        assert_eq!(rad, xp(&[1, 0, 1]));

        // Cross-check against the brute-force membership oracle over a
        // small exponent window: a is in (x^rad) iff a is in sqrt((x^r)).
        let window = 3i64;
        for a0 in 0..=window {
            for a1 in 0..=window {
                for a2 in 0..=window {
                    let a = xp(&[a0, a1, a2]);
                    let in_rad_ideal = a.ge(&rad);
                    assert_eq!(in_rad_ideal, in_radical_brute(&a, &r), "a = {:?}", a);
                }
            }
        }
    }

    #[test]
    fn radical_unit_and_reduced_ideals() {
        assert_eq!(
            radical_of_monomial(&xp(&[0, 0, 0])).unwrap(),
            xp(&[0, 0, 0])
        );
        assert_eq!(radical_of_monomial(&xp(&[1, 1])).unwrap(), xp(&[1, 1]));
    }

    #[test]
    fn radical_rejects_negative_entries() {
        assert!(matches!(
            radical_of_monomial(&xp(&[1, -2])),
            Err(Error::NegativeExponent { index: 1, value: -2 })
        ));
    }

    #[test]
    fn radical_is_idempotent() {
        for r in [xp(&[3, 0, 2]), xp(&[0, 0]), xp(&[5]), xp(&[1, 2, 3, 4])] {
            let once = radical_of_monomial(&r).unwrap();
            let twice = radical_of_monomial(&once).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn fractional_ideal_membership() {
        let j = MonomialIdeal::new(xp(&[-1, 0]));
        // x1^-1 x2 is the generator times x2.
        let p = LaurentPoly::monomial(2, xp(&[-1, 1]), rat(1));
        assert!(j.contains(&p));
        // x1^-2 has a pole too deep.
        let q = LaurentPoly::monomial(2, xp(&[-2, 0]), rat(1));
        assert!(!j.contains(&q));
        // 1 + x1 against (x1): the constant term obstructs.
        let j1 = MonomialIdeal::new(xp(&[1, 0]));
        let r = &LaurentPoly::one(2) + &LaurentPoly::var(2, 0);
        assert!(!j1.contains(&r));
    }

    #[test]
    fn membership_is_translation_equivariant() {
        let g = xp(&[2, -1]);
        let j = MonomialIdeal::new(xp(&[-1, 3]));
        let shifted = j.shift(&g);
        for e in [xp(&[-1, 3]), xp(&[0, 0]), xp(&[5, 5]), xp(&[-2, 4])] {
            let p = LaurentPoly::monomial(2, e.clone(), rat(2));
            let ps = p.mul_monomial(&g);
            assert_eq!(j.contains(&p), shifted.contains(&ps));
        }
    }

    #[test]
    fn display_round_trip_format() {
        let mut p = LaurentPoly::zero(2);
        p.add_term(xp(&[2, 0]), rat(1));
        p.add_term(xp(&[0, -1]), ratio(-3, 2));
        assert_eq!(p.to_string(), "-3/2 * x2^-1 + x1^2");
    }
}
