//! The modulus structure ring of an affine pair with monomial divisor.
//!
//! For the pair `(A^n, x^r)` the ring of modulus sections is the set of
//! fractions `a / x^r` with `a` in the radical of `(x^r)`. For monomial
//! divisors this is the monomial fractional ideal generated by
//! `x^{1_S - r}`, where `S` is the support of `r` and `1_S` its indicator
//! vector. The empty divisor (`r = 0`) gives back the polynomial ring.

use crate::error::{Error, Result};
use crate::laurent::{radical_of_monomial, Exponents, LaurentPoly, MonomialIdeal};

/// An affine modulus pair: `n` variables and a nonnegative divisor
/// exponent vector `r`, encoding `(A^n, x1^{r_1} ... xn^{r_n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModulusPair {
    vars: usize,
    modulus: Exponents,
}

impl ModulusPair {
    pub fn new(vars: usize, modulus: Exponents) -> Result<Self> {
        if modulus.len() != vars {
            return Err(Error::VarMismatch {
                left: vars,
                right: modulus.len(),
            });
        }
        for (j, &v) in modulus.entries().iter().enumerate() {
            if v < 0 {
                return Err(Error::NegativeExponent { index: j, value: v });
            }
        }
        Ok(ModulusPair { vars, modulus })
    }

    /// Convenience constructor from a plain exponent slice.
    pub fn from_slice(r: &[i64]) -> Result<Self> {
        Self::new(r.len(), Exponents::from(r))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn modulus(&self) -> &Exponents {
        &self.modulus
    }

    /// The divisor support `S = { j : r_j > 0 }`.
    pub fn support(&self) -> Vec<usize> {
        self.modulus.support()
    }

    pub fn in_support(&self, j: usize) -> bool {
        self.modulus.get(j) > 0
    }

    /// Indicator vector `1_S` of the support.
    pub fn support_indicator(&self) -> Exponents {
        radical_of_monomial(&self.modulus).expect("modulus is nonnegative")
    }

    /// The pair with modulus multiplied by `m` (same support for `m >= 1`).
    pub fn scaled(&self, m: i64) -> Self {
        assert!(m >= 0);
        ModulusPair {
            vars: self.vars,
            modulus: self.modulus.scaled(m),
        }
    }

    /// The pair with one unit of the divisor at `j0` removed.
    pub fn reduced_at(&self, j0: usize) -> Result<Self> {
        if !self.in_support(j0) {
            return Err(Error::NotInSupport(j0));
        }
        let mut r = self.modulus.entries().to_vec();
        r[j0] -= 1;
        ModulusPair::new(self.vars, Exponents::new(r))
    }

    /// Tensor product of pairs: variable blocks are concatenated and the
    /// divisor is the product monomial `x^{r_a} y^{r_b}`.
    pub fn tensor(&self, other: &Self) -> Self {
        ModulusPair {
            vars: self.vars + other.vars,
            modulus: self.modulus.concat(&other.modulus),
        }
    }
}

/// The ring of modulus sections, realized as a monomial fractional ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusRing {
    pair: ModulusPair,
    generator: MonomialIdeal,
}

impl ModulusRing {
    pub fn pair(&self) -> &ModulusPair {
        &self.pair
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.generator
    }

    pub fn generator_exponent(&self) -> &Exponents {
        self.generator.generator()
    }

    /// Membership of a single monomial exponent.
    pub fn contains_monomial(&self, k: &Exponents) -> bool {
        self.generator.contains_exp(k)
    }
}

/// The modulus structure ring of a pair: the fractional ideal generated by
/// `x^{1_S - r}`. For `r = 0` this is the polynomial ring itself.
pub fn mo_ring(pair: &ModulusPair) -> ModulusRing {
    let gen = pair.support_indicator().sub(pair.modulus());
    ModulusRing {
        pair: pair.clone(),
        generator: MonomialIdeal::new(gen),
    }
}

/// Membership in the modulus structure ring: `p = a / x^r` with `a` in the
/// radical of `(x^r)`.
pub fn mo_member(p: &LaurentPoly, pair: &ModulusPair) -> bool {
    mo_ring(pair).ideal().contains(p)
}

/// Smallest `m >= 1` such that `p` lies in the modulus ring of `(A^n, x^{m r})`,
/// or `None` if `p` has a pole off the divisor support (no multiple works)
/// or the support is too small for its poles.
pub fn mo_exhaustion_level(p: &LaurentPoly, pair: &ModulusPair) -> Option<i64> {
    if p.is_zero() {
        return Some(1);
    }
    let mut m = 1i64;
    for j in 0..pair.vars() {
        let lo = p.min_exponent(j).unwrap();
        let r = pair.modulus().get(j);
        if r == 0 {
            if lo < 0 {
                return None;
            }
        } else {
            // Need lo >= 1 - m*r, i.e. m >= (1 - lo) / r.
            let need = (1 - lo).div_euclid(r) + i64::from((1 - lo).rem_euclid(r) != 0);
            m = m.max(need);
        }
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn pair(r: &[i64]) -> ModulusPair {
        ModulusPair::from_slice(r).unwrap()
    }

    fn mono(vars: usize, e: &[i64]) -> LaurentPoly {
        LaurentPoly::monomial(vars, Exponents::from(e), rat(1))
    }

    /// Brute-force oracle straight from the definition: a monomial `x^k`
    /// is a modulus section iff `a = x^{k+r}` is a polynomial lying in the
    /// radical of `(x^r)`, the latter checked by scanning powers.
    fn mo_member_brute(k: &Exponents, r: &Exponents) -> bool {
        let a = k.add(r);
        if !a.is_nonneg() {
            return false;
        }
        (1..=16).any(|m| a.scaled(m).ge(r))
    }

    #[test]
    fn mo_generator_matches_brute_force_scan() {
        // Derived: (n=1, r=3) has generator x^-2.
        let p1 = pair(&[3]);
        assert_eq!(
            mo_ring(&p1).generator_exponent(),
            &Exponents::from(&[-2][..])
        );
        for k in -5..=5 {
            let e = Exponents::from(&[k][..]);
            assert_eq!(
                mo_member(&mono(1, &[k]), &p1),
                mo_member_brute(&e, p1.modulus()),
                "k = {k}"
            );
        }

        // Derived: (n=2, r=(2,3)) has generator x1^-1 x2^-2.
        let p2 = pair(&[2, 3]);
        assert_eq!(
            mo_ring(&p2).generator_exponent(),
            &Exponents::from(&[-1, -2][..])
        );
        for k0 in -5..=5 {
            for k1 in -5..=5 {
                let e = Exponents::from(&[k0, k1][..]);
                assert_eq!(
                    mo_member(&mono(2, &[k0, k1]), &p2),
                    mo_member_brute(&e, p2.modulus()),
                    "k = ({k0},{k1})"
                );
            }
        }
    }

    #[test]
    fn empty_modulus_gives_the_whole_ring() {
        let p = pair(&[0]);
        assert_eq!(mo_ring(&p).generator_exponent(), &Exponents::zero(1));
        assert!(mo_member(&mono(1, &[0]), &p));
        assert!(!mo_member(&mono(1, &[-1]), &p));
    }

    #[test]
    fn mo_membership_examples() {
        let p = pair(&[3]);
        assert!(mo_member(&mono(1, &[-2]), &p));
        assert!(!mo_member(&mono(1, &[-3]), &p));
        // Pole-free polynomials always belong.
        let q = &mono(2, &[4, 0]) + &LaurentPoly::one(2);
        assert!(mo_member(&q, &pair(&[2, 3])));
    }

    #[test]
    fn tensor_concatenates_blocks() {
        assert_eq!(pair(&[2]).tensor(&pair(&[3])), pair(&[2, 3]));
        assert_eq!(pair(&[0]).tensor(&pair(&[0])), pair(&[0, 0]));
        assert_eq!(pair(&[1, 0]).tensor(&pair(&[4])), pair(&[1, 0, 4]));
    }

    #[test]
    fn filtration_is_monotone_on_a_window() {
        let p = pair(&[2, 0, 1]);
        let bumped = ModulusPair::new(
            3,
            p.modulus().add(&p.support_indicator()),
        )
        .unwrap();
        for k0 in -4..=2 {
            for k2 in -4..=2 {
                let m = mono(3, &[k0, 1, k2]);
                if mo_member(&m, &p) {
                    assert!(mo_member(&m, &bumped));
                }
            }
        }
    }

    #[test]
    fn mo_is_a_module_over_the_polynomial_ring() {
        let p = pair(&[3, 2]);
        let member = mono(2, &[-2, -1]);
        assert!(mo_member(&member, &p));
        let polyfree = &mono(2, &[1, 3]) + &LaurentPoly::one(2);
        assert!(mo_member(&(&member * &polyfree), &p));
    }

    #[test]
    fn exhaustion_finds_the_smallest_multiple() {
        let p = pair(&[2, 0]);
        // x1^-7 needs 1 - 2m <= -7, i.e. m >= 4.
        let deep = mono(2, &[-7, 1]);
        let m = mo_exhaustion_level(&deep, &p).unwrap();
        assert_eq!(m, 4);
        assert!(mo_member(&deep, &p.scaled(m)));
        assert!(!mo_member(&deep, &p.scaled(m - 1)));
        // A pole off the support is never absorbed.
        assert_eq!(mo_exhaustion_level(&mono(2, &[0, -1]), &p), None);
    }
}
