//! Sparse Laurent polynomials in one variable `q` with arbitrary-precision
//! integer coefficients.
//!
//! [`LaurentPoly`] is the value type for every polynomial in the crate:
//! Gaussian binomials, Pochhammer products, the stalk polynomials `h_m^(n)`,
//! the multiplicity polynomials `P_j^(n)` and the generating polynomials of
//! Fano cohomology. Values are immutable once built and all operations are
//! pure, so they can be shared freely across threads.

mod ops;
mod rational;
mod render;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use rational::RationalPair;

/// Which exponents occur in a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    Empty,
}

/// A finite sum `Σ c_e q^e` with `e` any signed integer and `c_e ≠ 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `1 - q^e`. Note that `e = 0` gives the zero polynomial.
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::one() - Self::q_pow(e)
    }

    /// `1 + q^e`.
    pub fn one_plus_q_pow(e: i64) -> Self {
        Self::one() + Self::q_pow(e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    /// Builds `Σ coeffs[k] q^k` from a dense coefficient slice.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| (k as i64, c)),
        )
    }

    pub(crate) fn from_map(mut terms: BTreeMap<i64, BigInt>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `q^k`; zero for absent exponents.
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Highest exponent, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.max_exponent()
    }

    /// True when no negative power of `q` occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `q` by `q^m`.
    pub fn substitute_power(&self, m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("substitute_power requires a nonzero power"));
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        })
    }

    /// True iff `coeff(center + k) == coeff(center - k)` for every `k`.
    pub fn is_palindromic(&self, center: i64) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&(2 * center - e)) == Some(c))
    }

    pub fn support_parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for e in self.terms.keys() {
            if e.rem_euclid(2) == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (false, false) => Parity::Empty,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Returns `r` with `r · divisor == self`, or an inexact-division error
    /// carrying the remainder.
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero
    /// constant term and divided from the lowest exponent upwards.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(d_low), Some(d_high)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(Error::invalid("division by the zero polynomial"));
        };
        let Some(p_low) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        let p_high = self.max_exponent().unwrap_or(p_low);
        let lead = &divisor.terms[&d_low];
        let top = (p_high - p_low) - (d_high - d_low);

        let mut rem: BTreeMap<i64, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| (e - p_low, c.clone()))
            .collect();
        let mut quotient = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next() {
            if e > top {
                break;
            }
            if !(c % lead).is_zero() {
                break;
            }
            let t = c / lead;
            for (de, dc) in divisor.terms() {
                let slot = rem.entry(e + de - d_low).or_default();
                *slot -= &t * dc;
                if slot.is_zero() {
                    rem.remove(&(e + de - d_low));
                }
            }
            quotient.insert(e, t);
        }
        if !rem.is_empty() {
            let remainder = Self::from_map(rem.into_iter().map(|(e, c)| (e + p_low, c)).collect());
            return Err(Error::InexactDivision {
                dividend: self.clone(),
                divisor: divisor.clone(),
                remainder,
            });
        }
        Ok(Self::from_map(quotient).shift(p_low - d_low))
    }

    /// First exponent (ascending) at which `self` and `other` differ.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<i64> {
        let lo = match (self.min_exponent(), other.min_exponent()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return None,
        };
        let exps = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|e| **e >= lo);
        let mut candidates: Vec<i64> = exps.copied().collect();
        candidates.sort_unstable();
        candidates.dedup();
        candidates
            .into_iter()
            .find(|e| self.coeff(*e) != other.coeff(*e))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn cancellation_prunes_zero_terms() {
        let a = p(&[(-1, 1), (0, 1)]);
        let r = a + LaurentPoly::constant(-1);
        assert_eq!(r, LaurentPoly::q_pow(-1));
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn square_of_one_plus_q2() {
        let a = p(&[(0, 1), (2, 1)]);
        assert_eq!(&a * &a, p(&[(0, 1), (2, 2), (4, 1)]));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(
            p(&[(0, 1), (1, 1)]).substitute_power(2).unwrap(),
            p(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            p(&[(0, 1), (2, 1)]).substitute_power(-1).unwrap(),
            p(&[(0, 1), (-2, 1)])
        );
        assert_eq!(
            p(&[(-1, 1), (1, 1)]).substitute_power(3).unwrap(),
            p(&[(-3, 1), (3, 1)])
        );
        assert!(matches!(
            p(&[(1, 1)]).substitute_power(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn exact_division_examples() {
        let one_minus = LaurentPoly::one_minus_q_pow;
        assert_eq!(
            one_minus(4).divide_exact(&one_minus(2)).unwrap(),
            p(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            one_minus(6).divide_exact(&one_minus(2)).unwrap(),
            p(&[(0, 1), (2, 1), (4, 1)])
        );
        assert_eq!(
            one_minus(2).divide_exact(&p(&[(0, 1), (1, 1)])).unwrap(),
            p(&[(0, 1), (1, -1)])
        );
    }

    #[test]
    fn inexact_division_carries_remainder() {
        // Long division by hand: 1 + q^2 = (1 + q)(1 - q) + 2q^2 - ... from the
        // low end: quotient 1 - q, remainder 2q^2.
        let err = p(&[(0, 1), (2, 1)])
            .divide_exact(&p(&[(0, 1), (1, 1)]))
            .unwrap_err();
        match err {
            Error::InexactDivision { remainder, .. } => assert_eq!(remainder, p(&[(2, 2)])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn division_of_laurent_operands() {
        let num = p(&[(-3, 1), (1, -1)]);
        let den = p(&[(-1, 1), (1, -1)]);
        assert_eq!(num.divide_exact(&den).unwrap(), p(&[(-2, 1), (0, 1)]));
        assert!(num.divide_exact(&LaurentPoly::zero()).is_err());
        assert!(LaurentPoly::zero().divide_exact(&den).unwrap().is_zero());
    }

    #[test]
    fn division_requires_integral_quotient() {
        assert!(p(&[(0, 1)]).divide_exact(&p(&[(0, 2)])).is_err());
        assert_eq!(
            p(&[(0, 4), (1, 2)]).divide_exact(&p(&[(0, 2)])).unwrap(),
            p(&[(0, 2), (1, 1)])
        );
    }

    #[test]
    fn coefficient_queries() {
        let a = p(&[(0, 1), (2, 2), (4, 1)]);
        assert_eq!(a.coeff(2), BigInt::from(2));
        assert_eq!(a.coeff(3), BigInt::zero());
        assert!(a.is_palindromic(2));
        assert!(!a.is_palindromic(1));
        assert_eq!(
            p(&[(0, 1), (2, 1), (4, 2), (6, 1)]).support_parity(),
            Parity::Even
        );
        assert_eq!(p(&[(-1, 1), (3, 1)]).support_parity(), Parity::Odd);
        assert_eq!(p(&[(0, 1), (1, 1)]).support_parity(), Parity::Mixed);
        assert_eq!(LaurentPoly::zero().support_parity(), Parity::Empty);
        assert_eq!(a.eval_at_one(), BigInt::from(4));
    }

    #[test]
    fn first_difference_finds_lowest_mismatch() {
        let a = p(&[(0, 1), (2, 2), (5, 1)]);
        let b = p(&[(0, 1), (2, 2), (4, 1)]);
        assert_eq!(a.first_difference(&b), Some(4));
        assert_eq!(a.first_difference(&a), None);
    }
}
