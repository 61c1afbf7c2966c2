use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::LaurentPoly;

/// A quotient `num / den` of Laurent polynomials, kept unreduced.
///
/// Equality is by cross-multiplication: `a/b == c/d` iff `a·d == c·b`.
#[derive(Clone)]
pub struct RationalPair {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalPair {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("rational pair with zero denominator"));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalPair) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Divides by a polynomial; fails on zero.
    pub fn div_poly(&self, d: &LaurentPoly) -> Result<Self> {
        Self::new(self.num.clone(), &self.den * d)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Exact quotient as a Laurent polynomial.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.divide_exact(&self.den)
    }

    /// Sums the terms over the given common denominator. Every term's
    /// denominator must divide `den` exactly.
    pub fn sum_over(
        den: LaurentPoly,
        terms: impl IntoIterator<Item = RationalPair>,
    ) -> Result<Self> {
        let mut num = LaurentPoly::zero();
        for t in terms {
            let cofactor = den.divide_exact(&t.den)?;
            num += &t.num * &cofactor;
        }
        Self::new(num, den)
    }

    /// The two cross products `(self.num · other.den, other.num · self.den)`.
    pub fn cross_products(&self, other: &RationalPair) -> (LaurentPoly, LaurentPoly) {
        (&self.num * &other.den, &other.num * &self.den)
    }
}

impl PartialEq for RationalPair {
    fn eq(&self, other: &Self) -> bool {
        let (l, r) = self.cross_products(other);
        l == r
    }
}

impl fmt::Debug for RationalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RationalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<LaurentPoly> for RationalPair {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

fn add_pairs(a: &RationalPair, b: &RationalPair, negate_b: bool) -> RationalPair {
    let b_num = if negate_b { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        return RationalPair {
            num: &a.num + &b_num,
            den: a.den.clone(),
        };
    }
    // Nested denominators are common in hypergeometric sums; reuse the
    // larger one when it is a multiple of the other.
    if let Ok(k) = a.den.divide_exact(&b.den) {
        return RationalPair {
            num: &a.num + &b_num * &k,
            den: a.den.clone(),
        };
    }
    if let Ok(k) = b.den.divide_exact(&a.den) {
        return RationalPair {
            num: &a.num * &k + &b_num,
            den: b.den.clone(),
        };
    }
    RationalPair {
        num: &a.num * &b.den + &b_num * &a.den,
        den: &a.den * &b.den,
    }
}

impl Add<&RationalPair> for &RationalPair {
    type Output = RationalPair;
    fn add(self, rhs: &RationalPair) -> RationalPair {
        add_pairs(self, rhs, false)
    }
}

impl Add for RationalPair {
    type Output = RationalPair;
    fn add(self, rhs: RationalPair) -> RationalPair {
        add_pairs(&self, &rhs, false)
    }
}

impl Sub<&RationalPair> for &RationalPair {
    type Output = RationalPair;
    fn sub(self, rhs: &RationalPair) -> RationalPair {
        add_pairs(self, rhs, true)
    }
}

impl Sub for RationalPair {
    type Output = RationalPair;
    fn sub(self, rhs: RationalPair) -> RationalPair {
        add_pairs(&self, &rhs, true)
    }
}

impl Mul<&RationalPair> for &RationalPair {
    type Output = RationalPair;
    fn mul(self, rhs: &RationalPair) -> RationalPair {
        RationalPair {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for RationalPair {
    type Output = RationalPair;
    fn mul(self, rhs: RationalPair) -> RationalPair {
        &self * &rhs
    }
}

impl Neg for RationalPair {
    type Output = RationalPair;
    fn neg(self) -> RationalPair {
        RationalPair {
            num: -self.num,
            den: self.den,
        }
    }
}

impl std::iter::Sum for RationalPair {
    fn sum<I: Iterator<Item = RationalPair>>(iter: I) -> Self {
        iter.fold(RationalPair::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalPair::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
        assert!(RationalPair::zero().recip().is_err());
    }

    #[test]
    fn equality_by_cross_multiplication() {
        // (1 - q^2) / (1 - q) == (1 + q) / 1 without any reduction.
        let a = RationalPair::new(
            LaurentPoly::one_minus_q_pow(2),
            LaurentPoly::one_minus_q_pow(1),
        )
        .unwrap();
        let b = RationalPair::from_poly(p(&[(0, 1), (1, 1)]));
        assert_eq!(a, b);
        assert_ne!(a, RationalPair::one());
    }

    #[test]
    fn field_operations() {
        let half_q = RationalPair::new(p(&[(1, 1)]), p(&[(0, 2)])).unwrap();
        let x = RationalPair::new(p(&[(0, 1)]), p(&[(0, 1), (1, 1)])).unwrap();
        let sum = &half_q + &x;
        let back = &sum - &x;
        assert_eq!(back, half_q);
        let prod = &x * &x.recip().unwrap();
        assert_eq!(prod, RationalPair::one());
        assert_eq!(half_q.checked_div(&half_q).unwrap(), RationalPair::one());
    }

    #[test]
    fn nested_denominators_stay_small() {
        let a = RationalPair::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(1)).unwrap();
        let d2 = LaurentPoly::one_minus_q_pow(1) * LaurentPoly::one_minus_q_pow(2);
        let b = RationalPair::new(LaurentPoly::one(), d2.clone()).unwrap();
        let s = &a + &b;
        assert_eq!(s.den(), &d2);
    }

    #[test]
    fn sum_over_common_denominator() {
        let d = LaurentPoly::one_minus_q_pow(1) * LaurentPoly::one_minus_q_pow(2);
        let terms = vec![
            RationalPair::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(1)).unwrap(),
            RationalPair::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(2)).unwrap(),
        ];
        let naive: RationalPair = terms.iter().cloned().sum();
        let shared = RationalPair::sum_over(d.clone(), terms).unwrap();
        assert_eq!(shared.den(), &d);
        assert_eq!(shared, naive);
        assert!(shared.to_poly().is_err());
    }
}
