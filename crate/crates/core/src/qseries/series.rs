use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalPair};

/// Coefficient ring for [`TruncatedSeries`].
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl SeriesCoeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl SeriesCoeff for RationalPair {
    fn zero() -> Self {
        RationalPair::zero()
    }
    fn is_zero(&self) -> bool {
        RationalPair::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `Σ_{j=0}^{N} c_j x^j`, with every product truncated at `x^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C = LaurentPoly> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> TruncatedSeries<C> {
    /// Series of the given order from its `order + 1` coefficients.
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid(
                "a truncated series needs at least the x^0 coefficient",
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// `c · x^power`, or zero if `power > order`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> Option<&C> {
        self.coeffs.get(j)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::invalid(format!(
                "truncated series orders differ ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn map<D: SeriesCoeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Index of the first coefficient at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if self.order() != other.order() {
            return Some(self.order().min(other.order()) + 1);
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

/// Expansion of `(q^a x; q^step)_∞ / (x; q^step)_∞` to order `order`, via
/// the q-binomial theorem: the coefficient of `x^j` is
/// `(q^a; q^step)_j / (q^step; q^step)_j`, computed by exact division.
pub fn poch_ratio_series(a: i64, step: i64, order: usize) -> Result<TruncatedSeries<LaurentPoly>> {
    if step == 0 {
        return Err(Error::invalid(
            "poch_ratio_series requires a nonzero base exponent",
        ));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = LaurentPoly::one();
    coeffs.push(c.clone());
    for j in 1..=order as i64 {
        let grown = c * LaurentPoly::one_minus_q_pow(a + step * (j - 1));
        c = grown
            .divide_exact(&LaurentPoly::one_minus_q_pow(step * j))
            .map_err(|e| match e {
                Error::InexactDivision { remainder, .. } => Error::internal(format!(
                    "coefficient x^{j} of (q^{a} x; q^{step})_inf/(x; q^{step})_inf is not a Laurent polynomial (remainder {remainder})"
                )),
                other => other,
            })?;
        coeffs.push(c.clone());
    }
    TruncatedSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::q_pochhammer;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn equal_parameters_give_one() {
        let s = poch_ratio_series(0, -2, 6).unwrap();
        assert_eq!(s, TruncatedSeries::monomial(LaurentPoly::one(), 0, 6));
    }

    #[test]
    fn first_order_coefficient() {
        for (a, step) in [(4, 2), (-6, -2), (3, 1), (9, 3)] {
            let s = poch_ratio_series(a, step, 3).unwrap();
            let expected = LaurentPoly::one_minus_q_pow(a)
                .divide_exact(&LaurentPoly::one_minus_q_pow(step))
                .unwrap();
            assert_eq!(s.coeff(1), Some(&expected));
        }
    }

    #[test]
    fn second_order_coefficient_direct() {
        let s = poch_ratio_series(4, 2, 2).unwrap();
        let direct = (q_pochhammer(4, 2, 2, false))
            .divide_exact(&q_pochhammer(2, 2, 2, false))
            .unwrap();
        assert_eq!(direct, p(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(s.coeff(2), Some(&direct));
    }

    #[test]
    fn non_polynomial_coefficient_is_an_error() {
        assert!(poch_ratio_series(3, 2, 2).is_err());
        assert!(poch_ratio_series(1, 0, 2).is_err());
    }

    #[test]
    fn multiplication_truncates() {
        // (1 + x)^2 at order 1 is 1 + 2x.
        let one_plus_x =
            TruncatedSeries::new(vec![LaurentPoly::one(), LaurentPoly::one()]).unwrap();
        let sq = one_plus_x.mul(&one_plus_x).unwrap();
        assert_eq!(sq.coeffs(), &[LaurentPoly::one(), LaurentPoly::constant(2)]);
        let other = TruncatedSeries::<LaurentPoly>::zero(3);
        assert!(one_plus_x.mul(&other).is_err());
        assert!(one_plus_x.add(&other).is_err());
    }

    #[test]
    fn series_product_identity() {
        // (q^a x)_∞/(x)_∞ · (q^b q^a x)_∞/(q^a x)_∞ = (q^{a+b} x)_∞/(x)_∞,
        // where the second factor is the first series with x -> q^a x.
        let (a, b, step, order) = (4, 6, 2, 5);
        let left = poch_ratio_series(a, step, order).unwrap();
        let right = poch_ratio_series(b, step, order).unwrap();
        let rescaled = TruncatedSeries::new(
            right
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c.shift(a * j as i64))
                .collect(),
        )
        .unwrap();
        let product = left.mul(&rescaled).unwrap();
        assert_eq!(product, poch_ratio_series(a + b, step, order).unwrap());
    }
}
