//! q-series building blocks: Pochhammer products, Gaussian binomials,
//! Poincaré polynomials of Grassmannians and orthogonal Grassmannians, and
//! truncated power series in an auxiliary variable `x`.
//!
//! Parameters of the form `A = ±q^a` with base `q^step` are passed as plain
//! integer exponents, so every product stays inside [`LaurentPoly`].

mod series;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub use series::{poch_ratio_series, SeriesCoeff, TruncatedSeries};

/// `∏_{k=0}^{count-1} (1 ∓ q^{a + step·k})`.
///
/// With `negated = false` this is `(q^a; q^step)_count`; with
/// `negated = true` it is `(-q^a; q^step)_count`. The empty product is 1.
pub fn q_pochhammer(a: i64, step: i64, count: usize, negated: bool) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 0..count as i64 {
        let e = a + step * k;
        let factor = if negated {
            LaurentPoly::one_plus_q_pow(e)
        } else {
            LaurentPoly::one_minus_q_pow(e)
        };
        acc *= factor;
    }
    acc
}

/// Like [`q_pochhammer`] (non-negated), but rejects products containing a
/// vanishing factor `1 - q^0`. Used for Pochhammers that end up in a
/// denominator; `name` identifies the factor in the error.
pub fn denominator_pochhammer(name: &str, a: i64, step: i64, count: usize) -> Result<LaurentPoly> {
    if let Some(k) = vanishing_index(a, step, count) {
        return Err(Error::invalid(format!(
            "vanishing denominator factor in {name}: 1 - q^({a} + {step}*{k}) = 0"
        )));
    }
    Ok(q_pochhammer(a, step, count, false))
}

/// Index `k < count` with `a + step·k == 0`, if any.
pub fn vanishing_index(a: i64, step: i64, count: usize) -> Option<i64> {
    let count = count as i64;
    if step == 0 {
        return (a == 0 && count > 0).then_some(0);
    }
    if a % step != 0 {
        return None;
    }
    let k = -a / step;
    (0..count).contains(&k).then_some(k)
}

/// Gaussian binomial `[n choose k]` in the base `q^step`.
///
/// Returns 1 for `k = 0` and 0 for `k < 0` or `k > n`. Built as the exact
/// quotient `(Q^n; Q^{-1})_k / (Q; Q)_k` with `Q = q^step`, one factor pair at
/// a time so every intermediate quotient is itself a Gaussian binomial.
///
/// # Panics
///
/// Panics if `step` is zero.
pub fn q_binomial(n: i64, k: i64, step: i64) -> LaurentPoly {
    assert!(step != 0, "q_binomial base exponent must be nonzero");
    if k == 0 {
        return LaurentPoly::one();
    }
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for t in 1..=k {
        acc = (acc * LaurentPoly::one_minus_q_pow(step * (n - t + 1)))
            .divide_exact(&LaurentPoly::one_minus_q_pow(step * t))
            .expect("partial Gaussian binomial quotients are exact");
    }
    acc
}

/// Poincaré polynomial `g_{i,k}(q)` of the Grassmannian of `i`-planes in
/// `C^k`, which is `[k choose i]` in base `q^2`. Zero for `i < 0` or `i > k`.
pub fn grassmann_poincare(i: i64, k: i64) -> LaurentPoly {
    q_binomial(k, i, 2)
}

/// Poincaré polynomial `og_{j,2n}(q)` of the orthogonal Grassmannian of
/// isotropic `j`-planes in `C^{2n}`:
///
/// `(1 - q^{2n}) ∏_{k=n-j}^{n-1} (1 - q^{4k}) / ((1 - q^{2(n-j)}) ∏_{k=1}^{j} (1 - q^{2k}))`.
pub fn ogr_poincare(j: i64, n: i64) -> Result<LaurentPoly> {
    if !(0..n).contains(&j) {
        return Err(Error::invalid(format!(
            "og_(j,2n) requires 0 <= j <= n-1 (got j={j}, n={n})"
        )));
    }
    let numerator = LaurentPoly::one_minus_q_pow(2 * n)
        * (n - j..n)
            .map(|k| LaurentPoly::one_minus_q_pow(4 * k))
            .product::<LaurentPoly>();
    let denominator =
        LaurentPoly::one_minus_q_pow(2 * (n - j)) * q_pochhammer(2, 2, j as usize, false);
    numerator.divide_exact(&denominator).map_err(|e| match e {
        Error::InexactDivision { remainder, .. } => Error::internal(format!(
            "og_({j},{}) quotient is not exact (remainder {remainder})",
            2 * n
        )),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// Pascal recurrence in base `q^s`, independent of any division.
    fn pascal(n: i64, k: i64, s: i64) -> LaurentPoly {
        if k == 0 {
            return LaurentPoly::one();
        }
        if k < 0 || k > n {
            return LaurentPoly::zero();
        }
        pascal(n - 1, k - 1, s) + pascal(n - 1, k, s).shift(s * k)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(2, 2, 0, false), LaurentPoly::one());
        assert_eq!(
            q_pochhammer(2, 2, 2, false),
            p(&[(0, 1), (2, -1), (4, -1), (6, 1)])
        );
        assert_eq!(
            q_pochhammer(4, -2, 2, true),
            LaurentPoly::one_plus_q_pow(4) * LaurentPoly::one_plus_q_pow(2)
        );
        assert!(q_pochhammer(-4, 2, 3, false).is_zero());
    }

    #[test]
    fn vanishing_factor_detection() {
        assert_eq!(vanishing_index(-4, 2, 3), Some(2));
        assert_eq!(vanishing_index(-4, 2, 2), None);
        assert_eq!(vanishing_index(3, 2, 10), None);
        assert_eq!(vanishing_index(0, 5, 1), Some(0));
        let err = denominator_pochhammer("(AQ;Q)", 6, -2, 4).unwrap_err();
        assert!(err.to_string().contains("(AQ;Q)"));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(3, 1, 2), p(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(q_binomial(3, 1, 2), pascal(3, 1, 2));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0, 4), LaurentPoly::one());
        }
        assert!(q_binomial(4, -1, 4).is_zero());
        assert!(q_binomial(2, 3, 1).is_zero());
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        for s in [1, 2, 4, -2] {
            for n in 0..=12 {
                for k in 0..=n {
                    assert_eq!(q_binomial(n, k, s), pascal(n, k, s), "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(grassmann_poincare(1, 3), p(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(grassmann_poincare(0, 7), LaurentPoly::one());
        assert_eq!(grassmann_poincare(1, 2), p(&[(0, 1), (2, 1)]));
        assert!(grassmann_poincare(-1, 4).is_zero());
    }

    #[test]
    fn orthogonal_grassmannian_examples() {
        for n in 1..6 {
            assert_eq!(ogr_poincare(0, n).unwrap(), LaurentPoly::one());
        }
        assert_eq!(ogr_poincare(1, 2).unwrap(), p(&[(0, 1), (2, 2), (4, 1)]));
        let og26 = p(&[(0, 1), (2, 2), (4, 3), (6, 3), (8, 2), (10, 1)]);
        assert_eq!(ogr_poincare(2, 3).unwrap(), og26);
        assert_eq!(
            og26,
            p(&[(0, 1), (2, 1), (4, 1), (6, 1)]) * p(&[(0, 1), (2, 1), (4, 1)])
        );
        assert!(ogr_poincare(3, 3).is_err());
        assert!(ogr_poincare(-1, 3).is_err());
    }

    #[test]
    fn orthogonal_grassmannian_duality_and_degree() {
        for n in 1..=10 {
            for j in 0..n {
                let og = ogr_poincare(j, n).unwrap();
                let top = j * (4 * n - 3 * j - 1);
                assert_eq!(og.degree(), Some(top));
                assert!(og.is_palindromic(top / 2));
                assert!(og.has_nonnegative_coefficients());
                assert_ne!(og.support_parity(), crate::laurent::Parity::Odd);
                assert_ne!(og.support_parity(), crate::laurent::Parity::Mixed);
            }
        }
    }
}
