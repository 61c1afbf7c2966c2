use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalPair};
use crate::qseries::{ogr_poincare, q_binomial, q_pochhammer};

use super::check_h_range;

/// `(-q^{2n-2}; q^{-2})_count`.
fn neg_pochhammer(n: i64, count: i64) -> LaurentPoly {
    q_pochhammer(2 * n - 2, -2, count as usize, true)
}

/// `[N, k]_{q^4} - [N, k-1]_{q^4}`.
fn ballot_difference(big_n: i64, k: i64) -> LaurentPoly {
    q_binomial(big_n, k, 4) - q_binomial(big_n, k - 1, 4)
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Solves the unit-triangular system for `h_0..h_{n-1}`. The diagonal
/// coefficient is `q^0 [2n-1-2k, 0]_{q^2} = 1`, so no division is needed.
pub(super) fn recursive_table(n: u32) -> Result<Vec<LaurentPoly>> {
    let n = n as i64;
    let mut h: Vec<LaurentPoly> = Vec::with_capacity(n as usize);
    for k in 0..n {
        let mut rest = ogr_poincare(k, n)?;
        for (j, hj) in h.iter().enumerate() {
            let j = j as i64;
            let d = k - j;
            let weight = q_binomial(2 * n - 1 - k - j, d, 2).shift(d * (d + 1));
            rest -= hj * &weight;
        }
        h.push(rest);
    }
    Ok(h)
}

pub(super) fn closed_a(n: u32, m: u32) -> Result<LaurentPoly> {
    let (n, m) = (n as i64, m as i64);
    let mut total = LaurentPoly::zero();
    for k in 0..=m / 2 {
        let numerator = neg_pochhammer(n, m - 2 * k)
            * q_binomial(n - m + 2 * k, k, 4)
            * LaurentPoly::one_minus_q_pow(4 * (n - m));
        let term = numerator
            .shift(4 * k)
            .divide_exact(&LaurentPoly::one_minus_q_pow(4 * (n - m + 2 * k)))?;
        total += term;
    }
    Ok(total)
}

/// The summands of the ballot-difference closed form, in order of `k`.
/// The `k`-th summand has degree `m(2n-m-1) - 2k` and nonnegative
/// coefficients.
pub fn closed_b_terms(n: u32, m: u32) -> Result<Vec<LaurentPoly>> {
    check_h_range(n, m)?;
    let (n, m) = (n as i64, m as i64);
    Ok((0..=m / 2)
        .map(|k| neg_pochhammer(n, m - 2 * k) * ballot_difference(n - m + 2 * k - 1, k))
        .collect())
}

pub(super) fn closed_b(n: u32, m: u32) -> LaurentPoly {
    closed_b_terms(n, m)
        .expect("range checked by caller")
        .into_iter()
        .sum()
}

/// `C_m = (q^{4n-2}; q^{-2})_{m-1} / (q^2; q^2)_m · (1 - q^{4n-4m}) q^{2m} (-1)^m`.
///
/// For `m = 0` the Pochhammer has length `-1`; its reciprocal-convention
/// value `1/(1 - q^{4n})` cancels against `1 - q^{4n}`, leaving `C_0 = 1`.
fn inversion_prefactor(n: i64, m: i64) -> Result<RationalPair> {
    if m == 0 {
        return Ok(RationalPair::one());
    }
    let num = q_pochhammer(4 * n - 2, -2, (m - 1) as usize, false)
        * LaurentPoly::one_minus_q_pow(4 * n - 4 * m)
        * LaurentPoly::monomial(sign(m), 2 * m);
    RationalPair::new(num, q_pochhammer(2, 2, m as usize, false))
}

pub(super) fn inversion(n: u32, m: u32) -> Result<LaurentPoly> {
    let (n, m) = (n as i64, m as i64);
    let mut sum = RationalPair::zero();
    for k in 0..=m {
        let ku = k as usize;
        let first =
            q_pochhammer(2 * m, -2, ku, false).divide_exact(&q_pochhammer(-2, -2, ku, false))?;
        let num = first
            * q_pochhammer(4 * n - 2 * m, -2, ku, false)
            * LaurentPoly::one_minus_q_pow(2 * n)
            * LaurentPoly::q_pow(-k * k - 3 * k);
        let den =
            q_pochhammer(4 * n - 2, -4, ku, false) * LaurentPoly::one_minus_q_pow(2 * (n - k));
        sum = &sum + &RationalPair::new(num, den)?;
    }
    let h = (&inversion_prefactor(n, m)? * &sum).to_poly()?;
    if !h.is_polynomial() {
        return Err(Error::internal(format!(
            "matrix-inversion sum for h_{m}^({n}) has negative powers: {h}"
        )));
    }
    Ok(h)
}

pub(super) fn first_positive(n: u32, m: u32) -> Result<LaurentPoly> {
    let (n, m) = (n as i64, m as i64);
    let mut sum = RationalPair::zero();
    for k in 0..=m / 2 {
        let ku = k as usize;
        let num = q_pochhammer(2 * n - 2 * m, 2, 2 * ku, false) * LaurentPoly::q_pow(4 * k);
        let den = q_pochhammer(4 * n + 4 - 4 * m, 4, ku, false) * q_pochhammer(4, 4, ku, false);
        sum = &sum + &RationalPair::new(num, den)?;
    }
    sum.mul_poly(&neg_pochhammer(n, m)).to_poly()
}

pub(super) fn recurrence(n: u32, m: u32) -> LaurentPoly {
    let (n, m) = (n as i64, m as i64);
    let mut h = LaurentPoly::one();
    for t in 1..=m {
        let rank = n - m + t;
        h = LaurentPoly::one_plus_q_pow(2 * rank - 2) * h;
        if t % 2 == 0 {
            h += ballot_difference(rank - 1, t / 2);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_methods_agree_small() {
        for n in 1..=7u32 {
            let table = recursive_table(n).unwrap();
            for m in 0..n {
                let reference = &table[m as usize];
                assert_eq!(&closed_a(n, m).unwrap(), reference, "closed-a n={n} m={m}");
                assert_eq!(&closed_b(n, m), reference, "closed-b n={n} m={m}");
                assert_eq!(
                    &inversion(n, m).unwrap(),
                    reference,
                    "inversion n={n} m={m}"
                );
                assert_eq!(
                    &first_positive(n, m).unwrap(),
                    reference,
                    "first-positive n={n} m={m}"
                );
                assert_eq!(&recurrence(n, m), reference, "recurrence n={n} m={m}");
            }
        }
    }

    #[test]
    fn prefactor_at_m_one() {
        // C_1 = -q^2 (1 - q^{4n-4}) / (1 - q^2).
        let c = inversion_prefactor(2, 1).unwrap();
        let expected = RationalPair::new(
            -LaurentPoly::from_terms([(2, 1), (4, 1)]),
            LaurentPoly::one(),
        )
        .unwrap();
        assert_eq!(c, expected);
    }
}
