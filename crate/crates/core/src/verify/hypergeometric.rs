//! The basic hypergeometric identities behind the closed forms for
//! `h_m^(n)`, checked at monomial parameters `A = q^a`, `Q = q^step`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalPair};
use crate::qseries::{
    denominator_pochhammer, poch_ratio_series, q_binomial, q_pochhammer, TruncatedSeries,
};

use super::{sorted, VerificationReport, Witness};

/// `(d2_exp, r_exp, base_step)` triples used by the quadratic
/// transformation suite.
pub const QUAD_TRANSFORM_GRID: &[(i64, i64, i64)] = &[
    (-6, -16, -2),
    (-4, -12, -2),
    (-8, -20, -2),
    (2, 5, 1),
    (3, 7, 1),
    (-4, 6, 2),
];

fn poch(a: i64, step: i64, count: i64) -> LaurentPoly {
    q_pochhammer(a, step, count as usize, false)
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `count` sparse Laurent polynomials with at most 6 terms, exponents in
/// `[-10, 10]` and coefficients in `[-9, 9]`, from a ChaCha8 stream.
pub fn random_alphas(count: u32, seed: u64) -> Vec<LaurentPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let terms = rng.gen_range(1..=6);
            LaurentPoly::from_terms(
                (0..terms)
                    .map(|_| (rng.gen_range(-10..=10i64), rng.gen_range(-9..=9i64)))
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Forward transform `β_k = Σ_j α_j / ((Q;Q)_{k-j} (AQ;Q)_{k+j})` followed
/// by the inverse transform; checks that every `α_m` comes back.
pub fn check_matrix_inversion(
    size: u32,
    a_exp: i64,
    q_exp: i64,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    if size == 0 {
        return Err(Error::invalid("matrix size must be at least 1"));
    }
    if q_exp == 0 {
        return Err(Error::invalid("q_exp must be nonzero"));
    }
    let s = i64::from(size);
    denominator_pochhammer("(AQ;Q)", a_exp + q_exp, q_exp, (2 * s - 2) as usize)?;

    let qq = |t: i64| poch(q_exp, q_exp, t);
    let aq = |t: i64| poch(a_exp + q_exp, q_exp, t);
    let outcome = || -> Result<Option<Witness>> {
        let alphas = random_alphas(size, seed);
        // β_k over the common denominator (Q;Q)_k (AQ;Q)_{2k}.
        let betas: Vec<RationalPair> = (0..s)
            .map(|k| {
                let num = (0..=k)
                    .map(|j| {
                        &alphas[j as usize]
                            * poch(q_exp * (k - j + 1), q_exp, j)
                            * poch(a_exp + q_exp * (1 + k + j), q_exp, k - j)
                    })
                    .sum();
                RationalPair::new(num, qq(k) * aq(2 * k))
            })
            .collect::<Result<_>>()?;
        for m in 0..s {
            // Common denominator (Q;Q)_m (AQ;Q)_{2m}.
            let mut num = LaurentPoly::zero();
            for (k, beta) in betas.iter().enumerate().take(m as usize + 1) {
                let k = k as i64;
                // (AQ;Q)_{m+k-1} (1 - A Q^{2m}); for m = k = 0 the length -1
                // Pochhammer is 1/(1 - A) and the product is 1.
                let pref = if m + k == 0 {
                    LaurentPoly::one()
                } else {
                    aq(m + k - 1) * LaurentPoly::one_minus_q_pow(a_exp + 2 * m * q_exp)
                };
                let d = m - k;
                let cofactor =
                    q_binomial(m, k, q_exp) * poch(a_exp + q_exp * (1 + 2 * k), q_exp, 2 * d);
                num += beta.num()
                    * &cofactor
                    * pref
                    * LaurentPoly::monomial(sign(m + k), q_exp * d * (d - 1) / 2);
            }
            let recovered = RationalPair::new(num, qq(m) * aq(2 * m))?;
            let expected = RationalPair::from_poly(alphas[m as usize].clone());
            if let Some(w) = Witness::rational(format!("m={m}"), &recovered, &expected) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    };
    let params = [
        ("size", s),
        ("a_exp", a_exp),
        ("q_exp", q_exp),
        ("seed", seed as i64),
    ];
    Ok(vec![VerificationReport::from_outcome(
        "matrix-inversion",
        &params,
        outcome(),
    )])
}

/// Checks that the three sums of the q-analogue of Bailey's transformation
/// agree, with `B = q^b`, `R = q^r`, `D² = q^{d2}` and base `q^bs`.
pub fn check_q_bailey(
    m: u32,
    b_exp: i64,
    r_exp: i64,
    d2_exp: i64,
    base_step: i64,
) -> Result<Vec<VerificationReport>> {
    if base_step == 0 {
        return Err(Error::invalid("base_step must be nonzero"));
    }
    let (m, b, r, d2, bs) = (i64::from(m), b_exp, r_exp, d2_exp, base_step);
    let half = m / 2;
    let r_q2 = denominator_pochhammer("(R;q^2)", r, 2 * bs, half as usize)?;
    let rq_q = denominator_pochhammer("(R/q;q)", r - bs, bs, m as usize)?;
    let inner_a = denominator_pochhammer("(q^(1-m)/D^2;q)", bs * (1 - m) - d2, bs, m as usize)?;
    let inner_b =
        denominator_pochhammer("(q^(3-2m)/R;q^2)", bs * (3 - 2 * m) - r, 2 * bs, m as usize)?;
    let q_m = poch(bs, bs, m);

    let outcome = || -> Result<Option<Witness>> {
        let first = RationalPair::sum_over(
            &q_m * &r_q2,
            (0..=half).map(|k| {
                let num = poch(d2, bs, 2 * k)
                    * poch(d2 + 2 * k * bs - b, bs, m - 2 * k)
                    * LaurentPoly::q_pow(bs * k * (2 * k - 2) + r * k + b * (m - 2 * k));
                let den = poch(2 * bs, 2 * bs, k) * poch(r, 2 * bs, k) * poch(bs, bs, m - 2 * k);
                RationalPair::new(num, den).expect("nonzero")
            }),
        )?;
        let second = RationalPair::sum_over(
            &q_m * &rq_q,
            (0..=m).map(|s| {
                let num = poch(d2, bs, m - s)
                    * poch(r - bs, 2 * bs, m - s)
                    * poch(-b, bs, s)
                    * LaurentPoly::q_pow(b * s);
                let den = poch(bs, bs, m - s) * poch(r - bs, bs, m - s) * poch(bs, bs, s);
                RationalPair::new(num, den).expect("nonzero")
            }),
        )?;
        let inner = RationalPair::sum_over(
            &inner_a * &inner_b * &q_m,
            (0..=m).map(|s| {
                let num = poch(-bs * m, bs, s)
                    * poch(bs * (2 - m) - r, bs, s)
                    * poch(-b, bs, s)
                    * LaurentPoly::q_pow(s * (b + bs * (2 - m) - d2) + bs * s * (s - 1) / 2);
                let den = poch(bs * (1 - m) - d2, bs, s)
                    * poch(bs * (3 - 2 * m) - r, 2 * bs, s)
                    * poch(bs, bs, s);
                RationalPair::new(num, den).expect("nonzero")
            }),
        )?;
        let prefactor = RationalPair::new(poch(d2, bs, m) * poch(r - bs, 2 * bs, m), &q_m * &rq_q)?;
        let third = &prefactor * &inner;
        Ok(Witness::rational("first=second", &first, &second)
            .or_else(|| Witness::rational("first=third", &first, &third))
            .or_else(|| Witness::rational("second=third", &second, &third)))
    };
    let params = [
        ("m", m),
        ("b_exp", b),
        ("r_exp", r),
        ("d2_exp", d2),
        ("base_step", bs),
    ];
    Ok(vec![VerificationReport::from_outcome(
        "q-bailey",
        &params,
        outcome(),
    )])
}

/// Compares both sides of the quadratic transformation as power series in
/// `x` up to `x^order`, with `D² = q^{d2}`, `R = q^r` and base `q^bs`.
///
/// The right side expands `(D² x q^{2k}; q)_∞ / (x; q)_∞` by
/// [`poch_ratio_series`], whose coefficients are Laurent polynomials only
/// when `bs` divides `d2`, so that is required.
pub fn check_quad_transform(
    order: u32,
    d2_exp: i64,
    r_exp: i64,
    base_step: i64,
) -> Result<Vec<VerificationReport>> {
    if order == 0 {
        return Err(Error::invalid("order must be at least 1"));
    }
    if base_step == 0 {
        return Err(Error::invalid("base_step must be nonzero"));
    }
    let (d2, r, bs) = (d2_exp, r_exp, base_step);
    if d2 % bs != 0 {
        return Err(Error::invalid(format!(
            "d2_exp must be a multiple of base_step (got d2_exp={d2}, base_step={bs})"
        )));
    }
    let n = i64::from(order);
    denominator_pochhammer("(R/q;q)", r - bs, bs, order as usize)?;
    denominator_pochhammer("(R;q^2)", r, 2 * bs, (n / 2) as usize)?;
    let ord = order as usize;

    let outcome = || -> Result<Option<Witness>> {
        let left = TruncatedSeries::new(
            (0..=n)
                .map(|j| {
                    RationalPair::new(
                        poch(d2, bs, j) * poch(r - bs, 2 * bs, j),
                        poch(bs, bs, j) * poch(r - bs, bs, j),
                    )
                })
                .collect::<Result<_>>()?,
        )?;
        let mut right = TruncatedSeries::<RationalPair>::zero(ord);
        for k in 0..=n / 2 {
            let c = RationalPair::new(
                poch(d2, bs, 2 * k) * LaurentPoly::q_pow(bs * k * (2 * k - 2) + r * k),
                poch(2 * bs, 2 * bs, k) * poch(r, 2 * bs, k),
            )?;
            let tail = poch_ratio_series(d2 + 2 * k * bs, bs, ord)?
                .map(|p| RationalPair::from_poly(p.clone()));
            right = right.add(&TruncatedSeries::monomial(c, 2 * k as usize, ord).mul(&tail)?)?;
        }
        Ok(left.first_difference(&right).and_then(|j| {
            Witness::rational(format!("x^{j}"), &left.coeffs()[j], &right.coeffs()[j])
        }))
    };
    let params = [
        ("order", n),
        ("d2_exp", d2),
        ("r_exp", r),
        ("base_step", bs),
    ];
    Ok(sorted(vec![VerificationReport::from_outcome(
        "quad-transform",
        &params,
        outcome(),
    )]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::bailey_specialization;

    fn pass(reports: Vec<VerificationReport>) {
        for r in reports {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn alphas_are_reproducible_and_bounded() {
        let a = random_alphas(8, 7);
        assert_eq!(a, random_alphas(8, 7));
        assert_ne!(a, random_alphas(8, 8));
        for p in &a {
            assert!(p.len() <= 6);
            for (e, c) in p.terms() {
                assert!((-10..=10).contains(&e));
                assert!(c.magnitude() <= &18u32.into());
            }
        }
    }

    #[test]
    fn inversion_roundtrips() {
        pass(check_matrix_inversion(1, 8, -2, 0).unwrap());
        pass(check_matrix_inversion(2, 8, -2, 1).unwrap());
        pass(check_matrix_inversion(4, 16, -2, 3).unwrap());
        pass(check_matrix_inversion(5, 1, 1, 3).unwrap());
        pass(check_matrix_inversion(3, 5, 3, 4).unwrap());
    }

    #[test]
    fn inversion_rejects_vanishing_factor() {
        // A = q^8, Q = q^-2: the factor 1 - A Q^4 is zero.
        let err = check_matrix_inversion(5, 8, -2, 0).unwrap_err();
        assert!(err.is_usage());
        assert!(err.to_string().contains("(AQ;Q)"), "{err}");
        assert!(check_matrix_inversion(0, 1, 1, 0).is_err());
        assert!(check_matrix_inversion(2, 1, 0, 0).is_err());
    }

    #[test]
    fn broken_inverse_is_caught() {
        // Sanity check on the harness: a wrong α must be reported.
        let w = Witness::rational(
            "m=0",
            &RationalPair::from_poly(LaurentPoly::one()),
            &RationalPair::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(2)).unwrap(),
        );
        assert!(w.is_some());
    }

    #[test]
    fn bailey_points() {
        pass(check_q_bailey(0, 3, 5, 7, 1).unwrap());
        let (b, r, d2, bs) = bailey_specialization(5, 3);
        pass(check_q_bailey(3, b, r, d2, bs).unwrap());
        for m in 0..=6 {
            pass(check_q_bailey(m, 3, 5, 7, 1).unwrap());
        }
    }

    #[test]
    fn bailey_rejects_vanishing_factor() {
        // n = 2, m = 2: q^{1-m}/D^2 = q^2 in base q^-2 hits 1 - q^0.
        let (b, r, d2, bs) = bailey_specialization(2, 2);
        let err = check_q_bailey(2, b, r, d2, bs).unwrap_err();
        assert!(err.is_usage(), "{err}");
    }

    #[test]
    fn quad_transform_grid() {
        for &(d2, r, bs) in QUAD_TRANSFORM_GRID {
            pass(check_quad_transform(6, d2, r, bs).unwrap());
        }
        assert!(check_quad_transform(4, 3, 5, 2).is_err());
        assert!(check_quad_transform(4, 6, -3, 3).is_err());
    }
}
