//! Checks of the h-polynomials, multiplicities, stalks and Fano Betti
//! numbers over bounded ranges.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fano::{
    betti_via_multiplicities, binomial, cohomology_table, example_f1_betti, is_dual_and_connected,
    n_generating_poly, n_via_multiplicities,
};
use crate::kostka::{closed_b_terms, h_poly, p_center, p_poly, s_table, stalk_table, HMethod};
use crate::laurent::{LaurentPoly, Parity};
use crate::qseries::{ogr_poincare, q_binomial};

use super::{sorted, VerificationReport, Witness};

type Outcome = Result<Option<Witness>>;

fn report(identity: &str, params: &[(&str, i64)], outcome: Outcome) -> VerificationReport {
    VerificationReport::from_outcome(identity, params, outcome)
}

fn require(cond: bool, at: impl Into<String>, detail: impl FnOnce() -> String) -> Option<Witness> {
    (!cond).then(|| Witness::property(at, detail()))
}

fn h_pairs(nmax: u32) -> Vec<(u32, u32)> {
    (1..=nmax)
        .flat_map(|n| (0..n).map(move |m| (n, m)))
        .collect()
}

/// `og_{i,2n} = Σ_j q^{(i-j)(i-j+1)} h_j^(n) P_{i-j}^(n-j)` for `n <= nmax`,
/// `0 <= i <= n-1`. The h-polynomials come from the ballot-difference closed
/// form, so the check does not reuse the triangular solve that defines them.
pub fn check_inductive(nmax: u32) -> Result<Vec<VerificationReport>> {
    if nmax == 0 {
        return Err(Error::invalid("nmax must be at least 1"));
    }
    let reports = h_pairs(nmax)
        .into_par_iter()
        .map(|(n, i)| {
            let outcome = || -> Outcome {
                let og = ogr_poincare(i64::from(i), i64::from(n))?;
                let mut rhs = LaurentPoly::zero();
                for j in 0..=i {
                    let d = i64::from(i - j);
                    rhs +=
                        h_poly(n, j, HMethod::ClosedB)?.shift(d * (d + 1)) * p_poly(n - j, i - j)?;
                }
                Ok(Witness::poly("og=sum", &og, &rhs))
            };
            report("inductive", &[("n", n.into()), ("i", i.into())], outcome())
        })
        .collect();
    Ok(sorted(reports))
}

fn h_agreement(n: u32, m: u32) -> Outcome {
    let reference = h_poly(n, m, HMethod::Recursive)?;
    for method in &HMethod::ALL[1..] {
        let h = h_poly(n, m, *method)?;
        if let Some(w) = Witness::poly(format!("recursive={method}"), &reference, &h) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn h_shape(n: u32, m: u32) -> Outcome {
    let h = h_poly(n, m, HMethod::Recursive)?;
    let (n, m) = (i64::from(n), i64::from(m));
    let degree = m * (2 * n - m - 1);
    Ok(
        require(h.has_nonnegative_coefficients(), "coefficients", || {
            format!("negative coefficient in {h}")
        })
        .or_else(|| {
            require(matches!(h.support_parity(), Parity::Even), "parity", || {
                format!("odd powers in {h}")
            })
        })
        .or_else(|| {
            require(
                h.is_polynomial() && h.degree() == Some(degree),
                "degree",
                || format!("expected degree {degree}, got {h}"),
            )
        })
        .or_else(|| {
            require(m == 0 || degree < m * (2 * n - m), "degree-bound", || {
                format!("degree {degree} exceeds j(2n-j)-1")
            })
        }),
    )
}

fn closed_b_summands(n: u32, m: u32) -> Outcome {
    let top = i64::from(m) * (2 * i64::from(n) - i64::from(m) - 1);
    for (k, term) in closed_b_terms(n, m)?.iter().enumerate() {
        let want = top - 2 * k as i64;
        let ok = term.has_nonnegative_coefficients() && term.degree() == Some(want);
        if let Some(w) = require(ok, format!("k={k}"), || {
            format!("expected degree {want}, got {term}")
        }) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `h_m^(n) = (1 + q^{2n-2}) h_{m-1}^(n-1)`, plus a `q^4`-ballot difference
/// when `m` is even.
fn h_recurrence(n: u32, m: u32) -> Outcome {
    if m == 0 {
        return Ok(require(
            h_poly(n, 0, HMethod::Recursive)?.is_one(),
            "m=0",
            || "h_0 != 1".into(),
        ));
    }
    let h = h_poly(n, m, HMethod::Recursive)?;
    let mut rhs = LaurentPoly::one_plus_q_pow(2 * i64::from(n) - 2)
        * h_poly(n - 1, m - 1, HMethod::Recursive)?;
    if m.is_multiple_of(2) {
        let (big, k) = (i64::from(n) - 1, i64::from(m / 2));
        rhs += q_binomial(big, k, 4) - q_binomial(big, k - 1, 4);
    }
    Ok(Witness::poly("recurrence", &h, &rhs))
}

fn p_shape(n: u32, j: u32) -> Outcome {
    let p = p_poly(n, j)?;
    let center = p_center(n, j);
    Ok(require(p.is_palindromic(center), "palindromy", || {
        format!("{p} not symmetric about {center}")
    })
    .or_else(|| {
        require(
            p.has_nonnegative_coefficients() && p.degree() == Some(2 * center),
            "degree",
            || format!("expected degree {}, got {p}", 2 * center),
        )
    }))
}

fn s_invariants(n: u32, i: u32) -> Outcome {
    let t = s_table(n, i)?;
    Ok(require(t.satisfies_invariants(), "table", || {
        format!("{t:?}")
    }))
}

/// Every stalk table for `n <= nmax` vanishes in degrees `k ≡ i-1 (mod 2)`.
pub fn check_stalk_parity(nmax: u32) -> Result<Vec<VerificationReport>> {
    let triples: Vec<(u32, u32, u32)> = (1..=nmax)
        .flat_map(|n| (0..n).flat_map(move |i| (0..=i).map(move |j| (n, i, j))))
        .collect();
    let reports = triples
        .into_par_iter()
        .map(|(n, i, j)| {
            let outcome = || -> Outcome {
                let t = stalk_table(n, i, j)?;
                Ok(require(t.vanishes_in_forbidden_parity(), "dims", || {
                    format!("{:?}", t.dims)
                }))
            };
            report(
                "stalk-parity",
                &[("n", n.into()), ("i", i.into()), ("j", j.into())],
                outcome(),
            )
        })
        .collect();
    Ok(sorted(reports))
}

/// All h-polynomial, multiplicity and stalk invariants for `n <= nmax`.
pub fn check_h_suite(nmax: u32) -> Result<Vec<VerificationReport>> {
    if nmax < 1 {
        return Err(Error::invalid("nmax must be at least 1"));
    }
    type Check = fn(u32, u32) -> Outcome;
    let checks: [(&str, Check); 6] = [
        ("h-agreement", h_agreement),
        ("h-shape", h_shape),
        ("h-closed-b-summands", closed_b_summands),
        ("h-recurrence", h_recurrence),
        ("p-shape", p_shape),
        ("s-table", s_invariants),
    ];
    let jobs: Vec<(usize, u32, u32)> = h_pairs(nmax)
        .into_iter()
        .flat_map(|(n, m)| (0..checks.len()).map(move |c| (c, n, m)))
        .collect();
    let mut reports: Vec<VerificationReport> = jobs
        .into_par_iter()
        .map(|(c, n, m)| {
            let (name, check) = checks[c];
            let index = match name {
                "p-shape" => "j",
                "s-table" => "i",
                _ => "m",
            };
            report(name, &[("n", n.into()), (index, m.into())], check(n, m))
        })
        .collect();
    reports.extend(check_inductive(nmax)?);
    reports.extend(check_stalk_parity(nmax)?);
    Ok(sorted(reports))
}

/// `n_via_multiplicities(g, ..)` equals the generating-polynomial
/// coefficient for the two smallest admissible genera `g` and `g + 1`.
pub fn check_genus_independence(
    imax: u32,
    jmax: u32,
    kmax: i64,
) -> Result<Vec<VerificationReport>> {
    let pairs: Vec<(u32, u32)> = (2..=imax)
        .flat_map(|i| (i - 1..=jmax).map(move |j| (i, j)))
        .collect();
    let reports = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let outcome = || -> Outcome {
                let gen = n_generating_poly(i, j)?;
                let g0 = i.max(j);
                for k in -kmax..=kmax {
                    let expected = gen.coeff(k);
                    for g in [g0, g0 + 1] {
                        let got = n_via_multiplicities(g, i, j, k)?;
                        if expected != got.into() {
                            let at = format!("g={g},k={k}");
                            return Ok(Witness::poly(
                                at,
                                &LaurentPoly::constant(expected),
                                &LaurentPoly::constant(got),
                            ));
                        }
                    }
                }
                Ok(None)
            };
            report(
                "genus-independence",
                &[("i", i.into()), ("j", j.into()), ("kmax", kmax)],
                outcome(),
            )
        })
        .collect();
    Ok(sorted(reports))
}

fn binomial_row(g: u32) -> Result<Vec<u64>> {
    let top = 2 * u64::from(g);
    (0..=top as i64).map(|k| binomial(top, k)).collect()
}

/// Fano Betti numbers for `g <= gmax`: the two routes, Poincaré duality,
/// the Jacobian and the closed formula for lines, and genus independence.
pub fn check_fano_suite(gmax: u32) -> Result<Vec<VerificationReport>> {
    if gmax < 1 {
        return Err(Error::invalid("gmax must be at least 1"));
    }
    let mut reports = Vec::new();
    for g in 1..=gmax {
        let outcome = || -> Outcome {
            let b = betti_via_multiplicities(g, g - 1)?;
            Ok(Witness::vector("binomial-row", &b, &binomial_row(g)?))
        };
        reports.push(report("fano-jacobian", &[("g", g.into())], outcome()));
        for i in 2..=g {
            let outcome = || -> Outcome {
                let table = cohomology_table(g, i)?;
                let via_s = betti_via_multiplicities(g, g - i)?;
                Ok(Witness::vector("routes", &table.betti, &via_s).or_else(|| {
                    require(is_dual_and_connected(&table.betti), "duality", || {
                        format!("{:?}", table.betti)
                    })
                }))
            };
            reports.push(report(
                "fano-routes",
                &[("g", g.into()), ("i", i.into())],
                outcome(),
            ));
        }
    }
    for n in 4..=gmax + 1 {
        let outcome = || -> Outcome {
            let closed = example_f1_betti(n)?;
            let g = n - 1;
            Ok(
                Witness::vector("multiplicities", &closed, &betti_via_multiplicities(g, 1)?).or(
                    Witness::vector("table", &closed, &cohomology_table(g, g - 1)?.betti),
                ),
            )
        };
        reports.push(report("fano-lines", &[("n", n.into())], outcome()));
    }
    reports.extend(check_genus_independence(gmax.min(5), gmax.min(6), 20)?);
    Ok(sorted(reports))
}
