//! Cohomology of the Fano varieties `F_k` of projective `k`-planes in a
//! smooth intersection of two quadrics in `P^{2g+1}`.
//!
//! Two independent routes are provided:
//!
//! * the generating polynomial route: for `i >= 2`, `H^{dim-k}(F_{g-i})`
//!   decomposes as `⊕_j N_i(k,j) Λ^{g-j} H^1(C)` where `N_i(k,j)` is a
//!   coefficient of [`n_generating_poly`];
//! * the multiplicity route: `H^k(F_{i-1}) = ⊕_j s^i_{j,|d_i-k|} W_j` with
//!   `dim W_j = C(2n-2, j) - C(2n-2, j-2)` and `n = g + 1`.
//!
//! [`cohomology_table`] builds the first and cross-checks every entry
//! against the second. The Jacobian case `k = g - 1` (`i = 1`) is only
//! available through the multiplicity route. Tables never look at
//! `j > g`.
//!
//! The public API speaks `(g, kplane)` or `(g, i)` with `kplane = g - i`;
//! the internal rank and orbit index `(n, i') = (g + 1, kplane + 1)` come
//! from [`ambient_indices`] only.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kostka::s_number;
use crate::laurent::LaurentPoly;
use crate::qseries::q_pochhammer;

/// Maps genus and plane dimension to `(n, i') = (g + 1, kplane + 1)`.
pub fn ambient_indices(g: u32, kplane: u32) -> (u32, u32) {
    (g + 1, kplane + 1)
}

/// `dim F_{g-i} = (g - i + 1)(2i - 1)`.
pub fn fano_dim(g: u32, i: u32) -> u64 {
    u64::from(g - i + 1) * (2 * u64::from(i) - 1)
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Result<u64> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * u128::from(n - t) / u128::from(t + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::internal(format!("binomial({n}, {k}) overflows u64")));
        }
    }
    Ok(acc as u64)
}

/// `q^{-(j-i+1)(2i-1)} (1 - q^{4j}) ∏_{l=j-i+2}^{i+j-2} (1 - q^{2l}) / ∏_{l=1}^{2i-2} (1 - q^{2l})`,
/// whose coefficient of `q^k` is `N_i(k, j)`.
pub fn n_generating_poly(i: u32, j: u32) -> Result<LaurentPoly> {
    if i < 2 || j + 1 < i {
        return Err(Error::invalid(format!(
            "N_i(k,j) is defined for i >= 2 and j >= i-1 (got i={i}, j={j})"
        )));
    }
    let (i, j) = (i64::from(i), i64::from(j));
    let numerator = LaurentPoly::one_minus_q_pow(4 * j)
        * (j - i + 2..=i + j - 2)
            .map(|l| LaurentPoly::one_minus_q_pow(2 * l))
            .product::<LaurentPoly>();
    let denominator = q_pochhammer(2, 2, (2 * i - 2) as usize, false);
    let quotient = numerator.divide_exact(&denominator).map_err(|e| match e {
        Error::InexactDivision { remainder, .. } => Error::internal(format!(
            "generating polynomial for N_{i}(k,{j}) is not exact (remainder {remainder})"
        )),
        other => other,
    })?;
    Ok(quotient.shift(-(j - i + 1) * (2 * i - 1)))
}

fn check_n_range(g: u32, i: u32, j: u32) -> Result<()> {
    if g < 1 || i < 2 || i > g {
        return Err(Error::invalid(format!(
            "N_i(k,j) requires g >= 1 and 2 <= i <= g (got g={g}, i={i})"
        )));
    }
    if j + 1 < i || j > g {
        return Err(Error::invalid(format!(
            "N_i(k,j) requires i-1 <= j <= g (got g={g}, i={i}, j={j})"
        )));
    }
    Ok(())
}

/// `N_i(k,j) = (s^{j-i+1}_{0,|k|})_{j+1} - (s^{j-i-1}_{0,|k|})_{j-1}`, the
/// second term being zero when `j - i - 1 < 0`.
pub fn n_via_multiplicities(g: u32, i: u32, j: u32, k: i64) -> Result<i64> {
    check_n_range(g, i, j)?;
    let kk = k.unsigned_abs();
    let first = s_number(j + 1, j + 1 - i, 0, kk)?;
    let second = if j > i {
        s_number(j - 1, j - 1 - i, 0, kk)?
    } else {
        0
    };
    Ok(first as i64 - second as i64)
}

/// The decomposition of `H^*(F_{g-i})` into exterior powers of `H^1(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub g: u32,
    pub i: u32,
    pub dim: u64,
    /// Nonzero `(k, j) -> N_i(k, j)`, `k` the dual-indexed degree `dim - deg`.
    pub ncoeffs: BTreeMap<(i64, u32), u64>,
    /// `b_0, ..., b_{2 dim}`.
    pub betti: Vec<u64>,
}

impl CohomologyTable {
    pub fn n(&self, k: i64, j: u32) -> u64 {
        self.ncoeffs.get(&(k, j)).copied().unwrap_or(0)
    }
}

/// Builds the table for `F_{g-i}`, `2 <= i <= g`, from the generating
/// polynomials and cross-checks every `N_i(k,j)` against the multiplicity
/// formula.
pub fn cohomology_table(g: u32, i: u32) -> Result<CohomologyTable> {
    if g < 1 || i < 2 || i > g {
        return Err(Error::invalid(format!(
            "cohomology_table requires 2 <= i <= g (got g={g}, i={i}); use betti_via_multiplicities for the Jacobian"
        )));
    }
    let dim = fano_dim(g, i);
    let span = dim as i64;
    let mut ncoeffs = BTreeMap::new();
    let mut betti = vec![0u64; 2 * dim as usize + 1];
    for j in i - 1..=g {
        let gen = n_generating_poly(i, j)?;
        if gen.min_exponent().is_some_and(|e| e < -span)
            || gen.max_exponent().is_some_and(|e| e > span)
        {
            return Err(Error::internal(format!(
                "N_{i}(k,{j}) is supported outside |k| <= {dim}: {gen}"
            )));
        }
        let wedge = binomial(2 * u64::from(g), i64::from(g) - i64::from(j))?;
        for k in -span..=span {
            let c = gen.coeff(k);
            let via_s = n_via_multiplicities(g, i, j, k)?;
            if c != via_s.into() {
                return Err(Error::IdentityViolation {
                    identity: format!(
                        "N_{i}({k},{j}) for g={g}: generating polynomial vs multiplicities"
                    ),
                    left: LaurentPoly::constant(c),
                    right: LaurentPoly::constant(via_s),
                });
            }
            let c = c
                .to_u64()
                .ok_or_else(|| Error::internal(format!("N_{i}({k},{j}) = {c} is negative")))?;
            if c == 0 {
                continue;
            }
            ncoeffs.insert((k, j), c);
            let slot = &mut betti[(span - k) as usize];
            *slot = c
                .checked_mul(wedge)
                .and_then(|x| slot.checked_add(x))
                .ok_or_else(|| Error::internal("Betti number overflows u64"))?;
        }
    }
    Ok(CohomologyTable {
        g,
        i,
        dim,
        ncoeffs,
        betti,
    })
}

/// `dim W_j = C(2n-2, j) - C(2n-2, j-2)`.
pub fn w_dim(n: u32, j: u32) -> Result<u64> {
    let top = 2 * u64::from(n) - 2;
    let j = i64::from(j);
    Ok(binomial(top, j)? - binomial(top, j - 2)?)
}

/// Betti numbers `b_0..b_{2d}` of `F_kplane`, `d = i'(2n-2i'-1)`, from
/// `b_k = Σ_j s^{i'}_{j,|d-k|} dim W_j`.
pub fn betti_via_multiplicities(g: u32, kplane: u32) -> Result<Vec<u64>> {
    if g < 1 || kplane >= g {
        return Err(Error::invalid(format!(
            "betti requires g >= 1 and 0 <= kplane <= g-1 (got g={g}, kplane={kplane})"
        )));
    }
    let (n, i) = ambient_indices(g, kplane);
    let d = i64::from(i) * (2 * i64::from(n) - 2 * i64::from(i) - 1);
    let dims: Vec<u64> = (0..=i).map(|j| w_dim(n, j)).collect::<Result<_>>()?;
    (0..=2 * d)
        .map(|k| {
            let shift = (d - k).unsigned_abs();
            (0..=i).try_fold(0u64, |acc, j| {
                let s = s_number(n, i, j, shift)?;
                s.checked_mul(dims[j as usize])
                    .and_then(|x| acc.checked_add(x))
                    .ok_or_else(|| Error::internal("Betti number overflows u64"))
            })
        })
        .collect()
}

/// Closed-form Betti numbers of the Fano variety of lines in `P^{2n-1}`:
/// `b_{2m} = [(m+2)/2]` and `b_{2m+1} = 2(n-1)` (for `n-3 <= m`) below the
/// middle degree `4n-10`, `b_{4n-10} = (n-3) + C(2n-2, 2)`, then duality.
pub fn example_f1_betti(n: u32) -> Result<Vec<u64>> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "the lines example needs n >= 4 (got n={n})"
        )));
    }
    let n = u64::from(n);
    let middle = 4 * n - 10;
    let mut betti = vec![0u64; (2 * middle + 1) as usize];
    for m in 0..=2 * n - 6 {
        betti[(2 * m) as usize] = (m + 2) / 2;
        if m + 3 >= n {
            betti[(2 * m + 1) as usize] = 2 * (n - 1);
        }
    }
    betti[middle as usize] = (n - 3) + binomial(2 * n - 2, 2)?;
    for k in 0..middle as usize {
        betti[2 * middle as usize - k] = betti[k];
    }
    Ok(betti)
}

/// `Σ b_k q^k`.
pub fn poincare_polynomial(betti: &[u64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(betti)
}

/// `b_k = b_{len-1-k}` and `b_0 = b_top = 1`.
pub fn is_dual_and_connected(betti: &[u64]) -> bool {
    let Some(top) = betti.len().checked_sub(1) else {
        return false;
    };
    betti[0] == 1 && poincare_polynomial(betti).is_palindromic(top as i64 / 2) && top % 2 == 0
}
