//! Stalk polynomials `h_m^(n)(q)` of IC sheaves on the order-two nilpotent
//! orbits of the symmetric pair `(SL(2n), SO(2n))`, the multiplicity
//! polynomials `P_j^(n)(q)`, and the numbers `s^i_jk` read off from them.
//!
//! `h_m^(n)` can be computed six ways (see [`HMethod`]); they agree on the
//! whole domain `0 <= m <= n-1`, and [`h_poly_checked`] enforces that.
//!
//! The multiplicity polynomial is `P_j^(n) = (-1)^j q^c Σ_k (-1)^k s^j_{0k} q^{±k}`
//! with `c = j(2n-2j-1)`. The `q^{±k}` is read as one `q^{+k}` term and one
//! `q^{-k}` term for each `k >= 1`, with `k = 0` counted once, so `s^j_{0k}`
//! is the coefficient of `q^{c+k}` in `P_j^(n)`.

mod memo;
mod methods;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qseries::q_binomial;

use memo::Memo;

pub use methods::closed_b_terms;

/// The independent routes to `h_m^(n)(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HMethod {
    /// Back-substitution in the unit-triangular system
    /// `og_{k,2n} = Σ_j q^{(k-j)(k-j+1)} h_j [2n-1-k-j, k-j]_{q^2}`.
    Recursive,
    /// Sum of `(-q^{2n-2}; q^{-2})_{m-2k} [n-m+2k, k]_{q^4} (1-q^{4(n-m)})/(1-q^{4(n-m+2k)}) q^{4k}`.
    ClosedA,
    /// Sum of `(-q^{2n-2}; q^{-2})_{m-2k} ([n-m+2k-1, k]_{q^4} - [n-m+2k-1, k-1]_{q^4})`.
    ClosedB,
    /// The matrix-inversion sum, evaluated as rational functions.
    Inversion,
    /// `(-q^{2n-2}; q^{-2})_m Σ_k (q^{2n-2m}; q^2)_{2k} / ((q^{4n+4-4m}; q^4)_k (q^4; q^4)_k) q^{4k}`.
    FirstPositive,
    /// `h_m^(n) = (1 + q^{2n-2}) h_{m-1}^(n-1)`, plus a `q^4`-binomial
    /// difference when `m` is even, starting from `h_0 = 1`.
    Recurrence,
}

impl HMethod {
    pub const ALL: [HMethod; 6] = [
        HMethod::Recursive,
        HMethod::ClosedA,
        HMethod::ClosedB,
        HMethod::Inversion,
        HMethod::FirstPositive,
        HMethod::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HMethod::Recursive => "recursive",
            HMethod::ClosedA => "closed-a",
            HMethod::ClosedB => "closed-b",
            HMethod::Inversion => "inversion",
            HMethod::FirstPositive => "first-positive",
            HMethod::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for HMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown method `{s}`")))
    }
}

pub(crate) fn check_h_range(n: u32, m: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid(format!("n must be >= 1 (got n={n})")));
    }
    if m >= n {
        return Err(Error::invalid(format!(
            "m must satisfy 0 <= m <= n-1 (got n={n}, m={m})"
        )));
    }
    Ok(())
}

static H_TABLES: Memo<u32, Arc<Vec<LaurentPoly>>> = Memo::new();
static P_TABLES: Memo<u32, Arc<Vec<LaurentPoly>>> = Memo::new();

/// `[h_0^(n), ..., h_{n-1}^(n)]` by the recursive method, cached per `n`.
pub fn h_table(n: u32) -> Result<Arc<Vec<LaurentPoly>>> {
    check_h_range(n, 0)?;
    H_TABLES.get_or_try_insert(n, || methods::recursive_table(n).map(Arc::new))
}

/// `[P_0^(n), ..., P_{n-1}^(n)]`, cached per `n`.
pub fn p_table(n: u32) -> Result<Arc<Vec<LaurentPoly>>> {
    check_h_range(n, 0)?;
    P_TABLES.get_or_try_insert(n, || {
        Ok(Arc::new((0..n).map(|j| p_poly_uncached(n, j)).collect()))
    })
}

/// `h_m^(n)(q)` by the chosen method.
///
/// The result is always a genuine polynomial; methods that pass through
/// rational functions report an error if the final quotient is not exact or
/// has negative powers of `q`.
pub fn h_poly(n: u32, m: u32, method: HMethod) -> Result<LaurentPoly> {
    check_h_range(n, m)?;
    let h = match method {
        HMethod::Recursive => h_table(n)?[m as usize].clone(),
        HMethod::ClosedA => methods::closed_a(n, m)?,
        HMethod::ClosedB => methods::closed_b(n, m),
        HMethod::Inversion => methods::inversion(n, m)?,
        HMethod::FirstPositive => methods::first_positive(n, m)?,
        HMethod::Recurrence => methods::recurrence(n, m),
    };
    if !h.is_polynomial() {
        return Err(Error::internal(format!(
            "{method} produced a non-polynomial h_{m}^({n}) = {h}"
        )));
    }
    Ok(h)
}

/// Computes `h_m^(n)` by every method and fails with an identity violation
/// if any two disagree.
pub fn h_poly_checked(n: u32, m: u32) -> Result<LaurentPoly> {
    let reference = h_poly(n, m, HMethod::Recursive)?;
    for method in &HMethod::ALL[1..] {
        let other = h_poly(n, m, *method)?;
        if other != reference {
            return Err(Error::IdentityViolation {
                identity: format!("h_{m}^({n}): recursive vs {method}"),
                left: reference,
                right: other,
            });
        }
    }
    Ok(reference)
}

fn p_poly_uncached(n: u32, j: u32) -> LaurentPoly {
    let (n, j) = (n as i64, j as i64);
    q_binomial(2 * n - 1 - j, j, 2)
}

/// `P_j^(n)(q) = g_{j,2n-1-j}(q)`.
pub fn p_poly(n: u32, j: u32) -> Result<LaurentPoly> {
    check_h_range(n, j).map_err(|_| {
        Error::invalid(format!("P_j^(n) requires 0 <= j <= n-1 (got n={n}, j={j})"))
    })?;
    Ok(p_table(n)?[j as usize].clone())
}

/// Palindromy center `j(2n-2j-1)` of `P_j^(n)`; also the bound `m_{ij}`
/// with `j` replaced by `i - j` and `n` by `n - j`.
pub fn p_center(n: u32, j: u32) -> i64 {
    let (n, j) = (n as i64, j as i64);
    j * (2 * n - 2 * j - 1)
}

/// `m_{ij} = (i-j)(2n-2i-1)`, the largest shift `k` with `s^i_jk` possibly
/// nonzero.
pub fn shift_bound(n: u32, i: u32, j: u32) -> i64 {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    (i - j) * (2 * n - 2 * i - 1)
}

/// `(s^a_{0,k})_m`: the coefficient of `q^{c+k}` in `P_a^(m)`.
fn s_zero(m: u32, a: u32, k: u64) -> Result<u64> {
    let center = p_center(m, a);
    let k = k as i64;
    if k > center {
        return Ok(0);
    }
    let p = p_poly(m, a)?;
    let c = p.coeff(center + k);
    if (k - a as i64) % 2 != 0 {
        // Off-parity coefficients of P must vanish; never silently drop them.
        if c != num_bigint::BigInt::from(0) {
            return Err(Error::internal(format!(
                "P_{a}^({m}) has a nonzero coefficient {c} at off-parity exponent {}",
                center + k
            )));
        }
        return Ok(0);
    }
    c.to_u64().ok_or_else(|| {
        Error::internal(format!(
            "s^{a}_(0,{k}) in rank {m} is negative or too large: {c}"
        ))
    })
}

/// `(s^i_{jk})_n = (s^{i-j}_{0,k})_{n-j}`.
pub fn s_number(n: u32, i: u32, j: u32, k: u64) -> Result<u64> {
    if n == 0 || i >= n || j > i {
        return Err(Error::invalid(format!(
            "s^i_jk requires 0 <= j <= i <= n-1 (got n={n}, i={i}, j={j})"
        )));
    }
    s_zero(n - j, i - j, k)
}

/// The numbers `s^i_{jk}` for fixed `(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub n: u32,
    pub i: u32,
    /// `(j, k) -> s^i_jk` for `0 <= j <= i`, `0 <= k <= m_ij`.
    pub entries: BTreeMap<(u32, u64), u64>,
}

impl MultiplicityTable {
    pub fn get(&self, j: u32, k: u64) -> u64 {
        self.entries.get(&(j, k)).copied().unwrap_or(0)
    }

    /// Checks `s^i_ik = δ_{0k}` and the parity rule `s^i_jk = 0` unless
    /// `k ≡ i - j (mod 2)`.
    pub fn satisfies_invariants(&self) -> bool {
        self.entries.iter().all(|(&(j, k), &s)| {
            let diagonal_ok = j != self.i || s == u64::from(k == 0);
            let parity_ok = s == 0 || (k + u64::from(j)) % 2 == u64::from(self.i) % 2;
            diagonal_ok && parity_ok
        })
    }
}

pub fn s_table(n: u32, i: u32) -> Result<MultiplicityTable> {
    if n == 0 || i >= n {
        return Err(Error::invalid(format!(
            "s-table requires 0 <= i <= n-1 (got n={n}, i={i})"
        )));
    }
    let mut entries = BTreeMap::new();
    for j in 0..=i {
        for k in 0..=shift_bound(n, i, j) as u64 {
            entries.insert((j, k), s_number(n, i, j, k)?);
        }
    }
    Ok(MultiplicityTable { n, i, entries })
}

/// Stalk dimensions of `IC(closure of O_{2^i 1^{2n-2i}})` at a point of the
/// orbit `O_{2^j 1^{2n-2j}}`, by cohomological degree (perverse convention).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkTable {
    pub n: u32,
    pub i: u32,
    pub j: u32,
    /// Nonzero `degree -> dim` entries.
    pub dims: BTreeMap<i64, u64>,
}

impl StalkTable {
    pub fn dim(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    /// True when every degree `k ≡ i - 1 (mod 2)` has zero stalk.
    pub fn vanishes_in_forbidden_parity(&self) -> bool {
        let forbidden = (i64::from(self.i) - 1).rem_euclid(2);
        self.dims.keys().all(|k| k.rem_euclid(2) != forbidden)
    }
}

/// Stalks at `x_j` read off from `h_{i-j}^(n-j)`: the dimension in degree
/// `k` is the coefficient of `q^{k + i(2n-i)}`.
pub fn stalk_table(n: u32, i: u32, j: u32) -> Result<StalkTable> {
    if n == 0 || i >= n {
        return Err(Error::invalid(format!(
            "stalk table requires 0 <= i <= n-1 (got n={n}, i={i})"
        )));
    }
    if j > i {
        return Err(Error::invalid(format!(
            "orbit 2^{j} is not in the closure of orbit 2^{i} (need j <= i)"
        )));
    }
    let h = h_poly(n - j, i - j, HMethod::Recursive)?;
    let shift = i64::from(i) * (2 * i64::from(n) - i64::from(i));
    let mut dims = BTreeMap::new();
    for (e, c) in h.terms() {
        let d = c.to_u64().ok_or_else(|| {
            Error::internal(format!(
                "negative or oversized stalk coefficient {c} in h_{}^({})",
                i - j,
                n - j
            ))
        })?;
        dims.insert(e - shift, d);
    }
    Ok(StalkTable { n, i, j, dims })
}
