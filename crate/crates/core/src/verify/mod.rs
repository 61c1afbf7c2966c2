//! Exact identity checks with machine-readable reports.
//!
//! Every `check_*` function returns one [`VerificationReport`] per
//! identity and parameter set, sorted by identity name and then by
//! parameters. A computation that fails midway (for example an exact
//! division that leaves a remainder) becomes a failing report with an
//! [`Witness::Error`]. Only bad parameters are returned as `Err`, and that
//! happens before any equality is checked.

mod hypergeometric;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalPair};

pub use hypergeometric::{
    check_matrix_inversion, check_q_bailey, check_quad_transform, random_alphas,
    QUAD_TRANSFORM_GRID,
};
pub use suites::{
    check_fano_suite, check_genus_independence, check_h_suite, check_inductive, check_stalk_parity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What went wrong in a failing check. `at` locates the failure inside
/// the parameter set, e.g. `"m=3"` or `"x^5"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Two polynomials that should be equal; for rational quantities these
    /// are the cross products.
    Poly {
        at: String,
        left: LaurentPoly,
        right: LaurentPoly,
        exponent: i64,
        left_coeff: String,
        right_coeff: String,
    },
    Vector {
        at: String,
        left: Vec<u64>,
        right: Vec<u64>,
        index: usize,
    },
    Property {
        at: String,
        detail: String,
    },
    Error {
        message: String,
    },
}

impl Witness {
    /// `None` when the polynomials agree.
    pub fn poly(at: impl Into<String>, left: &LaurentPoly, right: &LaurentPoly) -> Option<Self> {
        let e = left.first_difference(right)?;
        Some(Witness::Poly {
            at: at.into(),
            left: left.clone(),
            right: right.clone(),
            exponent: e,
            left_coeff: left.coeff(e).to_string(),
            right_coeff: right.coeff(e).to_string(),
        })
    }

    /// Compares two quotients by cross-multiplication.
    pub fn rational(
        at: impl Into<String>,
        left: &RationalPair,
        right: &RationalPair,
    ) -> Option<Self> {
        let (l, r) = left.cross_products(right);
        Self::poly(at, &l, &r)
    }

    pub fn vector(at: impl Into<String>, left: &[u64], right: &[u64]) -> Option<Self> {
        let index = left
            .iter()
            .zip(right)
            .position(|(a, b)| a != b)
            .or((left.len() != right.len()).then(|| left.len().min(right.len())))?;
        Some(Witness::Vector {
            at: at.into(),
            left: left.to_vec(),
            right: right.to_vec(),
            index,
        })
    }

    pub fn property(at: impl Into<String>, detail: impl Into<String>) -> Self {
        Witness::Property {
            at: at.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    /// `Ok(None)` passes, `Ok(Some(w))` fails with `w`, and `Err(e)` fails
    /// with the error message as witness.
    pub fn from_outcome(
        identity: &str,
        params: &[(&str, i64)],
        outcome: Result<Option<Witness>>,
    ) -> Self {
        let witness = match outcome {
            Ok(w) => w,
            Err(e) => Some(Witness::Error {
                message: e.to_string(),
            }),
        };
        VerificationReport {
            identity: identity.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    fn sort_key(&self) -> (&str, &BTreeMap<String, i64>) {
        (&self.identity, &self.params)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.identity)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(w) = &self.witness {
            write!(
                f,
                " witness={}",
                serde_json::to_string(w).expect("witness serializes")
            )?;
        }
        Ok(())
    }
}

pub(crate) fn sorted(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    reports
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Inductive,
    H,
    Fano,
    Bailey,
    Inversion,
    Quad,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::All,
        Suite::Inductive,
        Suite::H,
        Suite::Fano,
        Suite::Bailey,
        Suite::Inversion,
        Suite::Quad,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Inductive => "inductive",
            Suite::H => "h",
            Suite::Fano => "fano",
            Suite::Bailey => "bailey",
            Suite::Inversion => "inversion",
            Suite::Quad => "quad",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Parameters for [`run_suite`]. `m`/`n` restrict the Bailey suite to a
/// single point of the specialization family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub nmax: u32,
    pub gmax: u32,
    pub seed: u64,
    pub seeds: u64,
    pub max_size: u32,
    pub order: u32,
    pub bailey_nmax: u32,
    pub bailey_mmax: u32,
    pub m: Option<u32>,
    pub n: Option<u32>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            nmax: 12,
            gmax: 6,
            seed: 0,
            seeds: 10,
            max_size: 8,
            order: 8,
            bailey_nmax: 8,
            bailey_mmax: 10,
            m: None,
            n: None,
        }
    }
}

/// Exponents `(b, r, d2, base_step)` of the Bailey specialization
/// `B = q^{-2n}`, `R = q^{-4n+4m-4}`, `D² = q^{-2n+2m}` in base `q^{-2}`.
pub fn bailey_specialization(n: u32, m: u32) -> (i64, i64, i64, i64) {
    let (n, m) = (i64::from(n), i64::from(m));
    (-2 * n, -4 * n + 4 * m - 4, -2 * n + 2 * m, -2)
}

/// Parameter choices `(a_exp, q_exp)` used for a matrix of the given size:
/// the `A = Q^{-2·size}` shape with `Q = q^{-2}`, plus a generic one.
pub fn inversion_parameters(size: u32) -> [(i64, i64); 2] {
    [(4 * i64::from(size), -2), (1, 1)]
}

fn bailey_points(p: &SuiteParams) -> Vec<(u32, u32)> {
    match (p.n, p.m) {
        (Some(n), Some(m)) => vec![(n, m)],
        (Some(n), None) => (0..=p.bailey_mmax).map(|m| (n, m)).collect(),
        (None, Some(m)) => (1..=p.bailey_nmax).map(|n| (n, m)).collect(),
        (None, None) => (1..=p.bailey_nmax)
            .flat_map(|n| (0..=p.bailey_mmax).map(move |m| (n, m)))
            .collect(),
    }
}

fn bailey_suite(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    use rayon::prelude::*;
    let single = p.n.is_some() && p.m.is_some();
    let reports: Vec<Vec<VerificationReport>> = bailey_points(p)
        .into_par_iter()
        .filter_map(|(n, m)| {
            let (b, r, d2, bs) = bailey_specialization(n, m);
            match check_q_bailey(m, b, r, d2, bs) {
                Ok(reports) => Some(Ok(reports)),
                // Outside the range 0 <= m <= n-1 some points have vanishing
                // denominators; a sweep skips them, a single point reports it.
                Err(e) if e.is_usage() && !single && m >= n => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

fn inversion_suite(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    use rayon::prelude::*;
    let points: Vec<(u32, i64, i64, u64)> = (1..=p.max_size)
        .flat_map(|size| {
            inversion_parameters(size)
                .into_iter()
                .flat_map(move |(a, q)| (0..p.seeds).map(move |s| (size, a, q, p.seed + s)))
        })
        .collect();
    let reports: Vec<Vec<VerificationReport>> = points
        .into_par_iter()
        .map(|(size, a, q, seed)| check_matrix_inversion(size, a, q, seed))
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

fn quad_suite(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &(d2, r, bs) in QUAD_TRANSFORM_GRID {
        out.extend(check_quad_transform(p.order, d2, r, bs)?);
    }
    Ok(out)
}

/// Runs a named suite and returns its reports in canonical order.
pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let reports = match suite {
        Suite::Inductive => check_inductive(p.nmax)?,
        Suite::H => check_h_suite(p.nmax)?,
        Suite::Fano => check_fano_suite(p.gmax)?,
        Suite::Bailey => bailey_suite(p)?,
        Suite::Inversion => inversion_suite(p)?,
        Suite::Quad => quad_suite(p)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in &Suite::ALL[1..] {
                all.extend(run_suite(*s, p)?);
            }
            all.extend(check_genus_independence(5, 6, 20)?);
            all
        }
    };
    Ok(sorted(reports))
}
