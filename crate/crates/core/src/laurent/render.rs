use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentPoly;

// Canonical text: ascending exponents, explicit signs between terms, unit
// coefficients dropped on non-constant terms, `q^k` for k != 0, 1.
fn write_terms(
    f: &mut impl fmt::Write,
    p: &LaurentPoly,
    power: impl Fn(i64) -> String,
    sep: &str,
) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (idx, (e, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        match (idx, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if e == 0 {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&power(e))?;
        } else {
            write!(f, "{mag}{sep}{}", power(e))?;
        }
    }
    Ok(())
}

fn text_power(e: i64) -> String {
    if e == 1 {
        "q".to_string()
    } else {
        format!("q^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, text_power, "")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    /// LaTeX math-mode rendering, powers of `q` ascending.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let _ = write_terms(
            &mut out,
            self,
            |e| {
                if e == 1 {
                    "q".into()
                } else {
                    format!("q^{{{e}}}")
                }
            },
            " ",
        );
        out
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            terms: self.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        let mut last = None;
        for (e, c) in wire.terms {
            if last.is_some_and(|prev| prev >= e) {
                return Err(D::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(e);
            let c = BigInt::from_str(&c).map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn text_rendering() {
        assert_eq!(
            p(&[(0, 1), (2, 1), (4, 2), (6, 1)]).to_string(),
            "1 + q^2 + 2q^4 + q^6"
        );
        assert_eq!(
            p(&[(-3, 1), (-1, 1), (1, 1), (3, 1)]).to_string(),
            "q^-3 + q^-1 + q + q^3"
        );
        assert_eq!(
            p(&[(0, -1), (2, 1), (4, -3)]).to_string(),
            "-1 + q^2 - 3q^4"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(p(&[(0, 1), (1, -1), (4, 2)]).to_latex(), "1 - q + 2 q^{4}");
        assert_eq!(p(&[(-2, 1)]).to_latex(), "q^{-2}");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big = BigInt::from(u64::MAX) * BigInt::from(1000);
        let poly = LaurentPoly::from_terms([(-1, BigInt::from(3)), (5, big.clone())]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, format!(r#"{{"terms":[[-1,"3"],[5,"{big}"]]}}"#));
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn json_rejects_unsorted_terms() {
        let r: Result<LaurentPoly, _> = serde_json::from_str(r#"{"terms":[[2,"1"],[1,"1"]]}"#);
        assert!(r.is_err());
    }
}
