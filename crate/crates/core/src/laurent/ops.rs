use std::collections::BTreeMap;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

use super::LaurentPoly;

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            let slot = self.terms.entry(e).or_default();
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(&e);
            }
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            let slot = self.terms.entry(e).or_default();
            *slot -= c;
            if slot.is_zero() {
                self.terms.remove(&e);
            }
        }
    }
}

fn multiply(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) = (
        a.min_exponent(),
        a.max_exponent(),
        b.min_exponent(),
        b.max_exponent(),
    ) else {
        return LaurentPoly::zero();
    };
    let span = (a_hi - a_lo + b_hi - b_lo + 1) as usize;
    let pairs = a.len().saturating_mul(b.len());
    if span <= pairs.saturating_mul(4).saturating_add(64) {
        // Dense accumulator when the product is not very sparse.
        let base = a_lo + b_lo;
        let mut acc = vec![BigInt::zero(); span];
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                acc[(ea + eb - base) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_map(
            acc.into_iter()
                .enumerate()
                .map(|(k, c)| (base + k as i64, c))
                .collect(),
        )
    } else {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                *acc.entry(ea + eb).or_default() += ca * cb;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = multiply(self, rhs);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $assign_trait<LaurentPoly> for LaurentPoly {
            fn $assign(&mut self, rhs: LaurentPoly) {
                self.$assign(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        multiply(self, rhs)
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        multiply(&self, &rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        multiply(&self, rhs)
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        multiply(self, &rhs)
    }
}

impl MulAssign<LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: LaurentPoly) {
        *self = multiply(self, &rhs);
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl<'a> Product<&'a LaurentPoly> for LaurentPoly {
    fn product<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}
