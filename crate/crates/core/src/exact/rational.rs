//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, with a
//! positive denominator, and zero stored as `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Generalized binomial coefficient `C(x, k)` for rational `x`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut top = x.clone();
    for i in 0..k {
        acc *= &top;
        acc /= int(i as i64 + 1);
        top -= Rational::one();
    }
    acc
}

pub fn pow_neg_one(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Integer value of `x`, if it is an integer that fits in `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

/// Serialize as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p/q"` or `"p"` (optional sign on `p`).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// `base^k` for any integer `k`; negative `k` inverts.
pub fn pow_rational(base: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= base;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub mod serde_rational {
    //! `#[serde(with = ...)]` adaptor for the `"p/q"` string form.
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
