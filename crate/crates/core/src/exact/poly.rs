//! Dense univariate polynomials over `Q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::Error;

/// Degree of a polynomial; the zero polynomial has degree `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients in ascending degree, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(a: Rational) -> Self {
        Poly::new(vec![a])
    }

    /// `a x^k`.
    pub fn monomial(a: Rational, k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = a;
        Poly::new(c)
    }

    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|a| a.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&a| int(a)).collect())
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        Poly::new(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.c.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, a: &Rational) -> Self {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().recip())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * int(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Antiderivative vanishing at zero.
    pub fn integrate_from_zero(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero()];
        c.extend(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| a / int(i as i64 + 1)),
        );
        Poly::new(c)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), Error> {
        let dd = d.degree().finite().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] * &inv;
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &t * b;
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Exact quotient; fails with `NonzeroRemainder` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, Error> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NonzeroRemainder(format!(
                "{self} is not divisible by {d}"
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Least common multiple, monic.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * other)
            .div_exact(&g)
            .expect("gcd divides the product")
            .monic()
    }

    /// Coefficient strings, ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.c.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(v: &[S]) -> Result<Poly, Error> {
        let c = v
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(c))
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = *a < Rational::zero();
            let mag = if neg { -a.clone() } else { a.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", format_rational(&mag)));
            }
        }
        out
    }

    /// LaTeX form in the variable `var`.
    pub fn latex_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = *a < Rational::zero();
            let mag = if neg { -a.clone() } else { a.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{{{i}}}"),
            };
            let coef = if mag.denom().is_one() {
                mag.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            if mono.is_empty() {
                out.push_str(&coef);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coef);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_strings().join(", "))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        Poly::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for Poly {
    fn from(a: Rational) -> Self {
        Poly::constant(a)
    }
}

fn add_vec(a: &[Rational], b: &[Rational], sign: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) if sign => x + y,
                Some(y) => x - y,
                None => x,
            }
        })
        .collect()
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        Poly::new(add_vec(&self.c, &o.c, true))
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        Poly::new(add_vec(&self.c, &o.c, false))
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        *self = &*self + o;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, o: &Poly) {
        *self = &*self - o;
    }
}

impl MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, o: &Poly) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly::zero().degree(), Degree::NegInfinity);
        assert_eq!(Poly::one().degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Poly::from_ints(&[1, 2, 0, 0]).degree(), Degree::Finite(1));
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = Poly::from_ints(&[2, -3, 1]);
        let b = Poly::from_ints(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(r, Poly::from_ints(&[2]));
        assert_eq!(q, Poly::new(vec![rat(-3, 2), rat(1, 2)]));
        assert!(a.div_rem(&Poly::zero()).is_err());
        assert_eq!(a.lcm(&b), Poly::from_ints(&[6, -7, 0, 1]));
    }

    #[test]
    fn calculus() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6]));
        assert_eq!(p.derivative().integrate_from_zero(), Poly::from_ints(&[0, 2, 3]));
        assert_eq!(p.eval(&rat(1, 2)), rat(11, 4));
    }

    #[test]
    fn composition() {
        let p = Poly::from_ints(&[0, 0, 1]);
        let q = Poly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn display_forms() {
        let p = Poly::new(vec![rat(-1, 2), int(0), int(-3), int(1)]);
        assert_eq!(p.display_in("t"), "t^3 - 3*t^2 - 1/2");
        assert_eq!(p.latex_in("\\eta"), "\\eta^{3} - 3\\eta^{2} - \\frac{1}{2}");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["-1/2","0","-3","1"]"#);
    }
}
