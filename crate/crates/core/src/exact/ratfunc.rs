//! Rational functions in one variable, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::Error;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let l = den.lead().recip();
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(a: Rational) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this equals, or `NotPolynomial`.
    pub fn to_poly(&self) -> Result<Poly, Error> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(format!(
                "denominator {} remains",
                self.den
            )))
        }
    }

    pub fn scale(&self, a: &Rational) -> Self {
        if a.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(a), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        RatFunc::new(&self.num * p, self.den.clone()).expect("den nonzero")
    }

    pub fn div_poly(&self, p: &Poly) -> Result<Self, Error> {
        RatFunc::new(self.num.clone(), &self.den * p)
    }

    pub fn recip(&self) -> Result<Self, Error> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den).expect("den nonzero")
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn pow(&self, k: usize) -> Self {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self, Error> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_one_poly() {
            self.num.display_in(var)
        } else {
            format!("({}) / ({})", self.num.display_in(var), self.den.display_in(var))
        }
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == super::poly::Degree::Finite(0) && self.lead().is_one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({:?} / {:?})", self.num, self.den)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("den nonzero");
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(n, &self.den * &o.den).expect("den nonzero")
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("den nonzero")
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by the zero function; use `checked_div` otherwise.
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);
