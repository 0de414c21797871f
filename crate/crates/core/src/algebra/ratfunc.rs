//! Reduced quotients of real polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::RealPolynomial;
use super::scalar::Rational;

/// `num/den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: RealPolynomial,
    den: RealPolynomial,
}

impl RationalFunction {
    pub fn new(num: RealPolynomial, den: RealPolynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lead = den.leading();
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: RealPolynomial) -> Self {
        Self {
            num: p,
            den: RealPolynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(RealPolynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self {
            num: RealPolynomial::zero(),
            den: RealPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn num(&self) -> &RealPolynomial {
        &self.num
    }

    pub fn den(&self) -> &RealPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<RealPolynomial> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = o.den.div_exact(&g).expect("gcd");
        let b = self.den.div_exact(&g).expect("gcd");
        RationalFunction::new(&(&self.num * &a) + &(&o.num * &b), &self.den * &a)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd");
        let d2 = o.den.div_exact(&g1).expect("gcd");
        let n2 = o.num.div_exact(&g2).expect("gcd");
        let d1 = self.den.div_exact(&g2).expect("gcd");
        RationalFunction::new(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self * &o.inv()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl From<RealPolynomial> for RationalFunction {
    fn from(p: RealPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn p(cs: &[i64]) -> RealPolynomial {
        RealPolynomial::from_ints(cs)
    }

    #[test]
    fn stored_in_lowest_terms() {
        // (t^2 - 1) / (2t - 2) = (t + 1)/2
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(f.den(), &p(&[1]));
        assert_eq!(
            f.num(),
            &RealPolynomial::new(vec![
                crate::algebra::scalar::rat(1, 2),
                crate::algebra::scalar::rat(1, 2)
            ])
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dt 1/t = -1/t^2
        let f = RationalFunction::new(p(&[1]), p(&[0, 1]));
        assert_eq!(
            f.derivative(),
            RationalFunction::new(p(&[-1]), p(&[0, 0, 1]))
        );
        assert_eq!(f.eval(&int(0)), None);
        assert_eq!(f.eval(&int(2)), Some(crate::algebra::scalar::rat(1, 2)));
    }

    #[test]
    fn field_arithmetic() {
        let a = RationalFunction::new(p(&[1]), p(&[0, 1]));
        let b = RationalFunction::new(p(&[1]), p(&[-1, 1]));
        // 1/t - 1/(t-1) = -1/(t(t-1))
        let d = &a - &b;
        assert_eq!(d, RationalFunction::new(p(&[-1]), p(&[0, -1, 1])));
        assert_eq!(&(&a * &b) / &b, a);
    }
}
