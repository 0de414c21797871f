//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::scalar::{
    denominator_lcm, format_rational, numerator_gcd, rational_sqrt, GaussianRational, Rational,
    Scalar,
};

/// Polynomial with ascending coefficients and no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

/// Polynomial with rational coefficients.
pub type RealPolynomial = Poly<Rational>;
/// Polynomial with Gaussian-rational coefficients.
pub type ComplexPolynomial = Poly<GaussianRational>;

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^n`.
    pub fn monomial(c: S, n: usize) -> Self {
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// `t - root`.
    pub fn linear_root(root: S) -> Self {
        Self::new(vec![-root, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = S::one() / self.leading();
        self.scale(&inv)
    }

    /// Multiplies by `t^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() / S::from_int(i as i64 + 1)),
        );
        Self::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(), self.clone());
        }
        let lead_inv = S::one() / d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); self.deg() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let v = rem[k + j].clone() - c.clone() * dc.clone();
                rem[k + j] = v;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Coefficients of `self` in powers of `(t - at)`.
    pub fn taylor_coefficients(&self, at: &S) -> Vec<S> {
        let mut work = self.coeffs.clone();
        let n = work.len();
        // Repeated synthetic division by (t - at).
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let v = work[j].clone() + at.clone() * work[j + 1].clone();
                work[j] = v;
            }
        }
        work
    }

    /// `self(t + by)`.
    pub fn shifted(&self, by: &S) -> Self {
        Self::new(self.taylor_coefficients(by))
    }

    /// `self` composed with another polynomial.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Square-free part (monic), valid in characteristic zero.
    pub fn squarefree(&self) -> Self {
        if self.is_constant() {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }
}

impl RealPolynomial {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::scalar::int(c)).collect())
    }

    pub fn to_complex(&self) -> ComplexPolynomial {
        self.map(|c| GaussianRational::real(c.clone()))
    }

    /// Positive rational `c` and primitive integer polynomial `p` with
    /// `self = c·p` and positive leading coefficient of `p`.
    pub fn primitive_part(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::one(), Self::zero());
        }
        let l = denominator_lcm(self.coeffs.iter());
        let scaled: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c * Rational::from_integer(l.clone()))
            .collect();
        let g = numerator_gcd(scaled.iter());
        let mut c = Rational::new(g, l);
        if self.leading().is_negative() {
            c = -c;
        }
        let p = self.scale(&(Rational::one() / &c));
        (c, p)
    }

    /// Sign of the polynomial at `x` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl ComplexPolynomial {
    /// Real and imaginary coefficient polynomials.
    pub fn split(&self) -> (RealPolynomial, RealPolynomial) {
        (self.map(|c| c.re.clone()), self.map(|c| c.im.clone()))
    }

    pub fn to_real(&self) -> Option<RealPolynomial> {
        let (re, im) = self.split();
        im.is_zero().then_some(re)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<S: Scalar> $tr<&Poly<S>> for &Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: &Poly<S>) -> Poly<S> {
                let f: fn(&Poly<S>, &Poly<S>) -> Poly<S> = $body;
                f(self, rhs)
            }
        }
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| a.coeff(i) + b.coeff(i)).collect())
});

poly_binop!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| a.coeff(i) - b.coeff(i)).collect())
});

poly_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![S::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            let v = out[i + j].clone() + x.clone() * y.clone();
            out[i + j] = v;
        }
    }
    Poly::new(out)
});

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -self.clone()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Renders coefficients of a real polynomial as `p/q` strings, ascending.
pub fn format_coefficients(p: &RealPolynomial) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareRootError {
    #[error("polynomial is zero")]
    Zero,
    #[error("polynomial is not a square: {0}")]
    NotASquare(String),
}

/// Result of [`poly_square_root`]: `p = scale · root²` with `root` monic and
/// `scale > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareRoot {
    pub root: RealPolynomial,
    pub scale: Rational,
}

impl SquareRoot {
    /// `√scale · root` when `scale` is a rational square.
    pub fn exact(&self) -> Option<RealPolynomial> {
        rational_sqrt(&self.scale).map(|s| self.root.scale(&s))
    }
}

/// Square root of a real polynomial up to a positive rational factor.
///
/// The monic root is recovered from the top coefficient downwards; each
/// coefficient is fixed by one exact division, and the candidate is checked
/// by squaring at the end.
pub fn poly_square_root(p: &RealPolynomial) -> Result<SquareRoot, SquareRootError> {
    let n = p.degree().ok_or(SquareRootError::Zero)?;
    if n % 2 == 1 {
        return Err(SquareRootError::NotASquare("odd degree".into()));
    }
    let scale = p.leading();
    if scale.is_negative() {
        return Err(SquareRootError::NotASquare(
            "negative leading coefficient".into(),
        ));
    }
    let m = p.monic();
    let h = n / 2;
    let mut q = vec![Rational::zero(); h + 1];
    q[h] = Rational::one();
    let two = Rational::from_integer(2.into());
    for i in 1..=h {
        // coefficient of t^(2h-i) in q^2, excluding the unknown q[h-i]
        let target = 2 * h - i;
        let mut acc = Rational::zero();
        for a in (h - i + 1)..=h {
            let b = target - a;
            if b > h - i && b <= h {
                acc += &q[a] * &q[b];
            }
        }
        q[h - i] = (m.coeff(target) - acc) / &two;
    }
    let root = Poly::new(q);
    if &root * &root != m {
        return Err(SquareRootError::NotASquare(
            "coefficient recursion leaves a remainder".into(),
        ));
    }
    Ok(SquareRoot { root, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn p(cs: &[i64]) -> RealPolynomial {
        RealPolynomial::from_ints(cs)
    }

    #[test]
    fn taylor_shift_examples() {
        let t2 = p(&[0, 0, 1]);
        assert_eq!(
            t2.taylor_coefficients(&int(0)),
            vec![int(0), int(0), int(1)]
        );
        assert_eq!(
            t2.taylor_coefficients(&int(1)),
            vec![int(1), int(2), int(1)]
        );
    }

    #[test]
    fn taylor_shift_roundtrip_complex() {
        let q = p(&[3, -1, 4, 1, -5]).to_complex();
        let beta = GaussianRational::new(rat(1, 2), rat(-2, 3));
        let c = q.taylor_coefficients(&beta);
        let back = Poly::new(c).shifted(&-beta.clone());
        // back(t) = sum c_j (t - beta)^j expressed in t
        let mut acc = ComplexPolynomial::zero();
        for (j, cj) in q.taylor_coefficients(&beta).iter().enumerate() {
            acc = &acc
                + &ComplexPolynomial::linear_root(beta.clone())
                    .pow(j as u32)
                    .scale(cj);
        }
        assert_eq!(acc, q);
        assert_eq!(back, q);
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[1, 0, 1]) * &p(&[-2, 1]);
        let b = &p(&[1, 0, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 0, 1]));
        let (q, r) = a.div_rem(&p(&[1, 0, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn square_roots() {
        let s = poly_square_root(&p(&[1, 0, 2, 0, 1])).unwrap();
        assert_eq!(s.root, p(&[1, 0, 1]));
        assert_eq!(s.exact(), Some(p(&[1, 0, 1])));
        assert!(matches!(
            poly_square_root(&p(&[0, 0, 0, 1])),
            Err(SquareRootError::NotASquare(_))
        ));
        assert!(matches!(
            poly_square_root(&p(&[1, 0, 1])),
            Err(SquareRootError::NotASquare(_))
        ));
        let s = poly_square_root(&p(&[2, 0, 4, 0, 2])).unwrap();
        assert_eq!(s.scale, int(2));
        assert_eq!(s.exact(), None);
    }

    #[test]
    fn primitive_part_normalizes_sign_and_content() {
        let q = RealPolynomial::new(vec![rat(-1, 2), rat(-3, 4)]);
        let (c, pp) = q.primitive_part();
        assert_eq!(c, rat(-1, 4));
        assert_eq!(pp, p(&[2, 3]));
    }
}
