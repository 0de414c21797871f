//! Quaternions and quaternion polynomials in a central variable `t`.
//!
//! Components are ordered `(w, x, y, z)` = (scalar, î, ĵ, k̂). Over
//! [`GaussianRational`] the complex unit commutes with î, ĵ, k̂ and
//! quaternion conjugation leaves it untouched.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{
    format_rational, parse_rational, ComplexPolynomial, GaussianRational, Poly, Rational,
    RationalFunction, RealPolynomial, Scalar,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

pub type RationalQuaternion = Quaternion<Rational>;
pub type Biquaternion = Quaternion<GaussianRational>;

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_array([w, x, y, z]: [S; 4]) -> Self {
        Self { w, x, y, z }
    }

    pub fn to_array(&self) -> [S; 4] {
        [
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn real(w: S) -> Self {
        Self::new(w, S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn vector(x: S, y: S, z: S) -> Self {
        Self::new(S::zero(), x, y, z)
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(
            S::from_int(w),
            S::from_int(x),
            S::from_int(y),
            S::from_int(z),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_vector(&self) -> bool {
        self.w.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// `q q̄`.
    pub fn norm(&self) -> S {
        self.dot(self)
    }

    /// Componentwise scalar product, equal to `½(x ȳ + y x̄)`.
    pub fn dot(&self, o: &Self) -> S {
        self.w.clone() * o.w.clone()
            + self.x.clone() * o.x.clone()
            + self.y.clone() * o.y.clone()
            + self.z.clone() * o.z.clone()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(
            self.w.clone() * c.clone(),
            self.x.clone() * c.clone(),
            self.y.clone() * c.clone(),
            self.z.clone() * c.clone(),
        )
    }

    pub fn scalar_part(&self) -> S {
        self.w.clone()
    }

    pub fn vector_part(&self) -> Self {
        Self::new(S::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// Multiplicative inverse; `None` when the norm vanishes.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&(S::one() / n)))
    }

    /// Vector cross product of the vector parts.
    pub fn cross(&self, o: &Self) -> Self {
        Self::vector(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Quaternion<T> {
        Quaternion::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }
}

impl RationalQuaternion {
    pub fn to_complex(&self) -> Biquaternion {
        self.map(|c| GaussianRational::real(c.clone()))
    }
}

impl Biquaternion {
    /// Splits `q = a + b·i_c` into rational quaternions `(a, b)`.
    pub fn split(&self) -> (RationalQuaternion, RationalQuaternion) {
        (self.map(|c| c.re.clone()), self.map(|c| c.im.clone()))
    }

    /// Complex conjugation of every component (not quaternion conjugation).
    pub fn complex_conj(&self) -> Self {
        self.map(Scalar::conj)
    }
}

impl<S: Scalar> Zero for Quaternion<S> {
    fn zero() -> Self {
        Self::real(S::zero())
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
}

impl<S: Scalar> One for Quaternion<S> {
    fn one() -> Self {
        Self::real(S::one())
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<S: Scalar> Mul<&Quaternion<S>> for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, o: &Quaternion<S>) -> Quaternion<S> {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let m = |p: &S, q: &S| p.clone() * q.clone();
        Quaternion::new(
            m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
            m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
            m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
            m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
        )
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.w, self.x, self.y, self.z)
    }
}

impl<S: Scalar> fmt::Debug for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}, {:?}, {:?}]",
            self.w, self.x, self.y, self.z
        )
    }
}

impl Serialize for RationalQuaternion {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        self.to_array()
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalQuaternion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<serde_json_free::Num> = Vec::deserialize(d)?;
        if v.len() != 4 {
            return Err(D::Error::custom(format!(
                "expected [w, x, y, z], got {} entries",
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(4);
        for n in v {
            out.push(n.into_rational().map_err(D::Error::custom)?);
        }
        let [w, x, y, z]: [Rational; 4] = out.try_into().expect("length checked");
        Ok(Self::new(w, x, y, z))
    }
}

impl Serialize for Biquaternion {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        self.to_array().serialize(s)
    }
}

mod serde_json_free {
    use super::*;

    /// A rational written as a string or a JSON integer.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub enum Num {
        Str(String),
        Int(i64),
    }

    impl Num {
        pub fn into_rational(self) -> Result<Rational, String> {
            match self {
                Num::Str(s) => parse_rational(&s).ok_or_else(|| format!("invalid rational {s:?}")),
                Num::Int(i) => Ok(Rational::from_integer(i.into())),
            }
        }
    }
}

/// Polynomial with quaternion coefficients, ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuatPoly<S> {
    coeffs: Vec<Quaternion<S>>,
}

pub type QuaternionPolynomial = QuatPoly<Rational>;
pub type BiquaternionPolynomial = QuatPoly<GaussianRational>;

impl<S: Scalar> QuatPoly<S> {
    pub fn new(mut coeffs: Vec<Quaternion<S>>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    pub fn constant(q: Quaternion<S>) -> Self {
        Self::new(vec![q])
    }

    /// `t - q`.
    pub fn linear_root(q: Quaternion<S>) -> Self {
        Self::new(vec![-q, Quaternion::one()])
    }

    /// `p(t)·q` for a central polynomial `p`.
    pub fn from_poly_times(p: &Poly<S>, q: &Quaternion<S>) -> Self {
        Self::new(p.coeffs().iter().map(|c| q.scale(c)).collect())
    }

    pub fn from_real(p: &Poly<S>) -> Self {
        Self::from_poly_times(p, &Quaternion::one())
    }

    pub fn from_components([w, x, y, z]: [Poly<S>; 4]) -> Self {
        let n = [
            w.coeffs().len(),
            x.coeffs().len(),
            y.coeffs().len(),
            z.coeffs().len(),
        ]
        .into_iter()
        .max()
        .unwrap_or(0);
        Self::new(
            (0..n)
                .map(|i| Quaternion::new(w.coeff(i), x.coeff(i), y.coeff(i), z.coeff(i)))
                .collect(),
        )
    }

    pub fn components(&self) -> [Poly<S>; 4] {
        let pick = |f: fn(&Quaternion<S>) -> S| Poly::new(self.coeffs.iter().map(f).collect());
        [
            pick(|q| q.w.clone()),
            pick(|q| q.x.clone()),
            pick(|q| q.y.clone()),
            pick(|q| q.z.clone()),
        ]
    }

    pub fn coeffs(&self) -> &[Quaternion<S>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Quaternion<S> {
        self.coeffs.get(i).cloned().unwrap_or_else(Quaternion::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with 0 for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Quaternion<S> {
        self.coeffs.last().cloned().unwrap_or_else(Quaternion::zero)
    }

    pub fn is_vector(&self) -> bool {
        self.coeffs.iter().all(Quaternion::is_vector)
    }

    pub fn scalar_part(&self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(Quaternion::scalar_part).collect())
    }

    pub fn vector_part(&self) -> Self {
        Self::new(self.coeffs.iter().map(Quaternion::vector_part).collect())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(Quaternion::conj).collect())
    }

    /// `A Ā` as a central polynomial.
    pub fn norm(&self) -> Poly<S> {
        (self * &self.conj()).scalar_part()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|q| q.scale(c)).collect())
    }

    /// `p(t)·self` for a central polynomial `p`.
    pub fn scale_poly(&self, p: &Poly<S>) -> Self {
        self * &Self::from_real(p)
    }

    pub fn left_mul_const(&self, q: &Quaternion<S>) -> Self {
        Self::new(self.coeffs.iter().map(|c| q * c).collect())
    }

    pub fn right_mul_const(&self, q: &Quaternion<S>) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn eval(&self, t: &S) -> Quaternion<S> {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::zero(), |acc, c| acc.scale(t) + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&S::from_int(i as i64)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut out = vec![Quaternion::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&(S::one() / S::from_int(i as i64 + 1)))),
        );
        Self::new(out)
    }

    /// Coefficients of the expansion in powers of `(t - at)`.
    pub fn taylor(&self, at: &S) -> Vec<Quaternion<S>> {
        let comps = self.components().map(|p| p.taylor_coefficients(at));
        let n = self.coeffs.len();
        (0..n)
            .map(|i| {
                let g = |v: &Vec<S>| v.get(i).cloned().unwrap_or_else(S::zero);
                Quaternion::new(g(&comps[0]), g(&comps[1]), g(&comps[2]), g(&comps[3]))
            })
            .collect()
    }

    /// Componentwise scalar product `⟨self, o⟩` as a central polynomial.
    pub fn dot(&self, o: &Self) -> Poly<S> {
        let a = self.components();
        let b = o.components();
        a.iter()
            .zip(&b)
            .fold(Poly::zero(), |acc, (p, q)| &acc + &(p * q))
    }

    /// Right division with the quotient on the right: `self = d·q + r` with
    /// `deg r < deg d`.
    pub fn div_rem_right(&self, d: &Self) -> (Self, Self) {
        let lead_inv = d
            .leading()
            .inv()
            .expect("division by a polynomial with non-invertible lead");
        let mut r = self.clone();
        let mut q = vec![Quaternion::zero(); self.coeffs.len().saturating_sub(d.coeffs.len()) + 1];
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let c = &lead_inv * &r.leading();
            q[shift] = q[shift].clone() + c.clone();
            let mut term = vec![Quaternion::zero(); shift];
            term.extend(d.coeffs.iter().map(|dc| dc * &c));
            let mut next = r.coeffs.clone();
            for (i, tc) in term.into_iter().enumerate() {
                next[i] = next[i].clone() - tc;
            }
            next.pop();
            r = Self::new(next);
        }
        (Self::new(q), r)
    }

    /// Division with the quotient on the left: `self = q·d + r`.
    pub fn div_rem_left(&self, d: &Self) -> (Self, Self) {
        let (q, r) = self.conj().div_rem_right(&d.conj());
        (q.conj(), r.conj())
    }

    /// Greatest common left divisor, normalized to leading coefficient 1:
    /// the monic `G` generating the right ideal `self·H[t] + o·H[t]`.
    pub fn left_gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem_right(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.leading().inv().expect("nonzero leading coefficient");
        a.right_mul_const(&inv)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> QuatPoly<T> {
        QuatPoly::new(self.coeffs.iter().map(|q| q.map(&f)).collect())
    }
}

impl QuaternionPolynomial {
    pub fn to_complex(&self) -> BiquaternionPolynomial {
        self.map(|c| GaussianRational::real(c.clone()))
    }

    /// Gcd of the four component polynomials (monic, 0 for the zero polynomial).
    pub fn content(&self) -> RealPolynomial {
        self.components()
            .iter()
            .fold(RealPolynomial::zero(), |acc, p| acc.gcd(p))
    }

    /// The four components as rational functions over a common denominator.
    pub fn over(&self, den: &RealPolynomial) -> [RationalFunction; 4] {
        self.components()
            .map(|c| RationalFunction::new(c, den.clone()))
    }
}

impl BiquaternionPolynomial {
    pub fn split(&self) -> (QuaternionPolynomial, QuaternionPolynomial) {
        (self.map(|c| c.re.clone()), self.map(|c| c.im.clone()))
    }
}

impl<S: Scalar> Add<&QuatPoly<S>> for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn add(self, o: &QuatPoly<S>) -> QuatPoly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        QuatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<S: Scalar> Sub<&QuatPoly<S>> for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn sub(self, o: &QuatPoly<S>) -> QuatPoly<S> {
        let n = self.coeffs.len().max(o.coeffs.len());
        QuatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<S: Scalar> Mul<&QuatPoly<S>> for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn mul(self, o: &QuatPoly<S>) -> QuatPoly<S> {
        if self.is_zero() || o.is_zero() {
            return QuatPoly::zero();
        }
        let mut out = vec![Quaternion::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        QuatPoly::new(out)
    }
}

impl<S: Scalar> Neg for &QuatPoly<S> {
    type Output = QuatPoly<S>;
    fn neg(self) -> QuatPoly<S> {
        QuatPoly::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Scalar> $tr for QuatPoly<S> {
            type Output = QuatPoly<S>;
            fn $m(self, o: QuatPoly<S>) -> QuatPoly<S> {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<S: Scalar + fmt::Display> fmt::Display for QuatPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let comps = self.components();
        let mut first = true;
        for (p, n) in comps.iter().zip(names) {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p}){n}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for QuatPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl Serialize for QuaternionPolynomial {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuaternionPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Self::new(Vec::<RationalQuaternion>::deserialize(d)?))
    }
}

/// Hodograph `F = A î Ā`.
pub fn hodograph_f<S: Scalar>(a: &QuatPoly<S>) -> QuatPoly<S> {
    &a.right_mul_const(&Quaternion::i()) * &a.conj()
}

/// `𝓕 = A (1 + î) Ā`; its scalar part is `A Ā` and its vector part is `F`.
pub fn slope_field<S: Scalar>(a: &QuatPoly<S>) -> QuatPoly<S> {
    &a.right_mul_const(&Quaternion::from_ints(1, 1, 0, 0)) * &a.conj()
}

/// Outcome of the h-reduced test.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedReport {
    pub reduced: bool,
    /// Monic gcd of the components of `A h Ā`.
    pub content: RealPolynomial,
}

/// `A` is h-reduced iff the components of `A h Ā` have constant gcd.
pub fn is_h_reduced(a: &QuaternionPolynomial, h: &RationalQuaternion) -> ReducedReport {
    assert!(
        !h.vector_part().is_zero(),
        "h must have a nonzero vector part"
    );
    let p = &a.right_mul_const(h) * &a.conj();
    let content = p.content();
    ReducedReport {
        reduced: content.is_constant(),
        content,
    }
}

/// Pythagorean quadruple `(ẋ, ẏ, ż, σ)` from `u, v, p, q, w`.
pub fn pythagorean_quadruple(
    u: &RealPolynomial,
    v: &RealPolynomial,
    p: &RealPolynomial,
    q: &RealPolynomial,
    w: &RealPolynomial,
) -> [RealPolynomial; 4] {
    let two = RealPolynomial::constant(Rational::from_integer(2.into()));
    let (uu, vv, pp, qq) = (u * u, v * v, p * p, q * q);
    let x = w * &(&(&uu + &vv) - &(&pp + &qq));
    let y = &(w * &two) * &(&(u * q) + &(v * p));
    let z = &(w * &two) * &(&(v * q) - &(u * p));
    let s = w * &(&(&uu + &vv) + &(&pp + &qq));
    [x, y, z, s]
}

/// Quaternion polynomial from integer coefficient rows `[w, x, y, z]`.
pub fn qpoly(rows: &[[i64; 4]]) -> QuaternionPolynomial {
    QuatPoly::new(
        rows.iter()
            .map(|&[w, x, y, z]| Quaternion::from_ints(w, x, y, z))
            .collect(),
    )
}

/// `ComplexPolynomial` components of a biquaternion polynomial.
pub fn complex_components(p: &BiquaternionPolynomial) -> [ComplexPolynomial; 4] {
    p.components()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn eq9() -> QuaternionPolynomial {
        // t² + k t + i + j
        qpoly(&[[0, 1, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
    }

    #[test]
    fn unit_table() {
        let (i, j, k) = (
            RationalQuaternion::i(),
            RationalQuaternion::j(),
            RationalQuaternion::k(),
        );
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -RationalQuaternion::one());
    }

    #[test]
    fn linear_product() {
        let a = qpoly(&[[0, 1, 0, 0], [1, 0, 0, 0]]);
        let b = qpoly(&[[0, -1, 0, 0], [1, 0, 0, 0]]);
        assert_eq!(&a * &b, qpoly(&[[1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]));
    }

    #[test]
    fn norm_of_eq9() {
        assert_eq!(eq9().norm(), RealPolynomial::from_ints(&[2, 0, 1, 0, 1]));
    }

    #[test]
    fn hodograph_of_eq9() {
        let f = hodograph_f(&eq9());
        assert!(f.is_vector());
        assert_eq!(f.coeff(0), RationalQuaternion::from_ints(0, 0, 2, 0));
        assert_eq!(f.coeff(2), RationalQuaternion::from_ints(0, -1, 0, -2));
        assert_eq!(f.norm(), eq9().norm().pow(2));
        assert_eq!(
            hodograph_f(&QuaternionPolynomial::one()),
            QuatPoly::constant(RationalQuaternion::i())
        );
    }

    #[test]
    fn slope_field_of_eq9() {
        let a = eq9();
        let sf = slope_field(&a);
        assert_eq!(sf.scalar_part(), a.norm());
        assert_eq!(sf.vector_part(), hodograph_f(&a));
        assert_eq!(
            sf.components()[1],
            RealPolynomial::from_ints(&[0, 0, -1, 0, 1])
        );
        assert_eq!(
            slope_field(&QuaternionPolynomial::one()),
            qpoly(&[[1, 1, 0, 0]])
        );
    }

    #[test]
    fn taylor_of_example3_slope_field() {
        // A = t³ + (k − 2)t² − k t + k
        let a = qpoly(&[[0, 0, 0, 1], [0, 0, 0, -1], [-2, 0, 0, 1], [1, 0, 0, 0]]);
        let sf = slope_field(&a);
        let at0 = sf.taylor(&int(0));
        assert_eq!(at0[0], RationalQuaternion::from_ints(1, -1, 0, 0));
        assert_eq!(at0[1], RationalQuaternion::from_ints(-2, 2, 0, 0));
        let at1 = sf.taylor(&int(1));
        assert_eq!(at1[0], RationalQuaternion::from_ints(2, 0, -2, 0));
        assert_eq!(at1[1], RationalQuaternion::from_ints(4, 0, -4, 0));
    }

    #[test]
    fn h_reduced_checks() {
        let i = RationalQuaternion::i();
        assert!(is_h_reduced(&eq9(), &i).reduced);
        let real = QuaternionPolynomial::from_real(&RealPolynomial::from_ints(&[1, 0, 1]));
        let a = &real * &qpoly(&[[0, 1, 0, 0], [1, 0, 0, 0]]);
        let rep = is_h_reduced(&a, &i);
        assert!(!rep.reduced);
        // the real factor appears squared, the right factor t + i once more
        assert_eq!(rep.content, RealPolynomial::from_ints(&[1, 0, 1]).pow(3));
        let rep = is_h_reduced(&qpoly(&[[0, -1, 0, 0], [1, 0, 0, 0]]), &i);
        assert!(!rep.reduced);
        assert_eq!(rep.content, RealPolynomial::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn quadruple_identity() {
        let p = |c: &[i64]| RealPolynomial::from_ints(c);
        let one = p(&[1]);
        let z = RealPolynomial::zero();
        let [x, y, zz, s] = pythagorean_quadruple(&one, &z, &z, &z, &one);
        assert_eq!(
            (x, y, zz, s),
            (one.clone(), z.clone(), z.clone(), one.clone())
        );
        let [x, y, zz, s] = pythagorean_quadruple(&p(&[0, 1]), &one, &z, &z, &one);
        assert_eq!(x, p(&[1, 0, 1]));
        assert_eq!(&(&(&x * &x) + &(&y * &y)) + &(&zz * &zz), &s * &s);
    }

    #[test]
    fn division_roundtrip() {
        let a = eq9();
        let b = qpoly(&[[1, 2, 0, -1], [0, 1, 1, 0]]);
        let prod = &a * &b;
        let (q, r) = prod.div_rem_right(&a);
        assert!(r.is_zero());
        assert_eq!(q, b);
        let (q, r) = prod.div_rem_left(&b);
        assert!(r.is_zero());
        assert_eq!(q, a);
    }

    #[test]
    fn serde_roundtrip() {
        let a = eq9();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"[["0","1","1","0"],["0","0","0","1"],["1","0","0","0"]]"#
        );
        let back: QuaternionPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
