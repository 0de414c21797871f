//! Pre-images of vectorial hodographs: given `F` with `N(F) = σ²`, find
//! `A` and `c > 0` with `F = c·A î Ā`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::partial::divisors;
use crate::algebra::{poly_square_root, rational_sqrt, Rational, RealPolynomial, SquareRootError};
use crate::quaternion::{
    hodograph_f, QuatPoly, Quaternion, QuaternionPolynomial, RationalQuaternion,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FactorError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("norm {0} of the leading coefficient is not a rational square")]
    NotRepresentable(String),
    #[error("hodograph has the real factor {0}")]
    HasRealFactor(RealPolynomial),
    #[error("hodograph is not Pythagorean: {0}")]
    NotPH(SquareRootError),
    #[error("could not split off a left factor for {0}")]
    UnsupportedSplittingField(RealPolynomial),
}

/// `scale · A î Ā` equals the factored hodograph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaledPreimage {
    #[serde(rename = "A")]
    pub a: QuaternionPolynomial,
    #[serde(with = "crate::serde_util::rational")]
    pub scale: Rational,
}

impl ScaledPreimage {
    pub fn hodograph(&self) -> QuaternionPolynomial {
        hodograph_f(&self.a).scale(&self.scale)
    }
}

/// One peeling step: `current = left · inner · conj(left)` with
/// `N(left) = factor`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeelStep {
    pub factor: RealPolynomial,
    pub left: QuaternionPolynomial,
    pub current: QuaternionPolynomial,
    pub inner: QuaternionPolynomial,
}

/// `y` and `c > 0` with `c · y î ȳ = f`, `y` with coprime integer components.
pub fn leading_split(
    f: &RationalQuaternion,
) -> Result<(RationalQuaternion, Rational), FactorError> {
    if !f.is_vector() {
        return Err(FactorError::Precondition(
            "leading coefficient has a scalar part".into(),
        ));
    }
    if f.is_zero() {
        return Err(FactorError::Precondition(
            "leading coefficient is zero".into(),
        ));
    }
    let n = f.norm();
    let len = rational_sqrt(&n).ok_or_else(|| FactorError::NotRepresentable(n.to_string()))?;
    let u = f.scale(&(Rational::one() / &len));
    let i = RationalQuaternion::i();
    let y = if u == -i.clone() {
        RationalQuaternion::j()
    } else {
        RationalQuaternion::one() - &u * &i
    };
    let y = primitive_quaternion(&y);
    let c = len / y.norm();
    debug_assert_eq!((&(&y * &i) * &y.conj()).scale(&c), *f);
    Ok((y, c))
}

fn primitive_quaternion(q: &RationalQuaternion) -> RationalQuaternion {
    let comps = q.to_array();
    let lcm = crate::algebra::scalar::denominator_lcm(comps.iter());
    let gcd = crate::algebra::scalar::numerator_gcd(comps.iter());
    let k = Rational::new(lcm * BigInt::one(), gcd);
    q.scale(&k.abs())
}

/// Monic quadratic factors of `σ` over the rationals, ascending by
/// `(t¹, t⁰)` coefficients. `None` when the divisor search would be too
/// large to run; the caller then peels the whole remainder at once.
pub fn rational_quadratic_factors(sigma: &RealPolynomial) -> Option<Vec<RealPolynomial>> {
    if sigma.deg() < 2 {
        return Some(Vec::new());
    }
    let (_, prim) = sigma.primitive_part();
    let lead = prim.leading().to_integer();
    let v0 = prim.eval(&Rational::zero()).to_integer();
    let v1 = prim.eval(&Rational::one()).to_integer();
    let vm1 = prim.eval(&-Rational::one()).to_integer();
    if v0.is_zero() || v1.is_zero() || vm1.is_zero() {
        // σ has a real root: the caller reports a real factor elsewhere
        return Some(Vec::new());
    }
    let an = divisors(&lead.abs()).ok()?;
    let d0 = divisors(&v0.abs()).ok()?;
    let d1 = divisors(&v1.abs()).ok()?;
    let work = an.len() * d0.len() * d1.len() * 4;
    if work > 400_000 {
        return None;
    }
    let mut found: Vec<RealPolynomial> = Vec::new();
    for a in &an {
        for c0 in &d0 {
            for c in [c0.clone(), -c0.clone()] {
                for e0 in &d1 {
                    for e in [e0.clone(), -e0.clone()] {
                        // a t² + b t + c with value e at t = 1
                        let b = &e - a - &c;
                        let em = a - &b + &c;
                        if em.is_zero() || !(&vm1 % &em).is_zero() {
                            continue;
                        }
                        if &b * &b - BigInt::from(4) * a * &c >= BigInt::zero() {
                            continue;
                        }
                        let q = RealPolynomial::new(vec![
                            Rational::from_integer(c.clone()),
                            Rational::from_integer(b.clone()),
                            Rational::from_integer(a.clone()),
                        ])
                        .monic();
                        if !found.contains(&q) && prim.div_exact(&q).is_some() {
                            found.push(q);
                        }
                    }
                }
            }
        }
    }
    found.sort_by_key(|x| (x.coeff(1), x.coeff(0)));
    Some(found)
}

/// Splits `current = L · inner · L̄` where `L` is the monic left gcd of
/// `current` and the real factor `m` of its speed.
pub fn peel(current: &QuaternionPolynomial, m: &RealPolynomial) -> Result<PeelStep, FactorError> {
    let left = current.left_gcd(&QuatPoly::from_real(m));
    if left.deg() * 2 != m.deg() {
        return Err(FactorError::UnsupportedSplittingField(m.clone()));
    }
    let (p, r) = current.div_rem_right(&left);
    let (inner, r2) = p.div_rem_left(&left.conj());
    if !r.is_zero() || !r2.is_zero() || !inner.is_vector() {
        return Err(FactorError::UnsupportedSplittingField(m.clone()));
    }
    debug_assert_eq!(&(&left * &inner) * &left.conj(), *current);
    Ok(PeelStep {
        factor: m.clone(),
        left,
        current: current.clone(),
        inner,
    })
}

/// Factors a content-free vectorial hodograph.
pub fn factor_hodograph(f: &QuaternionPolynomial) -> Result<ScaledPreimage, FactorError> {
    factor_hodograph_traced(f).map(|(p, _)| p)
}

/// As [`factor_hodograph`], also returning the peeling steps in order.
pub fn factor_hodograph_traced(
    f: &QuaternionPolynomial,
) -> Result<(ScaledPreimage, Vec<PeelStep>), FactorError> {
    if f.is_zero() {
        return Err(FactorError::Precondition("hodograph is zero".into()));
    }
    if !f.is_vector() {
        return Err(FactorError::Precondition(
            "hodograph has a scalar part".into(),
        ));
    }
    let content = f.content();
    if !content.is_constant() {
        return Err(FactorError::HasRealFactor(content));
    }
    let sigma = poly_square_root(&f.norm())
        .map_err(FactorError::NotPH)?
        .root;
    let mut remaining = sigma;
    let mut current = f.clone();
    let mut steps = Vec::new();
    let mut a0 = QuaternionPolynomial::one();
    while remaining.deg() > 0 {
        let m = rational_quadratic_factors(&remaining)
            .and_then(|v| v.into_iter().next())
            .unwrap_or_else(|| remaining.clone());
        let step = peel(&current, &m)?;
        remaining = remaining.div_exact(&m).expect("factor divides the speed");
        a0 = &a0 * &step.left;
        current = step.inner.clone();
        steps.push(step);
    }
    if current.deg() != 0 {
        return Err(FactorError::UnsupportedSplittingField(remaining));
    }
    let (y, scale) = leading_split(&current.leading())?;
    let a = a0.right_mul_const(&y);
    let out = ScaledPreimage { a, scale };
    if out.hodograph() != *f {
        return Err(FactorError::Precondition(
            "factorization failed to reproduce the input".into(),
        ));
    }
    Ok((out, steps))
}

impl Quaternion<Rational> {
    /// `c·y î ȳ` for a split pair.
    pub fn from_split(y: &RationalQuaternion, c: &Rational) -> RationalQuaternion {
        (&(y * &RationalQuaternion::i()) * &y.conj()).scale(c)
    }
}
