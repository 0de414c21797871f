//! Serde adapters: rationals as `"p/q"` strings, polynomials as ascending
//! coefficient arrays.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::scalar::{format_rational, parse_rational, GaussianRational, Rational};
use crate::algebra::RealPolynomial;

fn parse<E: serde::de::Error>(s: &str) -> Result<Rational, E> {
    parse_rational(s).ok_or_else(|| E::custom(format!("invalid rational {s:?}")))
}

/// Accepts a string or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RatRepr {
    Str(String),
    Int(i64),
}

impl RatRepr {
    fn into_rational<E: serde::de::Error>(self) -> Result<Rational, E> {
        match self {
            RatRepr::Str(s) => parse(&s),
            RatRepr::Int(i) => Ok(Rational::from_integer(i.into())),
        }
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RatRepr::deserialize(d)?.into_rational()
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(format_rational).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<RatRepr>::deserialize(d)?
            .into_iter()
            .map(RatRepr::into_rational)
            .collect()
    }
}

pub mod rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(format_rational).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<RatRepr>::deserialize(d)?
            .map(RatRepr::into_rational)
            .transpose()
    }
}

pub mod real_poly {
    use super::*;

    pub fn serialize<S: Serializer>(p: &RealPolynomial, s: S) -> Result<S::Ok, S::Error> {
        rational_vec::serialize(p.coeffs(), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RealPolynomial, D::Error> {
        Ok(RealPolynomial::new(rational_vec::deserialize(d)?))
    }
}

pub mod real_poly_opt {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<RealPolynomial>, s: S) -> Result<S::Ok, S::Error> {
        p.as_ref()
            .map(|p| p.coeffs().iter().map(format_rational).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<RealPolynomial>, D::Error> {
        let v = Option::<Vec<RatRepr>>::deserialize(d)?;
        v.map(|v| {
            v.into_iter()
                .map(RatRepr::into_rational)
                .collect::<Result<Vec<_>, _>>()
                .map(RealPolynomial::new)
        })
        .transpose()
    }
}

#[derive(Serialize, Deserialize)]
struct GaussRepr {
    #[serde(with = "rational")]
    re: Rational,
    #[serde(with = "rational", default = "zero")]
    im: Rational,
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GaussRepr {
            re: self.re.clone(),
            im: self.im.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let g = GaussRepr::deserialize(d).map_err(D::Error::custom)?;
        Ok(GaussianRational::new(g.re, g.im))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    #[serde(with = "real_poly")]
    num: RealPolynomial,
    #[serde(with = "real_poly", default = "one_poly")]
    den: RealPolynomial,
}

fn one_poly() -> RealPolynomial {
    RealPolynomial::one()
}

impl Serialize for crate::algebra::RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for crate::algebra::RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        if r.den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(crate::algebra::RationalFunction::new(r.num, r.den))
    }
}
